import re

import pytest


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion."""
    results = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if getattr(report, "when", "call") != "call":
                continue
            match = re.search(r"test_acceptance\.py::test_criterion_(\d+)", nodeid)
            if match:
                num = int(match.group(1))
                verdict = "PASS" if outcome == "passed" else "FAIL"
                results[num] = (verdict, nodeid.split("::", 1)[1])
    if results:
        terminalreporter.section("acceptance criteria")
        for num in sorted(results):
            verdict, name = results[num]
            terminalreporter.write_line(f"criterion {num}: {verdict} ({name})")


@pytest.fixture
def tmp_set_file(tmp_path):
    """Write a bias-set JSON file and return its path."""

    def write(bset, name="set.json"):
        from qhash.bias import save_bias_set

        path = tmp_path / name
        save_bias_set(bset, str(path))
        return str(path)

    return write
