#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Run from the repository root:

    python benchmarks/bench_kernels.py [--quick]

Results are printed as one table row per case; both backends are checked
to produce identical values before timing.
"""

import argparse
import itertools
import time

import numpy as np

from qhash import kernels


def best_of(fn, repeats=5):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def seeded_elements(q, size, seed=0):
    rng = np.random.default_rng(seed)
    return np.sort(rng.choice(q, size=size, replace=False)).astype(np.int64)


def bench_bias_scan(backends, q, size, repeats):
    roots = kernels.unit_roots(q)
    elems = seeded_elements(q, size)
    results = {name: mod.max_abs_dft(roots, elems) for name, mod in backends.items()}
    assert len(set(results.values())) == 1, "backends disagree"
    return {
        name: best_of(lambda m=mod: m.max_abs_dft(roots, elems), repeats)
        for name, mod in backends.items()
    }


def bench_small_scan_batch(backends, q, size, repeats):
    """Exhaustive-search shape: thousands of tiny scans (call overhead bound)."""
    roots = kernels.unit_roots(q)
    combos = [
        np.array(c, dtype=np.int64) for c in itertools.combinations(range(q), size)
    ]

    def run(mod):
        acc = 0.0
        for combo in combos:
            acc += mod.max_abs_dft(roots, combo)
        return acc

    checks = {name: run(mod) for name, mod in backends.items()}
    assert len(set(checks.values())) == 1, "backends disagree"
    return {name: best_of(lambda m=mod: run(m), repeats) for name, mod in backends.items()}


def bench_swap_scan(backends, q, size, repeats):
    roots = kernels.unit_roots(q)
    elems = seeded_elements(q, size)
    mask = np.ones(q, dtype=bool)
    mask[elems] = False
    candidates = np.flatnonzero(mask).astype(np.int64)
    f = kernels.dft_all(roots, elems)
    checks = {
        name: mod.swap_scan_max(roots, f, int(elems[0]), candidates).sum()
        for name, mod in backends.items()
    }
    assert len(set(checks.values())) == 1, "backends disagree"
    return {
        name: best_of(
            lambda m=mod: m.swap_scan_max(roots, f, int(elems[0]), candidates), repeats
        )
        for name, mod in backends.items()
    }


def bench_delta_scan(backends, q, k, size, repeats):
    roots = kernels.unit_roots(q)
    elems = seeded_elements(q, size)
    fb = kernels.dft_all(roots, elems)
    points = np.arange(1, min(q, 9), dtype=np.int64)
    checks = {
        name: mod.rs_delta_scan(fb, points, k, q, 1, q**k)
        for name, mod in backends.items()
    }
    assert len(set(checks.values())) == 1, "backends disagree"
    return {
        name: best_of(lambda m=mod: m.rs_delta_scan(fb, points, k, q, 1, q**k), repeats)
        for name, mod in backends.items()
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller cases, fewer repeats")
    args = parser.parse_args()

    backends = kernels.available_backends()
    if "compiled" not in backends:
        print("compiled kernels not available; run `python setup.py build_ext --inplace`")
    print(f"backends: {', '.join(sorted(backends))}  (active: {kernels.BACKEND})\n")

    repeats = 3 if args.quick else 5
    cases = []
    if args.quick:
        cases.append(("bias scan q=10007 T=24", bench_bias_scan(backends, 10007, 24, repeats)))
        cases.append(("4495 tiny scans q=31 T=3", bench_small_scan_batch(backends, 31, 3, repeats)))
        cases.append(("swap scan q=1009 T=16", bench_swap_scan(backends, 1009, 16, repeats)))
        cases.append(("delta scan q=31 k=3", bench_delta_scan(backends, 31, 3, 4, repeats)))
    else:
        cases.append(("bias scan q=10007 T=24", bench_bias_scan(backends, 10007, 24, repeats)))
        cases.append(("bias scan q=100003 T=32", bench_bias_scan(backends, 100003, 32, repeats)))
        cases.append(("4495 tiny scans q=31 T=3", bench_small_scan_batch(backends, 31, 3, repeats)))
        cases.append(("23751 tiny scans q=23 T=4", bench_small_scan_batch(backends, 23, 4, repeats)))
        cases.append(("swap scan q=1009 T=16", bench_swap_scan(backends, 1009, 16, repeats)))
        cases.append(("swap scan q=4001 T=24", bench_swap_scan(backends, 4001, 24, repeats)))
        cases.append(("delta scan q=31 k=3", bench_delta_scan(backends, 31, 3, 4, repeats)))
        cases.append(("delta scan q=17 k=4", bench_delta_scan(backends, 17, 4, 4, repeats)))

    width = max(len(name) for name, _ in cases)
    header = f"{'case'.ljust(width)}  {'python':>10}  {'compiled':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, timings in cases:
        py = timings.get("python")
        cc = timings.get("compiled")
        if cc is None:
            print(f"{name.ljust(width)}  {py * 1e3:>8.2f}ms  {'-':>10}  {'-':>8}")
        else:
            print(
                f"{name.ljust(width)}  {py * 1e3:>8.2f}ms  {cc * 1e3:>8.2f}ms  "
                f"{py / cc:>7.1f}x"
            )


if __name__ == "__main__":
    main()
