"""Backend equivalence: the compiled kernels and the numpy fallback must
agree bitwise, and both must agree with the naive oracles."""

import numpy as np
import pytest

from qhash import kernels

from oracles import naive_bias, naive_dft

BACKENDS = kernels.available_backends()

requires_compiled = pytest.mark.skipif(
    "compiled" not in BACKENDS, reason="compiled kernels not built"
)


def random_case(rng, q):
    size = int(rng.integers(1, min(8, q)))
    return np.sort(rng.choice(q, size=size, replace=False)).astype(np.int64)


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_dft_all_matches_oracle(name):
    mod = BACKENDS[name]
    rng = np.random.default_rng(1)
    for q in (3, 7, 31, 101):
        roots = kernels.unit_roots(q)
        elems = random_case(rng, q)
        table = mod.dft_all(roots, elems)
        for w in (0, 1, q // 2, q - 1):
            assert table[w] == pytest.approx(naive_dft(q, elems, w), abs=1e-12)


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_max_abs_dft_matches_oracle(name):
    mod = BACKENDS[name]
    rng = np.random.default_rng(2)
    for q in (3, 7, 31):
        roots = kernels.unit_roots(q)
        elems = random_case(rng, q)
        got = mod.max_abs_dft(roots, elems) / len(elems)
        assert got == pytest.approx(naive_bias(q, elems), abs=1e-12)


@requires_compiled
def test_backends_agree_bitwise():
    rng = np.random.default_rng(3)
    py, cc = BACKENDS["python"], BACKENDS["compiled"]
    for q in (5, 31, 101, 257):
        roots = kernels.unit_roots(q)
        for _ in range(5):
            elems = random_case(rng, q)
            assert py.max_abs_dft(roots, elems) == cc.max_abs_dft(roots, elems)
            f_py = py.dft_all(roots, elems)
            f_cc = cc.dft_all(roots, elems)
            assert np.array_equal(f_py, f_cc)
            b_out = int(elems[0])
            in_mask = np.ones(q, dtype=bool)
            in_mask[elems] = False
            candidates = np.flatnonzero(in_mask).astype(np.int64)[:17]
            if len(candidates):
                assert np.array_equal(
                    py.swap_scan_max(roots, f_py, b_out, candidates),
                    cc.swap_scan_max(roots, f_cc, b_out, candidates),
                )


@requires_compiled
def test_rs_delta_scan_backends_agree_bitwise():
    rng = np.random.default_rng(4)
    py, cc = BACKENDS["python"], BACKENDS["compiled"]
    for q, k in ((5, 2), (7, 3), (11, 2)):
        roots = kernels.unit_roots(q)
        elems = random_case(rng, q)
        fb = py.dft_all(roots, elems)
        points = np.arange(1, min(q, 5), dtype=np.int64)
        a = py.rs_delta_scan(fb, points, k, q, 1, q**k)
        b = cc.rs_delta_scan(fb, points, k, q, 1, q**k)
        assert a == b


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_swap_scan_equals_from_scratch_evaluation(name):
    mod = BACKENDS[name]
    rng = np.random.default_rng(5)
    q = 31
    roots = kernels.unit_roots(q)
    elems = random_case(rng, q)
    f = mod.dft_all(roots, elems)
    b_out = int(elems[-1])
    in_mask = np.ones(q, dtype=bool)
    in_mask[elems] = False
    candidates = np.flatnonzero(in_mask).astype(np.int64)
    scanned = mod.swap_scan_max(roots, f, b_out, candidates)
    base = [int(e) for e in elems if int(e) != b_out]
    for c, got in zip(candidates, scanned):
        swapped = np.array(sorted(base + [int(c)]), dtype=np.int64)
        assert got == pytest.approx(mod.max_abs_dft(roots, swapped), abs=1e-10)


def test_rs_delta_scan_chunking_is_invisible():
    mod = BACKENDS["python"]
    q, k = 7, 3
    roots = kernels.unit_roots(q)
    elems = np.array([1, 2, 4], dtype=np.int64)
    fb = mod.dft_all(roots, elems)
    points = np.arange(1, 7, dtype=np.int64)
    whole = mod.rs_delta_scan(fb, points, k, q, 1, q**k)
    tiny_chunks = mod.rs_delta_scan(fb, points, k, q, 1, q**k, chunk=13)
    assert whole == tiny_chunks


def test_unit_roots_cached_and_readonly():
    a = kernels.unit_roots(17)
    assert a is kernels.unit_roots(17)
    assert not a.flags.writeable
    assert a[0] == 1.0 + 0.0j
