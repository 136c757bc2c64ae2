"""Numpy fallback for the hot kernels.

Mirrors ``_kernels_c`` operation for operation: accumulation order, the
squared-magnitude formula and the final single sqrt are kept identical so
both backends return bitwise-equal results.
"""

from __future__ import annotations

import numpy as np


def dft_all(roots: np.ndarray, elems: np.ndarray) -> np.ndarray:
    """Character sums F[w] = sum_b roots[(w*b) % q] for every w in [0, q)."""
    q = roots.shape[0]
    w = np.arange(q, dtype=np.int64)
    acc = np.zeros(q, dtype=np.complex128)
    for b in elems:
        acc = acc + roots[(w * int(b)) % q]
    return acc


def max_abs_dft(roots: np.ndarray, elems: np.ndarray) -> float:
    """max over w != 0 of |F[w]|, via one squared-magnitude scan."""
    acc = dft_all(roots, elems)
    mag2 = acc.real * acc.real + acc.imag * acc.imag
    if mag2.shape[0] < 2:
        return 0.0
    return float(np.sqrt(mag2[1:].max()))


def swap_scan_max(
    roots: np.ndarray, f: np.ndarray, b_out: int, candidates: np.ndarray
) -> np.ndarray:
    """For each candidate swap-in element c, the objective of B - {b_out} + {c}.

    ``f`` holds the current character sums of B; the swap update is
    (f - out_term) + in_term per w, so each candidate costs one O(q) pass.
    """
    q = roots.shape[0]
    w = np.arange(q, dtype=np.int64)
    base = f - roots[(w * int(b_out)) % q]
    out = np.empty(len(candidates), dtype=np.float64)
    for i, c in enumerate(candidates):
        g = base + roots[(w * int(c)) % q]
        mag2 = g.real * g.real + g.imag * g.imag
        out[i] = np.sqrt(mag2[1:].max()) if q > 1 else 0.0
    return out


def rs_delta_scan(
    fb: np.ndarray,
    points: np.ndarray,
    k: int,
    q: int,
    start: int,
    stop: int,
    chunk: int = 65536,
) -> float:
    """max over message indices in [start, stop), index 0 (zero tuple) skipped.

    Message index idx encodes coefficients u_i = (idx // q**i) % q; the
    objective is |sum_l fb[P_u(points[l])]|.
    """
    lo = max(int(start), 1)
    hi = int(stop)
    best = 0.0
    powers = [q**i for i in range(k)]
    while lo < hi:
        block = np.arange(lo, min(lo + chunk, hi), dtype=np.int64)
        digits = [(block // p) % q for p in powers]
        acc = np.zeros(len(block), dtype=np.complex128)
        for a in points:
            val = np.zeros(len(block), dtype=np.int64)
            for i in range(k - 1, -1, -1):
                val = (val * int(a) + digits[i]) % q
            acc = acc + fb[val]
        mag2 = acc.real * acc.real + acc.imag * acc.imag
        m = float(mag2.max()) if len(block) else 0.0
        if m > best:
            best = m
        lo += chunk
    return float(np.sqrt(best))
