# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: character-sum scans and swap/delta searches.

Kept in lockstep with ``_kernels_py`` (same accumulation order, same
magnitude formula) so the two backends agree bitwise.
"""

import numpy as np

from libc.math cimport sqrt


def dft_all(const double complex[::1] roots, const long long[::1] elems):
    cdef Py_ssize_t q = roots.shape[0]
    cdef Py_ssize_t m = elems.shape[0]
    out = np.zeros(q, dtype=np.complex128)
    cdef double complex[::1] acc = out
    cdef Py_ssize_t w, j
    cdef long long b
    for j in range(m):
        b = elems[j]
        for w in range(q):
            acc[w] = acc[w] + roots[(w * b) % q]
    return out


def max_abs_dft(const double complex[::1] roots, const long long[::1] elems):
    cdef Py_ssize_t q = roots.shape[0]
    cdef Py_ssize_t m = elems.shape[0]
    if q < 2:
        return 0.0
    cdef double complex[::1] acc = np.zeros(q, dtype=np.complex128)
    cdef Py_ssize_t w, j
    cdef long long b
    cdef double best = 0.0, mag2
    for j in range(m):
        b = elems[j]
        for w in range(q):
            acc[w] = acc[w] + roots[(w * b) % q]
    for w in range(1, q):
        mag2 = acc[w].real * acc[w].real + acc[w].imag * acc[w].imag
        if mag2 > best:
            best = mag2
    return sqrt(best)


def swap_scan_max(const double complex[::1] roots, const double complex[::1] f,
                  long long b_out, const long long[::1] candidates):
    cdef Py_ssize_t q = roots.shape[0]
    cdef Py_ssize_t nc = candidates.shape[0]
    out = np.empty(nc, dtype=np.float64)
    cdef double[::1] res = out
    cdef double complex[::1] base = np.empty(q, dtype=np.complex128)
    cdef Py_ssize_t w, i
    cdef long long c
    cdef double best, mag2
    cdef double complex g
    for w in range(q):
        base[w] = f[w] - roots[(w * b_out) % q]
    for i in range(nc):
        c = candidates[i]
        best = 0.0
        for w in range(1, q):
            g = base[w] + roots[(w * c) % q]
            mag2 = g.real * g.real + g.imag * g.imag
            if mag2 > best:
                best = mag2
        res[i] = sqrt(best) if q > 1 else 0.0
    return out


def rs_delta_scan(const double complex[::1] fb, const long long[::1] points,
                  long long k, long long q, long long start, long long stop):
    cdef long long lo = start if start > 1 else 1
    cdef long long idx, rem, val, a
    cdef Py_ssize_t n = points.shape[0]
    cdef Py_ssize_t l, i
    cdef double best = 0.0, mag2
    cdef double complex acc
    cdef long long[::1] digits = np.empty(k, dtype=np.int64)
    for idx in range(lo, stop):
        rem = idx
        for i in range(k):
            digits[i] = rem % q
            rem //= q
        acc = 0
        for l in range(n):
            a = points[l]
            val = 0
            for i in range(k - 1, -1, -1):
                val = (val * a + digits[i]) % q
            acc = acc + fb[val]
        mag2 = acc.real * acc.real + acc.imag * acc.imag
        if mag2 > best:
            best = mag2
    return sqrt(best)
