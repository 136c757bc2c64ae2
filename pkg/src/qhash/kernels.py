"""Kernel backend selection.

The compiled extension is preferred; the numpy fallback is used when the
extension is missing or when ``QHASH_PURE_PYTHON`` is set in the
environment. Both expose the same four functions with bitwise-identical
results, which ``tests/test_kernels.py`` and ``benchmarks/`` rely on.
"""

from __future__ import annotations

import os
from functools import lru_cache

import numpy as np

from . import _kernels_py

if os.environ.get("QHASH_PURE_PYTHON"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:  # pragma: no cover - depends on how the package was built
        _impl = _kernels_py
        BACKEND = "python"

dft_all = _impl.dft_all
max_abs_dft = _impl.max_abs_dft
swap_scan_max = _impl.swap_scan_max
rs_delta_scan = _impl.rs_delta_scan


def available_backends() -> dict:
    """Name -> module map of importable kernel backends (for benchmarks/tests)."""
    backends = {"python": _kernels_py}
    try:
        from . import _kernels_c

        backends["compiled"] = _kernels_c
    except ImportError:
        pass
    return backends


@lru_cache(maxsize=16)
def unit_roots(q: int) -> np.ndarray:
    """Read-only table of the q-th roots of unity, roots[r] = e^(2*pi*i*r/q)."""
    table = np.exp((2j * np.pi / q) * np.arange(q))
    table.flags.writeable = False
    return table


def as_elements_array(elements) -> np.ndarray:
    """Contiguous int64 view of a sorted element list, as the kernels expect."""
    return np.ascontiguousarray(np.asarray(elements, dtype=np.int64))
