"""Hash states as sequences of coherent states in time-bin modes.

Each basis index of the single-photon hash state becomes one optical mode
holding a coherent state of amplitude alpha/sqrt(T) carrying that index's
phase. States are represented by their per-mode complex amplitudes
(displaced vacua need no Fock-space truncation) and overlaps use the
closed-form Gaussian formula.
"""

from __future__ import annotations

import cmath
import math
from typing import Sequence, Union

import numpy as np

from . import kernels
from .bias import BiasSet
from .errors import DimensionMismatch, RangeError
from .field import FieldElement
from .generator import ComposedGenerator, Message

MODE_MAGNITUDE_TOL = 1e-10


class CoherentHashState:
    """Per-mode coherent amplitudes, all of common magnitude |alpha|/sqrt(T)."""

    __slots__ = ("alpha", "modes")

    def __init__(self, alpha: complex, modes: Sequence[complex]):
        arr = np.ascontiguousarray(np.asarray(modes, dtype=np.complex128))
        if arr.ndim != 1 or arr.shape[0] < 1:
            raise RangeError("need at least one mode amplitude")
        expected = abs(alpha) / math.sqrt(arr.shape[0])
        if np.any(np.abs(np.abs(arr) - expected) > MODE_MAGNITUDE_TOL):
            raise RangeError(
                f"every mode must have magnitude |alpha|/sqrt(T) = {expected!r}"
            )
        arr.flags.writeable = False
        object.__setattr__(self, "alpha", complex(alpha))
        object.__setattr__(self, "modes", arr)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("CoherentHashState is immutable")

    @property
    def num_modes(self) -> int:
        return self.modes.shape[0]

    def to_json(self) -> dict:
        return {
            "alpha": [self.alpha.real, self.alpha.imag],
            "modes": [[float(m.real), float(m.imag)] for m in self.modes],
        }


def coherent_hash(bset: BiasSet, w: Union[int, FieldElement], alpha: complex) -> CoherentHashState:
    """Mode j carries e^(2*pi*i*w*b_j/q) * alpha/sqrt(T) for the sorted b_j."""
    wv = int(bset.field.coerce(w))
    q = bset.q
    t = bset.size
    roots = kernels.unit_roots(q)
    scale = complex(alpha) / math.sqrt(t)
    modes = np.array(
        [roots[(wv * b) % q] * scale for b in bset.elements], dtype=np.complex128
    )
    return CoherentHashState(alpha, modes)


def coherent_hash_composed(
    gen: ComposedGenerator, w: Message, alpha: complex
) -> CoherentHashState:
    """Same per-mode phase map applied over the n*T composed phases.

    The domain-stretched analogue of :func:`coherent_hash`; the phase in
    mode (l, j) is the composed value b_j * P_w(a_l) mod q.
    """
    codeword = gen.inner.encode(w)
    q = gen.q
    roots = kernels.unit_roots(q)
    scale = complex(alpha) / math.sqrt(gen.size)
    modes = np.array(
        [
            roots[(b * c) % q] * scale
            for c in codeword
            for b in gen.outer.base.elements
        ],
        dtype=np.complex128,
    )
    return CoherentHashState(alpha, modes)


def coherent_overlap(a: CoherentHashState, b: CoherentHashState) -> complex:
    """Product over modes of <beta_j|gamma_j>.

    Per-mode overlap of coherent states:
    exp(-|beta|^2/2 - |gamma|^2/2 + conj(beta)*gamma).
    """
    if a.num_modes != b.num_modes:
        raise DimensionMismatch(
            f"mode counts differ: {a.num_modes} vs {b.num_modes}"
        )
    exponent = 0.0 + 0.0j
    for beta, gamma in zip(a.modes, b.modes):
        exponent += -0.5 * abs(beta) ** 2 - 0.5 * abs(gamma) ** 2 + beta.conjugate() * gamma
    return cmath.exp(complex(exponent))
