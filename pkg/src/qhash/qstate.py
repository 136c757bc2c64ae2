"""Phase-encoded hash states and equality tests on them.

A hash state for input w packs the ``T = |B|`` phases e^(2*pi*i*w*b/q)
into the first T amplitudes of an s-qubit register (s = ceil(log2 T)),
each scaled by 1/sqrt(T). Inner products between two such states reduce to
normalized character sums, which is what makes the collision-resistance
scan exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from . import kernels
from .bias import BiasSet
from .errors import DimensionMismatch, FieldMismatch, MalformedFile, RangeError
from .field import FieldElement

NORM_TOL = 1e-10

# Monte-Carlo trials are grouped in fixed blocks; block b of a run is keyed
# by (seed, b), so outcomes never depend on how blocks are assigned to
# workers.
MC_BLOCK = 4096

_MASK64 = (1 << 64) - 1


class QuantumHashState:
    """Unit-norm complex amplitude vector over 2**s basis states."""

    __slots__ = ("num_qubits", "active_dim", "amplitudes")

    def __init__(self, num_qubits: int, active_dim: int, amplitudes: np.ndarray):
        amps = np.ascontiguousarray(np.asarray(amplitudes, dtype=np.complex128))
        dim = 2**num_qubits
        if num_qubits < 0:
            raise RangeError(f"num_qubits must be >= 0, got {num_qubits}")
        if amps.shape != (dim,):
            raise DimensionMismatch(
                f"expected {dim} amplitudes for {num_qubits} qubits, got {amps.shape}"
            )
        if not 1 <= active_dim <= dim:
            raise RangeError(f"active_dim {active_dim} outside [1, {dim}]")
        if active_dim < dim and np.any(amps[active_dim:] != 0):
            raise RangeError("padding amplitudes beyond active_dim must be exactly zero")
        norm_sq = float(np.sum(amps.real**2 + amps.imag**2))
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise RangeError(f"state norm^2 = {norm_sq!r} deviates from 1 beyond {NORM_TOL}")
        amps.flags.writeable = False
        object.__setattr__(self, "num_qubits", num_qubits)
        object.__setattr__(self, "active_dim", active_dim)
        object.__setattr__(self, "amplitudes", amps)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QuantumHashState is immutable")

    @property
    def dim(self) -> int:
        return 2**self.num_qubits

    def inner_product(self, other: "QuantumHashState") -> complex:
        return inner_product(self, other)

    def to_json(self) -> dict:
        return {
            "s": self.num_qubits,
            "active_dim": self.active_dim,
            "amplitudes": [[float(a.real), float(a.imag)] for a in self.amplitudes],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "QuantumHashState":
        try:
            s = doc["s"]
            active = doc["active_dim"]
            pairs = doc["amplitudes"]
        except (TypeError, KeyError) as exc:
            raise MalformedFile(f"state document missing field: {exc}") from exc
        amps = np.array([complex(re, im) for re, im in pairs], dtype=np.complex128)
        return cls(s, active, amps)

    def __repr__(self) -> str:
        return f"QuantumHashState(s={self.num_qubits}, active_dim={self.active_dim})"


def qubits_for(active_dim: int) -> int:
    """Smallest s with 2**s >= active_dim (0 for a single amplitude)."""
    if active_dim < 1:
        raise RangeError(f"active_dim must be >= 1, got {active_dim}")
    return max(0, (active_dim - 1).bit_length())


def hash_state(bset: BiasSet, w: Union[int, FieldElement]) -> QuantumHashState:
    """Phase-encode w against the sorted elements of B."""
    wv = int(bset.field.coerce(w))
    q = bset.q
    t = bset.size
    s = qubits_for(t)
    roots = kernels.unit_roots(q)
    amps = np.zeros(2**s, dtype=np.complex128)
    scale = 1.0 / math.sqrt(t)
    for j, b in enumerate(bset.elements):
        amps[j] = roots[(wv * b) % q] * scale
    return QuantumHashState(s, t, amps)


def inner_product(a: QuantumHashState, b: QuantumHashState) -> complex:
    """sum_j a_j * conj(b_j); magnitude bounded by 1 for unit vectors."""
    if a.num_qubits != b.num_qubits or a.active_dim != b.active_dim:
        raise DimensionMismatch(
            f"state shapes differ: (s={a.num_qubits}, T={a.active_dim}) vs "
            f"(s={b.num_qubits}, T={b.active_dim})"
        )
    return complex(np.vdot(b.amplitudes, a.amplitudes))


def collision_delta(bset: BiasSet) -> float:
    """Worst-case |<state(w)|state(w')>| over all distinct pairs in F_q.

    Pairwise inner products depend only on the difference w' - w, so the
    exhaustive pair scan collapses to the q-1 nonzero character sums.
    """
    if bset.q < 2:
        raise RangeError("collision scan needs q >= 2")
    numer = kernels.max_abs_dft(
        kernels.unit_roots(bset.q), kernels.as_elements_array(bset.elements)
    )
    return numer / bset.size


def swap_test_probability(a: QuantumHashState, b: QuantumHashState) -> float:
    """Probability the swap test reports 'equal': (1 + |<a|b>|^2) / 2."""
    overlap = abs(inner_product(a, b))
    return 0.5 * (1.0 + overlap * overlap)


def reverse_test_probability(
    bset: BiasSet, v: Union[int, FieldElement], state_of_w: QuantumHashState
) -> float:
    """Uncompute the phases of v, project on the uniform start state.

    Equals |<state(v)|state(w)>|^2; the uncompute-and-project route is kept
    as an independent path rather than delegating to inner_product.
    """
    vv = int(bset.field.coerce(v))
    t = bset.size
    if state_of_w.active_dim != t or state_of_w.num_qubits != qubits_for(t):
        raise DimensionMismatch(
            f"state was not built from a size-{t} set over F_{bset.q}"
        )
    roots = kernels.unit_roots(bset.q)
    amp = 0.0 + 0.0j
    scale = 1.0 / math.sqrt(t)
    for j, b in enumerate(bset.elements):
        unphased = state_of_w.amplitudes[j] * np.conj(roots[(vv * b) % bset.q])
        amp += scale * unphased
    return float(abs(amp) ** 2)


@dataclass(frozen=True)
class EqualityTestOutcome:
    """Result of a simulated repeated equality test."""

    verdict: str
    trials: int
    equal_count: int
    estimated_prob: float

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "trials": self.trials,
            "equal_count": self.equal_count,
            "estimated_prob": self.estimated_prob,
        }


def _bernoulli_count(p: float, trials: int, seed: int, workers: int = 1) -> int:
    """Count successes over `trials` draws, block-keyed for reproducibility."""
    blocks = [(i, min(MC_BLOCK, trials - i)) for i in range(0, trials, MC_BLOCK)]

    def run_block(args) -> int:
        offset, length = args
        rng = np.random.Generator(
            np.random.Philox(key=[seed & _MASK64, offset // MC_BLOCK])
        )
        return int(np.count_nonzero(rng.random(length) < p))

    if workers <= 1:
        return sum(run_block(b) for b in blocks)
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(run_block, blocks))


def simulate_equality_test(
    kind: str,
    a: QuantumHashState,
    b: QuantumHashState,
    trials: int,
    seed: int,
    workers: int = 1,
) -> EqualityTestOutcome:
    """Monte-Carlo draws of the swap or reverse equality test.

    Each trial accepts with the exact analytic probability for the pair
    (swap: (1+|<a|b>|^2)/2, reverse: |<a|b>|^2). Equal states accept every
    trial, so a single rejection certifies inequality; the verdict is
    'equal' iff no trial rejected.
    """
    if trials < 1:
        raise RangeError(f"trials must be >= 1, got {trials}")
    if kind == "swap":
        p = swap_test_probability(a, b)
    elif kind == "reverse":
        overlap = abs(inner_product(a, b))
        p = overlap * overlap
    else:
        raise RangeError(f"kind must be 'swap' or 'reverse', got {kind!r}")
    count = _bernoulli_count(p, trials, seed, workers=workers)
    verdict = "equal" if count == trials else "unequal"
    return EqualityTestOutcome(verdict, trials, count, count / trials)


def amplitude_encoding(v: int, k: int) -> QuantumHashState:
    """Single-qubit rotation encoding of v in [0, 2**k): (cos, sin) of 2*pi*v/2**k."""
    if k < 1:
        raise RangeError(f"k must be >= 1, got {k}")
    if not 0 <= v < 2**k:
        raise RangeError(f"v = {v} outside [0, 2**{k})")
    angle = 2.0 * math.pi * v / 2**k
    amps = np.array([math.cos(angle), math.sin(angle)], dtype=np.complex128)
    return QuantumHashState(1, 2, amps)


def basis_encoding(v: int, k: int) -> QuantumHashState:
    """Computational basis state |v> on k qubits."""
    if k < 1:
        raise RangeError(f"k must be >= 1, got {k}")
    if not 0 <= v < 2**k:
        raise RangeError(f"v = {v} outside [0, 2**{k})")
    amps = np.zeros(2**k, dtype=np.complex128)
    amps[v] = 1.0
    return QuantumHashState(k, 2**k, amps)
