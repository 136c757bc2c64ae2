"""One-wayness and qubit-count bounds.

The information-theoretic decoding cap for K uniform messages in s qubits
is 2**s / K; the square-root (pretty-good) measurement gives a computable
lower bound on what a real decoder achieves, so the two sandwich every
constructed hash function. A hand-rolled cyclic Jacobi eigensolver keeps
the module free of external linear-algebra solvers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from .bias import BiasSet
from .errors import DimensionMismatch, RangeError
from .qstate import QuantumHashState, hash_state, qubits_for

EIG_OFFDIAG_TOL = 1e-12
EIG_MAX_DIM = 256
EIG_MAX_SWEEPS = 64

# Eigenvalues at or below this are treated as zero when inverting on the
# support of a density operator.
SUPPORT_CUTOFF = 1e-12


def jacobi_eigh(matrix: np.ndarray, tol: float = EIG_OFFDIAG_TOL) -> Tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a complex Hermitian matrix by cyclic Jacobi.

    Returns (eigenvalues ascending, eigenvectors as columns). Sweeps stop
    once the off-diagonal Frobenius norm falls below ``tol``.
    """
    a = np.array(matrix, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n > EIG_MAX_DIM:
        raise RangeError(f"eigensolver limited to dimension {EIG_MAX_DIM}, got {n}")
    if np.max(np.abs(a - a.conj().T)) > 1e-10 * max(1.0, np.max(np.abs(a))):
        raise RangeError("matrix is not Hermitian")
    v = np.eye(n, dtype=np.complex128)
    if n == 1:
        return np.real(np.diag(a)), v

    # rotations on pivots this small cannot move the off-diagonal norm past
    # the tolerance, and dividing by them underflows
    skip_below = tol / (16.0 * n)
    for _ in range(EIG_MAX_SWEEPS):
        off = math.sqrt(max(0.0, float(np.sum(np.abs(a) ** 2) - np.sum(np.abs(np.diag(a)) ** 2))))
        if off <= tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= skip_below:
                    continue
                phase = apq / mag
                tau = (a[p, p].real - a[q, q].real) / (2.0 * mag)
                if abs(tau) > 1e150:
                    # rotation angle ~ 1/(2*tau); avoids overflow in tau*tau
                    t = 1.0 / (2.0 * tau)
                else:
                    t = (1.0 if tau >= 0.0 else -1.0) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                gpp, gpq = c, -s * phase
                gqp, gqq = s * np.conj(phase), c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = gpp * col_p + gqp * col_q
                a[:, q] = gpq * col_p + gqq * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = np.conj(gpp) * row_p + np.conj(gqp) * row_q
                a[q, :] = np.conj(gpq) * row_p + np.conj(gqq) * row_q
                vec_p = v[:, p].copy()
                vec_q = v[:, q].copy()
                v[:, p] = gpp * vec_p + gqp * vec_q
                v[:, q] = gpq * vec_p + gqq * vec_q
    eigvals = np.real(np.diag(a))
    order = np.argsort(eigvals, kind="stable")
    return eigvals[order], v[:, order]


class StateEnsemble:
    """States of equal dimension with a prior distribution."""

    __slots__ = ("states", "priors")

    def __init__(self, states: Sequence[QuantumHashState], priors: Sequence[float]):
        states = tuple(states)
        if not states:
            raise RangeError("ensemble needs at least one state")
        dim = states[0].dim
        for st in states[1:]:
            if st.dim != dim:
                raise DimensionMismatch("ensemble states have mixed dimensions")
        pri = np.asarray(priors, dtype=np.float64)
        if pri.shape != (len(states),):
            raise DimensionMismatch(
                f"got {pri.shape[0] if pri.ndim == 1 else pri.shape} priors for {len(states)} states"
            )
        if np.any(pri < 0):
            raise RangeError("priors must be nonnegative")
        if abs(float(pri.sum()) - 1.0) > 1e-12:
            raise RangeError(f"priors sum to {float(pri.sum())!r}, expected 1 within 1e-12")
        pri.flags.writeable = False
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "priors", pri)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("StateEnsemble is immutable")

    @classmethod
    def uniform(cls, states: Sequence[QuantumHashState]) -> "StateEnsemble":
        n = len(states)
        return cls(states, np.full(n, 1.0 / n))

    @classmethod
    def from_hash_function(cls, bset: BiasSet) -> "StateEnsemble":
        """Uniform ensemble of the hash states of every message in F_q."""
        return cls.uniform([hash_state(bset, w) for w in range(bset.q)])

    @property
    def dim(self) -> int:
        return self.states[0].dim

    def density_matrix(self) -> np.ndarray:
        rho = np.zeros((self.dim, self.dim), dtype=np.complex128)
        for p, st in zip(self.priors, self.states):
            rho += p * np.outer(st.amplitudes, st.amplitudes.conj())
        return rho


def holevo_nayak_epsilon(s: int, K: int) -> float:
    """Decoding-success cap min(1, 2**s / K) for K uniform messages in s qubits."""
    if s < 0:
        raise RangeError(f"s must be >= 0, got {s}")
    if K < 1:
        raise RangeError(f"K must be >= 1, got {K}")
    return min(1.0, 2.0**s / K)


def min_qubits_lower_bound(K: int, delta: float) -> float:
    """Fewest qubits any collision delta-resistant encoding of K messages can use.

    log2 log2 K - log2 log2 (1 + sqrt(2 / (1 - delta))) - 1
    """
    if K < 4:
        raise RangeError(f"bound needs K >= 4, got {K}")
    if not 0.0 <= delta < 1.0:
        raise RangeError(f"bound needs 0 <= delta < 1, got {delta}")
    inner = 1.0 + math.sqrt(2.0 / (1.0 - delta))
    return math.log2(math.log2(K)) - math.log2(math.log2(inner)) - 1.0


def pgm_success(ensemble: StateEnsemble) -> float:
    """Success probability of the square-root measurement decoder.

    Builds rho = sum_w p_w |psi_w><psi_w|, inverts its square root on the
    support (eigenvalues <= 1e-12 dropped), and sums
    p_w^2 |<psi_w| rho^(-1/2) |psi_w>|^2.
    """
    rho = ensemble.density_matrix()
    eigvals, eigvecs = jacobi_eigh(rho)
    inv_sqrt = np.where(eigvals > SUPPORT_CUTOFF, eigvals, np.inf) ** -0.5
    m = (eigvecs * inv_sqrt) @ eigvecs.conj().T
    total = 0.0
    for p, st in zip(ensemble.priors, ensemble.states):
        amp = st.amplitudes
        total += p * p * abs(np.vdot(amp, m @ amp)) ** 2
    return float(total)


@dataclass(frozen=True)
class ResistanceReport:
    """Bound bundle for a (K; s) hash function with measured collision delta."""

    K: int
    s: int
    epsilon_bound: float
    delta: float
    min_qubits: float
    balanced: bool
    measured_decoder_success: Optional[float] = None

    def to_json(self, provenance: Optional[dict] = None) -> dict:
        doc = {
            "K": self.K,
            "s": self.s,
            "epsilon_bound": self.epsilon_bound,
            "delta": self.delta,
            "min_qubits": self.min_qubits,
            "balanced": self.balanced,
            "measured_decoder_success": self.measured_decoder_success,
        }
        if provenance is not None:
            doc["provenance"] = provenance
        return doc


def resistance_report(
    K: int,
    s: int,
    delta: float,
    measured_decoder_success: Optional[float] = None,
    qubit_margin: float = 3.0,
    delta_cap: float = 0.5,
) -> ResistanceReport:
    """Assemble a report; 'balanced' means s is within ``qubit_margin`` qubits
    of the lower bound and delta does not exceed ``delta_cap``."""
    eps = holevo_nayak_epsilon(s, K)
    floor = min_qubits_lower_bound(K, delta)
    balanced = (s <= floor + qubit_margin) and (delta <= delta_cap)
    if measured_decoder_success is not None and measured_decoder_success > eps + 1e-9:
        raise RangeError(
            f"measured decoder success {measured_decoder_success!r} exceeds the "
            f"information-theoretic cap {eps!r}"
        )
    return ResistanceReport(
        K=K,
        s=s,
        epsilon_bound=eps,
        delta=delta,
        min_qubits=floor,
        balanced=balanced,
        measured_decoder_success=measured_decoder_success,
    )


def balance_report(
    q: int,
    T: int,
    bset: BiasSet,
    measure_decoder: bool = False,
    qubit_margin: float = 3.0,
    delta_cap: float = 0.5,
) -> ResistanceReport:
    """Report for the phase hash built from B: K = q, s = ceil(log2 T)."""
    if bset.q != q:
        raise RangeError(f"bias set is over F_{bset.q}, not F_{q}")
    if bset.size != T:
        raise RangeError(f"bias set has {bset.size} elements, expected {T}")
    measured = None
    if measure_decoder:
        measured = pgm_success(StateEnsemble.from_hash_function(bset))
    return resistance_report(
        K=q,
        s=qubits_for(T),
        delta=bset.bias(),
        measured_decoder_success=measured,
        qubit_margin=qubit_margin,
        delta_cap=delta_cap,
    )
