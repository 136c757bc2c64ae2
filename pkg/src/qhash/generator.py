"""Classical hash families and their phase-encoded composition.

A linear family multiplies by the elements of a low-bias set; a
polynomial-evaluation (Reed-Solomon) family evaluates degree < k message
polynomials at n fixed points. Composing the two stretches the domain from
F_q to F_q^k while the collision bound only degrades by (k-1)/n.
"""

from __future__ import annotations

import math
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from . import kernels
from .bias import BiasSet
from .errors import (
    DomainTooLarge,
    FieldMismatch,
    IndexOutOfRange,
    LengthMismatch,
    MalformedFile,
    RangeError,
)
from .field import FieldElement, Polynomial, PrimeField, make_field
from .qstate import QuantumHashState, qubits_for

Message = Sequence[Union[int, FieldElement]]


class LinearFamily:
    """h_b(w) = b*w mod q for each b in the base set, indexed in sorted order."""

    __slots__ = ("base",)

    def __init__(self, base: BiasSet):
        object.__setattr__(self, "base", base)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("LinearFamily is immutable")

    @property
    def q(self) -> int:
        return self.base.q

    @property
    def size(self) -> int:
        return self.base.size

    def eval(self, index: int, w: Union[int, FieldElement]) -> int:
        if not 0 <= index < self.size:
            raise IndexOutOfRange(f"index {index} outside [0, {self.size})")
        wv = int(self.base.field.coerce(w))
        return (self.base.elements[index] * wv) % self.q


class RSFamily:
    """f_a(w) = P_w(a) for evaluation points a; messages are k-tuples over F_q.

    k = 1 is allowed as the degenerate constant-evaluation family so that
    composition reduces cleanly to the linear case.
    """

    __slots__ = ("field", "k", "points")

    def __init__(self, field: PrimeField, k: int, points: Sequence[int]):
        pts = tuple(int(field.coerce(p)) for p in points)
        if len(set(pts)) != len(pts):
            raise RangeError(f"evaluation points must be distinct, got {list(pts)}")
        if not 1 <= k <= len(pts):
            raise RangeError(f"need 1 <= k <= n, got k={k}, n={len(pts)}")
        if len(pts) > field.q:
            raise RangeError(f"cannot pick {len(pts)} distinct points in F_{field.q}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "points", pts)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RSFamily is immutable")

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def n(self) -> int:
        return len(self.points)

    @classmethod
    def with_default_points(cls, field: PrimeField, k: int, n: int) -> "RSFamily":
        """Points {1, ..., n}; canonical and reproducible."""
        if n >= field.q:
            raise RangeError(f"default points need n < q, got n={n}, q={field.q}")
        return cls(field, k, range(1, n + 1))

    def _message_poly(self, w: Message) -> Polynomial:
        if len(w) != self.k:
            raise LengthMismatch(f"message needs {self.k} symbols, got {len(w)}")
        return Polynomial.from_ints(self.field, (int(self.field.coerce(x)) for x in w))

    def eval(self, index: int, w: Message) -> int:
        if not 0 <= index < self.n:
            raise IndexOutOfRange(f"index {index} outside [0, {self.n})")
        return int(self._message_poly(w).evaluate(self.points[index]))

    def encode(self, w: Message) -> Tuple[int, ...]:
        """Codeword (P_w(a_1), ..., P_w(a_n))."""
        poly = self._message_poly(w)
        return tuple(int(poly.evaluate(a)) for a in self.points)


def rs_encode(fam: RSFamily, w: Message) -> Tuple[int, ...]:
    return fam.encode(w)


def family_eval(fam, index, w) -> int:
    """Evaluate one member function of any family.

    ``index`` is an int for LinearFamily/RSFamily; for ComposedGenerator it
    is either the flat index l*T + j or the pair (l, j).
    """
    if isinstance(fam, ComposedGenerator):
        if isinstance(index, tuple):
            point_index, set_index = index
            return fam.eval(point_index, set_index, w)
        return fam.flat_eval(index, w)
    return fam.eval(index, w)


class ComposedGenerator:
    """outer ∘ inner: g_(l,j)(w) = b_j * P_w(a_l) mod q, flat index l*T + j."""

    __slots__ = ("outer", "inner")

    def __init__(self, outer: LinearFamily, inner: RSFamily):
        if outer.q != inner.q:
            raise FieldMismatch(f"family moduli differ: {outer.q} vs {inner.q}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("ComposedGenerator is immutable")

    @property
    def q(self) -> int:
        return self.outer.q

    @property
    def k(self) -> int:
        return self.inner.k

    @property
    def n(self) -> int:
        return self.inner.n

    @property
    def size(self) -> int:
        """Number of composed functions, n*T."""
        return self.inner.n * self.outer.size

    def eval(self, point_index: int, set_index: int, w: Message) -> int:
        inner_val = self.inner.eval(point_index, w)
        return self.outer.eval(set_index, inner_val)

    def flat_eval(self, flat_index: int, w: Message) -> int:
        t = self.outer.size
        if not 0 <= flat_index < self.size:
            raise IndexOutOfRange(f"flat index {flat_index} outside [0, {self.size})")
        return self.eval(flat_index // t, flat_index % t, w)

    def domain_size(self) -> int:
        return self.q**self.k

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "k": self.k,
            "n": self.n,
            "points": list(self.inner.points),
            "bias_set": self.outer.base.to_json(),
        }

    @classmethod
    def from_json(cls, doc: dict) -> "ComposedGenerator":
        try:
            q = doc["q"]
            k = doc["k"]
            points = doc["points"]
            bias_doc = doc["bias_set"]
        except (TypeError, KeyError) as exc:
            raise MalformedFile(f"generator document missing field: {exc}") from exc
        bset = BiasSet.from_json(bias_doc)
        if bset.q != q:
            raise MalformedFile(f"bias set modulus {bset.q} != generator modulus {q}")
        fam = RSFamily(make_field(q), k, points)
        if doc.get("n") not in (None, fam.n):
            raise MalformedFile(f"declared n={doc['n']} but {fam.n} points given")
        return cls(LinearFamily(bset), fam)


def composed_hash_state(gen: ComposedGenerator, w: Message) -> QuantumHashState:
    """Phase state over n*T amplitudes: two-stage encode, then per-pair phase."""
    codeword = gen.inner.encode(w)
    bvals = gen.outer.base.elements
    q = gen.q
    t = len(bvals)
    active = gen.size
    s = qubits_for(active)
    roots = kernels.unit_roots(q)
    amps = np.zeros(2**s, dtype=np.complex128)
    scale = 1.0 / math.sqrt(active)
    for l, c in enumerate(codeword):
        for j, b in enumerate(bvals):
            amps[l * t + j] = roots[(b * c) % q] * scale
    return QuantumHashState(s, active, amps)


def generator_collision_delta(gen: ComposedGenerator, domain_limit: int = 100_000) -> float:
    """Exact worst pairwise overlap magnitude over the full q**k message domain.

    Overlaps depend only on the message difference, so the scan walks the
    q**k - 1 nonzero differences; each costs one codeword evaluation plus a
    character-sum lookup per point.
    """
    domain = gen.domain_size()
    if domain > domain_limit:
        raise DomainTooLarge(
            f"domain q^k = {domain} exceeds the exhaustive-scan cap {domain_limit}"
        )
    fb = gen.outer.base.dft_table()
    points = kernels.as_elements_array(gen.inner.points)
    numer = kernels.rs_delta_scan(fb, points, gen.k, gen.q, 1, domain)
    return numer / gen.size
