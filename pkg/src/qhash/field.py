"""Exact arithmetic in prime fields and polynomial evaluation.

All other modules build on this one: characters are evaluated at reduced
residues ``(w * b) mod q`` produced here, and codeword symbols come from
:meth:`Polynomial.evaluate`.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence, Union

from .errors import DivisionByZero, FieldMismatch, NotPrime, Overflow, RangeError

# Widened intermediates stay below 2**62 for q < 2**31, so plain Python ints
# never leave machine-word range inside the hot kernels either.
MAX_MODULUS = 2**31

# Deterministic Miller-Rabin witnesses, valid for every n < 3.3 * 10**24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for n < 2**64."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """Arithmetic context for F_q with prime modulus q."""

    __slots__ = ("q",)

    def __init__(self, q: int):
        if not isinstance(q, int):
            raise TypeError(f"modulus must be an int, got {type(q).__name__}")
        if q < 2:
            raise RangeError(f"modulus must be >= 2, got {q}")
        if q >= MAX_MODULUS:
            raise Overflow(f"modulus {q} >= 2**31 exceeds machine-word arithmetic")
        if not is_prime(q):
            raise NotPrime(q)
        self.q = q

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("PrimeField", self.q))

    def __repr__(self) -> str:
        return f"PrimeField({self.q})"

    def element(self, value: int) -> "FieldElement":
        """Reduce an integer into this field."""
        return FieldElement(value % self.q, self)

    def elements(self) -> Iterator["FieldElement"]:
        for v in range(self.q):
            yield FieldElement(v, self)

    def coerce(self, x: Union[int, "FieldElement"]) -> "FieldElement":
        """Accept an element of this field or reduce a plain integer."""
        if isinstance(x, FieldElement):
            if x.field.q != self.q:
                raise FieldMismatch(f"element of F_{x.field.q} used in F_{self.q}")
            return x
        return self.element(int(x))


def make_field(q: int) -> PrimeField:
    """Validate q and return the field context (raises NotPrime/Overflow)."""
    return PrimeField(q)


class FieldElement:
    """An element of F_q; immutable, supports the usual operators."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: PrimeField):
        if not 0 <= value < field.q:
            raise RangeError(f"value {value} outside [0, {field.q})")
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other: Union[int, "FieldElement"]) -> "FieldElement":
        return self.field.coerce(other)

    def __add__(self, other: Union[int, "FieldElement"]) -> "FieldElement":
        o = self._coerce(other)
        return FieldElement((self.value + o.value) % self.field.q, self.field)

    __radd__ = __add__

    def __sub__(self, other: Union[int, "FieldElement"]) -> "FieldElement":
        o = self._coerce(other)
        return FieldElement((self.value - o.value) % self.field.q, self.field)

    def __rsub__(self, other: Union[int, "FieldElement"]) -> "FieldElement":
        return self._coerce(other) - self

    def __mul__(self, other: Union[int, "FieldElement"]) -> "FieldElement":
        o = self._coerce(other)
        return FieldElement((self.value * o.value) % self.field.q, self.field)

    __rmul__ = __mul__

    def __neg__(self) -> "FieldElement":
        return FieldElement(-self.value % self.field.q, self.field)

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FieldElement(pow(self.value, exponent, self.field.q), self.field)

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse via Fermat: a**(q-2) mod q."""
        if self.value == 0:
            raise DivisionByZero(f"inverse of 0 in F_{self.field.q}")
        return FieldElement(pow(self.value, self.field.q - 2, self.field.q), self.field)

    def __truediv__(self, other: Union[int, "FieldElement"]) -> "FieldElement":
        return self * self._coerce(other).inverse()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.value == other.value and self.field.q == other.field.q
        if isinstance(other, int):
            return self.value == other % self.field.q
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.field.q))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"F{self.field.q}({self.value})"


class Polynomial:
    """Polynomial over F_q, coefficients stored lowest degree first."""

    __slots__ = ("coefficients", "field")

    def __init__(self, coefficients: Sequence[FieldElement]):
        coeffs = tuple(coefficients)
        if not coeffs:
            raise RangeError("polynomial needs at least one coefficient")
        field = coeffs[0].field
        for c in coeffs[1:]:
            if c.field.q != field.q:
                raise FieldMismatch("polynomial coefficients from different fields")
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def from_ints(cls, field: PrimeField, values: Iterable[int]) -> "Polynomial":
        return cls(tuple(field.element(v) for v in values))

    def __len__(self) -> int:
        return len(self.coefficients)

    def evaluate(self, x: Union[int, FieldElement]) -> FieldElement:
        """Horner's scheme; equals the naive power sum mod q."""
        xv = int(self.field.coerce(x))
        q = self.field.q
        acc = 0
        for c in reversed(self.coefficients):
            acc = (acc * xv + c.value) % q
        return FieldElement(acc, self.field)

    __call__ = evaluate

    def __repr__(self) -> str:
        vals = [c.value for c in self.coefficients]
        return f"Polynomial({vals} over F_{self.field.q})"


def poly_eval(p: Polynomial, x: Union[int, FieldElement]) -> FieldElement:
    """Functional alias for :meth:`Polynomial.evaluate`."""
    return p.evaluate(x)
