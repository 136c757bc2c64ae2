"""Exception types shared across the package.

Everything derives from :class:`QHashError` so callers (and the CLI) can
catch domain failures in one place without swallowing programming errors.
"""


class QHashError(Exception):
    """Base class for all domain errors raised by this package."""


class NotPrime(QHashError, ValueError):
    """Modulus is not a prime number."""

    def __init__(self, q: int):
        super().__init__(f"modulus {q} is not prime")
        self.q = q


class Overflow(QHashError, OverflowError):
    """Modulus too large for machine-word arithmetic."""


class DivisionByZero(QHashError, ZeroDivisionError):
    """Multiplicative inverse of zero requested."""


class FieldMismatch(QHashError, ValueError):
    """Operands belong to fields with different moduli."""


class DimensionMismatch(QHashError, ValueError):
    """State vectors or mode lists of unequal dimension."""


class RangeError(QHashError, ValueError):
    """Numeric argument outside its documented range."""


class LengthMismatch(QHashError, ValueError):
    """Message tuple has the wrong number of symbols."""


class IndexOutOfRange(QHashError, IndexError):
    """Function index outside the family's index set."""


class DomainTooLarge(QHashError, ValueError):
    """Exhaustive scan over the message domain would exceed the configured cap."""


class BudgetExceeded(QHashError, ValueError):
    """Search would need more candidate evaluations than the budget allows."""


class MalformedFile(QHashError, ValueError):
    """Input file failed schema or consistency validation."""
