"""Exception types shared across the package.

Every contract violation raises a named subclass of :class:`GabidulinError`
so callers can distinguish "your input is bad" from "the library found an
internal inconsistency" (:class:`InternalStall`, :class:`GoldenMismatch`).
"""

__all__ = [
    "GabidulinError",
    "NotPrime",
    "ReducibleModulus",
    "DegreeMismatch",
    "DivisionByZero",
    "MixedFields",
    "DivisorZero",
    "BothZero",
    "PatternTooLarge",
    "Infeasible",
    "InternalStall",
    "PreconditionViolated",
    "BadDimensions",
    "PatternNotNormalized",
    "DependentAlphas",
    "FieldTooSmall",
    "FieldTooSmallWarning",
    "AttemptsExhausted",
    "DimensionTooSmall",
    "InvalidInstance",
    "GoldenMismatch",
]


class GabidulinError(Exception):
    """Base class for all library-specific errors."""


class NotPrime(GabidulinError):
    """Base-field characteristic is not a prime number."""


class ReducibleModulus(GabidulinError):
    """Supplied modulus polynomial factors over the base field."""


class DegreeMismatch(GabidulinError):
    """Modulus polynomial is missing, non-monic, or of the wrong degree."""


class DivisionByZero(GabidulinError, ZeroDivisionError):
    """Division by the zero field element."""


class MixedFields(GabidulinError):
    """Operands live in different field contexts."""


class DivisorZero(GabidulinError):
    """Right division by the zero linearized polynomial."""


class BothZero(GabidulinError):
    """gcrd of two zero linearized polynomials is undefined."""


class PatternTooLarge(GabidulinError):
    """Subset enumeration would exceed the configured exhaustive bound."""


class Infeasible(GabidulinError):
    """Support constraints admit no code of the requested dimension."""

    def __init__(self, message: str, omega: tuple[int, ...] | None = None):
        super().__init__(message)
        self.omega = omega


class InternalStall(GabidulinError):
    """Greedy completion/reduction stalled on a valid input.

    This should be impossible; if raised, report it as a bug rather than
    retrying with a different order.
    """


class PreconditionViolated(GabidulinError):
    """Bipartite neighborhood inequalities fail on the input graph."""


class BadDimensions(GabidulinError):
    """Code dimensions violate 1 <= k <= n."""


class PatternNotNormalized(GabidulinError):
    """Builder requires every zero set to have exactly k-1 columns."""


class DependentAlphas(GabidulinError):
    """Evaluation points are linearly dependent over the base field."""


class FieldTooSmall(GabidulinError):
    """Extension degree is below the bound required for the construction."""


class FieldTooSmallWarning(UserWarning):
    """Construction forced with s >= n but below the existence bound.

    Success is then not guaranteed; AttemptsExhausted is expected behavior.
    """


class AttemptsExhausted(GabidulinError):
    """Randomized/enumerated search ran out of attempts."""


class DimensionTooSmall(GabidulinError):
    """Coefficient-matrix width cannot hold the polynomial's q-degree."""


class InvalidInstance(GabidulinError):
    """Shift-pattern instance violates its block-count invariants."""


class GoldenMismatch(GabidulinError):
    """Golden demo recomputation disagrees with the stored reference value."""
