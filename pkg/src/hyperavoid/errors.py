"""Exception hierarchy shared by every hyperavoid module."""


class HyperavoidError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(HyperavoidError):
    """Malformed instance, graph, or generating-function input."""


class DimensionMismatch(HyperavoidError):
    """A vector's length disagrees with the instance dimension."""


class InfeasibleConstant(HyperavoidError):
    """A constraint demands 0 != 0; no vector can satisfy it."""


class InternalInvariantViolation(HyperavoidError):
    """A self-check of the solver's maintained invariant failed (a bug)."""


class BudgetExceeded(HyperavoidError):
    """An exhaustive search hit its work cap before finishing."""


class NotFeasible(HyperavoidError):
    """A supplied vector violates the constraint system it should satisfy."""


class ZeroDenominatorVector(HyperavoidError):
    """A substituted denominator exponent evaluated to zero."""


class InvalidAvoidanceVector(HyperavoidError):
    """The supplied direction vector hits one of the denominator vectors."""


class NonIntegerTotal(HyperavoidError):
    """A generating-function total is not a nonnegative integer."""
