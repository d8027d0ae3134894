"""Exception hierarchy shared by every module in the package."""


class DiophCountError(Exception):
    """Base class for all package errors."""


class DomainError(DiophCountError, ValueError):
    """An argument lies outside the mathematical domain of a function."""


class UnsupportedError(DiophCountError, ValueError):
    """The requested (r, v) family has no implementation for this operation."""


class GuardError(DiophCountError, RuntimeError):
    """A configured resource guard would be exceeded; nothing was truncated."""


class PrecisionError(DiophCountError, ArithmeticError):
    """The requested tolerance cannot be honoured in double precision."""


class QuadratureError(DiophCountError, RuntimeError):
    """Adaptive quadrature ran out of refinement before meeting its tolerance."""

    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved


class ConsistencyError(DiophCountError, RuntimeError):
    """An internal postcondition failed (e.g. a negative final coefficient)."""
