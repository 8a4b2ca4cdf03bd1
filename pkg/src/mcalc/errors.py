"""Exception hierarchy shared by all :mod:`mcalc` modules."""

from __future__ import annotations


class McalcError(Exception):
    """Base class for every error raised by :mod:`mcalc`."""


class DomainError(McalcError, ValueError):
    """An argument lies outside the domain of the operation."""


class ContractError(McalcError, ValueError):
    """A precondition on the inputs (not just their range) is violated."""


class ConvergenceError(McalcError, ArithmeticError):
    """A truncated series did not converge within its term budget."""

    def __init__(self, message: str, last_term: float) -> None:
        super().__init__(message)
        self.last_term = last_term


class EvaluationError(McalcError, ArithmeticError):
    """A function evaluation produced a non-finite value."""


class AccuracyError(McalcError, ArithmeticError):
    """Quadrature failed to reach the requested tolerance."""

    def __init__(self, message: str, residual: float) -> None:
        super().__init__(message)
        self.residual = residual


class SolutionRangeError(McalcError, OverflowError):
    """The integrating factor left the floating point range at ``t``."""

    def __init__(self, message: str, t: float) -> None:
        super().__init__(message)
        self.t = t


class SearchFailure(McalcError, RuntimeError):
    """No witness point was found within the requested tolerance."""

    def __init__(self, message: str, min_gap: float) -> None:
        super().__init__(message)
        self.min_gap = min_gap


class DegenerateDenominatorError(McalcError, ZeroDivisionError):
    """The denominator derivative vanishes on the search grid."""
