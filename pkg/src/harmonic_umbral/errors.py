"""Exception types shared by every module of the package."""

from __future__ import annotations


class UmbralError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(UmbralError, ValueError):
    """An argument lies outside the documented domain of a function."""


class NonConvergence(UmbralError, ArithmeticError):
    """An iterative procedure hit its cap before meeting its tolerance.

    ``estimate`` carries the best value reached and ``error`` the residual
    error indicator at the point of failure, when available.
    """

    def __init__(self, message: str, estimate: float | None = None, error: float | None = None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error
