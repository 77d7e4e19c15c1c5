"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class CapacityError(ValueError):
    """A request exceeds a built-in table or recursion capacity."""


class AccuracyError(RuntimeError):
    """A requested accuracy could not be reached within the term budget.

    The best value obtained is attached so callers can still inspect it.
    """

    def __init__(self, message: str, best=None, achieved: float | None = None):
        super().__init__(message)
        self.best = best
        self.achieved = achieved
