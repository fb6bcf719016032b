"""Exception types shared across the package."""

from __future__ import annotations

__all__ = ["ScaleError", "ResourceBudgetError", "PreconditionError"]


class ScaleError(ValueError):
    """Input size exceeds what the requested operation supports exactly."""


class ResourceBudgetError(RuntimeError):
    """A search blew through its memory budget.

    ``level`` records the last vertex count whose graph classes were
    completed before the budget ran out.
    """

    def __init__(self, message: str, level: int):
        super().__init__(message)
        self.level = level


class PreconditionError(ValueError):
    """A check was invoked on a graph outside its hypothesis class."""
