"""Exception types shared across the package."""

from __future__ import annotations

import os

DEFAULT_CAP = 2_000_000


class CapExceeded(RuntimeError):
    """An enumeration would exceed its size guard."""


class PreconditionError(ValueError):
    """Input violates a documented precondition."""


class ConstraintError(ValueError):
    """A family parameter tuple violates one of its constraints.

    ``constraint`` holds the human readable name of the failed condition.
    """

    def __init__(self, family: str, constraint: str):
        super().__init__(f"{family}: constraint violated: {constraint}")
        self.family = family
        self.constraint = constraint


class IncidenceError(ValueError):
    """A vertex/edge map does not preserve incidence."""

    def __init__(self, message: str, edge: int | None = None):
        super().__init__(message)
        self.edge = edge


def resolve_cap(cap: int | None) -> int:
    """Explicit cap, else ``EULERSYM_CAP`` from the environment, else the default."""
    if cap is not None:
        return cap
    env = os.environ.get("EULERSYM_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise PreconditionError(f"EULERSYM_CAP must be an integer, got {env!r}") from None
    return DEFAULT_CAP
