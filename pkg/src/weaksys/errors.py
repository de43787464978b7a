"""Shared exception types and the enumeration budget.

Every potentially explosive search (clique enumeration, induced cycles,
geodesic enumeration, subset scans) ticks a budget.  Running out raises
``BudgetExceeded``, which callers must surface as an explicit
"inconclusive" outcome, never as a silent pass or fail.
"""

from __future__ import annotations

DEFAULT_BUDGET = 200_000_000


class WeaksysError(Exception):
    """Base class for all errors raised by this package."""


class InputError(WeaksysError):
    """Malformed input: unknown labels, non-clique simplex, bad parameters."""


class PreconditionError(WeaksysError):
    """A declared hypothesis of the operation fails on the given complex."""

    def __init__(self, message: str, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class InvariantViolation(WeaksysError):
    """An internal consistency assertion failed; indicates a bug or an
    input violating a hypothesis that was declared instead of checked."""


class BudgetExceeded(WeaksysError):
    """The configured search budget ran out before a verdict was reached."""

    def __init__(self, used: int, limit: int):
        super().__init__(f"enumeration budget exceeded ({used} > {limit} nodes)")
        self.used = used
        self.limit = limit


class Budget:
    """Mutable node counter with a hard limit."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int = DEFAULT_BUDGET):
        self.limit = int(limit)
        self.used = 0

    def tick(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            raise BudgetExceeded(self.used, self.limit)

    def __repr__(self):
        return f"Budget(used={self.used}, limit={self.limit})"


def ensure_budget(budget: Budget | None) -> Budget:
    return budget if budget is not None else Budget()
