"""Library errors."""

from __future__ import annotations


class GarsideError(Exception):
    """Base class for every error raised by this package."""


class StructureMismatchError(GarsideError, ValueError):
    """Raised when elements of two different Garside structures are combined."""


class NotSimpleError(GarsideError, ValueError):
    """Raised when a product expected to be simple is not a divisor of Delta."""


class NotPositiveError(GarsideError, ValueError):
    """Raised when an operation defined on the monoid receives a non-positive element."""


class WordParseError(GarsideError, ValueError):
    """Raised on malformed word input."""

    def __init__(self, message: str, column: int) -> None:
        super().__init__(f"{message} (column {column})")
        self.column = column


class BudgetExceededError(GarsideError):
    """Raised when a class computation would exceed the configured node budget."""

    def __init__(self, nodes: int, budget: int) -> None:
        super().__init__(f"node budget exceeded: {nodes} > {budget}")
        self.nodes = nodes
        self.budget = budget


class CapExceededError(GarsideError):
    """Raised when an exhaustive enumeration is requested beyond its configured cap."""


class InvariantError(GarsideError):
    """Raised when an internal mathematical invariant does not hold."""


class CacheVersionError(GarsideError):
    """Raised when a census cache file was written with another encoding version."""
