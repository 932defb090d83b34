"""Exception hierarchy shared by every module."""

from __future__ import annotations


class GentError(Exception):
    """Base class for all errors raised by this package."""


class GraphParseError(GentError):
    """Malformed DIMACS input; ``line`` is the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidInput(GentError, ValueError):
    """An argument violates a documented precondition."""


class CapExceeded(GentError):
    """An enumeration cap would be exceeded; results are never truncated."""

    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


class NotBipartite(InvalidInput):
    pass


class NonConvergence(GentError):
    """Iteration budget exhausted. ``best`` holds the best result found so far."""

    def __init__(self, message: str, best=None):
        self.best = best
        super().__init__(message)


class ConsistencyError(GentError):
    """Two independent computations of the same quantity disagree."""
