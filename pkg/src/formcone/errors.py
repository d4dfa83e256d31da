"""Exception hierarchy shared across the package."""

from __future__ import annotations


class FormconeError(Exception):
    """Base class for all package errors."""


class RingMismatchError(FormconeError):
    """Operands belong to different ambient rings or carry incompatible orders."""


class ValidationError(FormconeError):
    """Input data violates a documented precondition (bad field, bad degree claim, ...)."""


class ParseError(FormconeError):
    """Syntax error in the input DSL or in a polynomial expression.

    Carries 1-based line/column and the set of token kinds that would have
    been accepted at the failure point.
    """

    def __init__(self, message: str, line: int, column: int, expected: tuple[str, ...] = ()):
        self.line = line
        self.column = column
        self.expected = expected
        suffix = f" (expected: {', '.join(expected)})" if expected else ""
        super().__init__(f"line {line}, column {column}: {message}{suffix}")


class BudgetExceededError(FormconeError):
    """A configurable resource budget ran out.

    This is a resource failure, never a mathematical verdict; callers map it
    to a dedicated exit code.
    """


class DegenerateSystemError(FormconeError):
    """A system element has no well-defined initial form (probe cap reached)."""


class InfiniteComponentError(FormconeError):
    """A graded component is not finite-dimensional over the base field."""


class ConsistencyError(FormconeError):
    """Two routes that must agree exactly disagreed; always a bug, never a bound issue."""
