"""Exception types shared across the package.

Everything derives from :class:`CopGameError` so callers can catch the whole
family at once; the parse/validation errors additionally derive from
``ValueError`` to behave well with generic input-handling code.
"""

from __future__ import annotations


class CopGameError(Exception):
    """Base class for all package-specific errors."""


class GraphParseError(CopGameError, ValueError):
    """Malformed graph6 input. ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class UnsupportedSizeError(CopGameError, ValueError):
    """graph6 size outside the supported short form (1 <= n <= 62)."""


class NotConnectedError(CopGameError, ValueError):
    """Operation requires a connected graph."""


class BudgetError(CopGameError, RuntimeError):
    """A configured resource budget (state count, transitions, retries) was hit."""


class BoundExceededError(CopGameError, RuntimeError):
    """No winning cop count within the requested maximum."""


class NoWinningMoveError(CopGameError, RuntimeError):
    """Asked for an optimal cop move in a robber-won state."""


class PreconditionError(CopGameError, ValueError):
    """Input violates a stated structural precondition (e.g. wrong diameter)."""


class StructureError(CopGameError, ValueError):
    """A structural invariant that certifies a decomposition failed to verify.

    Raised when the input graph lies outside the class the decomposition is
    defined for; ``check`` names the failed invariant.
    """

    def __init__(self, check: str, message: str | None = None):
        super().__init__(message or f"structural check failed: {check}")
        self.check = check


class NotInClassError(CopGameError, ValueError):
    """Graph is outside the class a strategy constructor is defined for."""


class IllegalMoveError(CopGameError, RuntimeError):
    """A strategy emitted a cop move the game rules do not allow."""
