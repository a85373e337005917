"""Exception types shared across the package.

Every error carries a stable upper-case ``code`` so that callers (and the
command line front end) can branch on the failure kind without parsing
messages.
"""

from __future__ import annotations

from typing import Any


class StringVCError(Exception):
    """Base class. ``code`` names the failure, ``details`` is JSON-friendly."""

    code = "ERROR"

    def __init__(self, message: str = "", *, code: str | None = None, details: Any = None):
        super().__init__(message or self.code)
        if code is not None:
            self.code = code
        self.details = details


class InvalidVertex(StringVCError):
    code = "INVALID_VERTEX"


class InvalidIndex(StringVCError):
    code = "INVALID_INDEX"


class InvalidBound(StringVCError):
    code = "INVALID_BOUND"


class InvalidRepresentation(StringVCError):
    """Raised with the list of violations found by ``validate``."""

    code = "INVALID_REPRESENTATION"


class DegenerateInput(StringVCError):
    """Segment family is not in general position; ``details`` lists offenders."""

    code = "DEGENERATE_INPUT"


class InvalidCycleSet(StringVCError):
    code = "INVALID_CYCLE_SET"


class NotAStringRepresentation(StringVCError):
    """The coloring rejected a graph that survived odd-cycle stripping."""

    code = "NOT_A_STRING_REPRESENTATION"


class InternalError(StringVCError):
    """Internal consistency check failed. Should never fire on valid input."""

    code = "INTERNAL_ERROR"


class GeneratorError(StringVCError):
    code = "GENERATOR_ERROR"
