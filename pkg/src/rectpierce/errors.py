"""Exception types shared across the package."""

from __future__ import annotations


class RectPierceError(Exception):
    """Base class for all package errors."""


class SchemaError(RectPierceError, ValueError):
    """Malformed document or invalid value; message names the offending item."""


class GeometryError(RectPierceError, ValueError):
    """Invalid geometric input, e.g. a degenerate rectangle."""


class InstanceTooLargeError(RectPierceError):
    """An exact oracle was asked for more rectangles than its configured cap."""


class BudgetExceededError(RectPierceError):
    """An exact oracle ran out of time. It never returns a wrong answer instead."""


class InvariantViolation(RectPierceError):
    """A runtime self-check failed; indicates a bug, not bad user input."""


class UsageError(RectPierceError):
    """Bad command-line invocation."""
