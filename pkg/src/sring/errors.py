"""Exception types shared across the package."""

from __future__ import annotations


class WorkbenchError(Exception):
    """Base class for all errors raised by this package."""


class InvalidSizeError(WorkbenchError):
    """A requested construction has an out-of-range size parameter."""


class InvalidArityError(WorkbenchError):
    """A construction received an empty or malformed argument list."""


class OwnershipError(WorkbenchError):
    """An ideal, subset, or hom was used with a ring it does not belong to."""


class DegenerateSetError(WorkbenchError):
    """A strict multiplicative closure generated zero.

    The message names the offending product chain, e.g. ``2*3 = 0``.
    """


class EnumerationCapError(WorkbenchError):
    """Exhaustive subset enumeration was requested above the size cap."""


class UnknownElementError(WorkbenchError):
    """An element name did not resolve in the target ring."""


class SpecSyntaxError(WorkbenchError):
    """A ring spec string failed to parse."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
