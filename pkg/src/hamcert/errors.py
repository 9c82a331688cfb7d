"""Exception types shared across the package."""

from __future__ import annotations


class HamcertError(Exception):
    """Base class for all package-specific errors."""


class Graph6Error(HamcertError, ValueError):
    """A graph6 record could not be parsed.

    The message identifies which of the distinct failure modes occurred:
    malformed header, payload length mismatch, payload byte out of range,
    or nonzero padding bits.
    """


class UnsupportedGraphError(HamcertError, ValueError):
    """The graph is outside the size range an exact routine supports."""


class PreconditionError(HamcertError, ValueError):
    """An input violates a documented precondition (not split, not
    2-connected, not triangle-free, invalid family parameters, ...)."""


class InternalInvariantError(HamcertError, RuntimeError):
    """An invariant the algorithm's correctness argument guarantees was
    observed to fail at runtime.

    This always indicates a bug (or an input sneaking past a precondition
    check), never a property of a valid input.  The offending state is
    carried in ``state`` for debugging.
    """

    def __init__(self, message: str, state: object = None):
        super().__init__(message)
        self.state = state
