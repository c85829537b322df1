"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes: input errors exit with 2,
internal/resource errors with 3, verification mismatches with 1.
"""


class DelPezzoError(Exception):
    """Base class for all library errors."""


class InputError(DelPezzoError):
    """Caller supplied malformed or out-of-contract input."""


class InternalError(DelPezzoError):
    """An internal invariant was violated (indicates a bug)."""


class ResourceError(DelPezzoError):
    """A memory or disk budget was exceeded."""
