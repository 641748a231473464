"""Exception types shared across the package."""


class CodegreeError(Exception):
    """Base class for errors raised by this package."""


class GroupParseError(CodegreeError, ValueError):
    """Malformed group file: bad cycle syntax or a non-bijective line."""


class GraphParseError(CodegreeError, ValueError):
    """Malformed graph file: bad header or out-of-range endpoint."""


class ResourceLimitError(CodegreeError, RuntimeError):
    """A configured search cap was exceeded (Dixon prime, prime hunt)."""


class InternalConsistencyError(CodegreeError, RuntimeError):
    """A classical invariant failed; indicates a bug, not bad input."""
