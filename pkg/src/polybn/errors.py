"""Exception types shared across the package."""


class PolybnError(Exception):
    """Base class for all errors raised by polybn."""


class DegeneratePolygonError(PolybnError, ValueError):
    """An operation that needs a two-dimensional polygon got a point, segment or nothing."""


class EmptyPolygonError(PolybnError, ValueError):
    """An operation that needs at least one point got the empty polygon."""


class PreconditionError(PolybnError, ValueError):
    pass


class UnsupportedRangeError(PolybnError, ValueError):
    pass


class ResourceLimitError(PolybnError, RuntimeError):
    """An internal search bound was hit; results would be incomplete."""
