"""Package-wide exception types."""


class FirecutError(Exception):
    """Base class for all firecut errors."""


class ParseError(FirecutError):
    """A document, graph description, or instance failed validation."""


class QueryError(FirecutError):
    """An invalid graph query: unknown vertex, removed vertex, or an
    enumeration that the encoding cannot answer (e.g. all neighbors of an
    infinite-degree hub)."""


class CapExceeded(FirecutError):
    """A configured resource cap (node count, enumeration size) would be
    exceeded.  Raised before the expensive work starts."""
