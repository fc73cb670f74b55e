"""
Exception hierarchy shared by the geometry kernel and its front ends.
"""


class TaxicabError(Exception):
    """Base class for every error raised by the services package."""


class DegenerateInputError(TaxicabError, ValueError):
    """Zero directions, collinear triangles, non-positive radii."""


class OffBoundaryError(TaxicabError, ValueError):
    """A boundary-only operation received a point off the circle."""


class PreconditionError(TaxicabError):
    """An operation was called outside its documented precondition."""


class DocumentError(TaxicabError, ValueError):
    """Malformed input document."""


class ConfigError(TaxicabError, ValueError):
    """Invalid settings, sweep configuration or figure name."""
