"""Exception taxonomy shared across the library."""


class ChermnykhError(Exception):
    """Base class for all library errors."""


class DomainError(ChermnykhError):
    """A state or radius is outside the defining domain (singular or nonpositive)."""


class ModelError(ChermnykhError):
    """Parameters violate a model-level constraint (e.g. mean-motion radicand <= 0)."""


class NumericError(ChermnykhError):
    """A numeric procedure failed to converge; carries context in the message."""


class SeriesError(ChermnykhError):
    """A series expansion is degenerate or its requested branch is not real."""
