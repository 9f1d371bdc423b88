"""Exception types shared across the package."""


class FreeConvError(Exception):
    """Base class for all errors raised by freeconv."""


class WeightMismatchError(FreeConvError, ValueError):
    """Two partitions (or a partition and a permutation) have different weights."""


class DegreeMismatchError(FreeConvError, ValueError):
    """Polynomials with different degree bounds were combined."""


class DimensionError(FreeConvError, ValueError):
    """An index, order or dimension is outside the range an operation accepts."""


class ResourceLimitError(FreeConvError, RuntimeError):
    """The requested computation exceeds the supported size or the configured budget."""
