"""Exact finite free convolutions and the random-matrix identities behind them."""

from .combinatorics import Partition, Permutation, partitions_of
from .errors import DegreeMismatchError, DimensionError, FreeConvError, ResourceLimitError, WeightMismatchError
from .finite_free import PolynomialFF, SpectrumSpec, box_plus, box_times, rect_plus
from .quadrature import GroupSpec, quadrature_sum, verify_quadrature
from .weingarten import haar_moment_orthogonal, haar_moment_unitary, wg_orthogonal, wg_unitary

__all__ = [
    "DegreeMismatchError",
    "DimensionError",
    "FreeConvError",
    "GroupSpec",
    "Partition",
    "Permutation",
    "PolynomialFF",
    "ResourceLimitError",
    "SpectrumSpec",
    "WeightMismatchError",
    "box_plus",
    "box_times",
    "haar_moment_orthogonal",
    "haar_moment_unitary",
    "partitions_of",
    "quadrature_sum",
    "rect_plus",
    "verify_quadrature",
    "wg_orthogonal",
    "wg_unitary",
]
