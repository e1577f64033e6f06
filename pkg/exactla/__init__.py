"""Exact rational linear algebra kernel."""

from .matrix import (
    Rational,
    RationalMatrix,
    LinearAlgebraError,
    DimensionMismatchError,
    to_rational,
    to_vector,
    rref,
    rank,
    nullspace,
)
from .spans import span_basis, span_dimension, span_contains, intersect_spans, sum_spans
from .sparse import (
    SparseVector,
    SparseMatrix,
    SparseEchelon,
    add_scaled,
    scaled,
    dense_to_sparse,
    sparse_to_dense,
)

__all__ = [
    'Rational', 'RationalMatrix', 'LinearAlgebraError', 'DimensionMismatchError',
    'to_rational', 'to_vector', 'rref', 'rank', 'nullspace',
    'span_basis', 'span_dimension', 'span_contains', 'intersect_spans', 'sum_spans',
    'SparseVector', 'SparseMatrix', 'SparseEchelon', 'add_scaled', 'scaled',
    'dense_to_sparse', 'sparse_to_dense',
]
