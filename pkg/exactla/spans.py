"""Exact operations on subspaces given by spanning vectors."""

from fractions import Fraction
from typing import List, Sequence

from .matrix import (
    DimensionMismatchError, RationalMatrix, Scalar, Vector, nullspace, rref, to_vector,
)


def _common_length(*groups: Sequence[Sequence[Scalar]]) -> int:
    lengths = {len(v) for group in groups for v in group}
    if len(lengths) > 1:
        raise DimensionMismatchError(f"Vectors of different lengths: {sorted(lengths)}")
    return lengths.pop() if lengths else 0


def span_basis(vectors: Sequence[Sequence[Scalar]]) -> List[Vector]:
    """Canonical basis of the span: the nonzero rows of the rref."""
    if not vectors:
        return []
    n = _common_length(vectors)
    reduced, pivots = rref(RationalMatrix.from_rows(vectors, cols=n))
    return [reduced.entries[r] for r in range(len(pivots))]


def span_dimension(vectors: Sequence[Sequence[Scalar]]) -> int:
    return len(span_basis(vectors))


def span_contains(basis: Sequence[Sequence[Scalar]], v: Sequence[Scalar]) -> bool:
    _common_length(basis, [v])
    if not basis:
        return all(x == 0 for x in v)
    return span_dimension(list(basis) + [v]) == span_dimension(basis)


def sum_spans(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> List[Vector]:
    _common_length(a, b)
    return span_basis(list(a) + list(b))


def intersect_spans(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> List[Vector]:
    """Basis of span(a) ∩ span(b) from the kernel of [A | -B]."""
    n = _common_length(a, b)
    basis_a = span_basis(a)
    basis_b = span_basis(b)
    if not basis_a or not basis_b:
        return []
    k = len(basis_a)
    columns = basis_a + [tuple(-x for x in v) for v in basis_b]
    stacked = RationalMatrix.from_rows(
        [[col[i] for col in columns] for i in range(n)], cols=len(columns)
    )
    common = []
    for kernel_vector in nullspace(stacked):
        w = [Fraction(0)] * n
        for coeff, vec in zip(kernel_vector[:k], basis_a):
            if coeff != 0:
                w = [x + coeff * y for x, y in zip(w, vec)]
        common.append(to_vector(w))
    return span_basis(common)
