import random
from fractions import Fraction

import pytest

from exactla import (
    DimensionMismatchError,
    LinearAlgebraError,
    RationalMatrix,
    SparseEchelon,
    SparseMatrix,
    intersect_spans,
    nullspace,
    rank,
    rref,
    span_contains,
    span_dimension,
    sum_spans,
    to_rational,
)


def test_rref_of_small_matrix():
    m = RationalMatrix.from_rows([[2, 4, 6], [1, 1, 1]])
    reduced, pivots = rref(m)
    assert pivots == [0, 1]
    assert reduced.row(0) == (1, 0, -1)
    assert reduced.row(1) == (0, 1, 2)


def test_nullspace_vectors_are_killed():
    m = RationalMatrix.from_rows([[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 0]])
    kernel = nullspace(m)
    assert len(kernel) == 2
    for v in kernel:
        assert all(x == 0 for x in m.apply(v))


@pytest.mark.parametrize("seed", range(5))
def test_rank_nullity_on_random_matrices(seed):
    rng = random.Random(seed)
    rows, cols = rng.randint(1, 6), rng.randint(1, 6)
    m = RationalMatrix.from_rows(
        [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(cols)] for _ in range(rows)]
    )
    assert rank(m) + len(nullspace(m)) == cols
    assert rank(m) == rank(m.transpose())


def test_exact_fractions_survive_reduction():
    m = RationalMatrix.from_rows([[Fraction(1, 3), Fraction(1, 7)], [1, Fraction(3, 7)]])
    assert rank(m) == 1


def test_span_operations():
    a = [(1, 0, 0), (0, 1, 0)]
    b = [(0, 1, 0), (0, 0, 1)]
    assert span_dimension(sum_spans(a, b)) == 3
    common = intersect_spans(a, b)
    assert len(common) == 1
    assert span_contains(common, (0, 5, 0))
    assert not span_contains(a, (0, 0, 1))


def test_shape_errors():
    with pytest.raises(DimensionMismatchError):
        RationalMatrix.from_rows([[1, 2]]) @ RationalMatrix.from_rows([[1, 2]])
    with pytest.raises(DimensionMismatchError):
        span_dimension([(1, 2), (1, 2, 3)])
    with pytest.raises(LinearAlgebraError):
        to_rational(1.5)


def test_sparse_matrix_commutator_matches_dense():
    a = RationalMatrix.from_rows([[0, 1], [0, 0]])
    b = RationalMatrix.from_rows([[0, 0], [1, 0]])
    sa, sb = SparseMatrix.from_dense(a), SparseMatrix.from_dense(b)
    h = sa.commutator(sb)
    assert h.to_dense() == (a @ b) - (b @ a)
    assert h.is_diagonal()
    assert h.trace() == 0


def test_sparse_echelon_expresses_dependent_vectors():
    echelon = SparseEchelon()
    assert echelon.add({0: Fraction(1), 1: Fraction(1)})
    assert echelon.add({1: Fraction(1), 2: Fraction(2)})
    assert not echelon.add({0: Fraction(2), 1: Fraction(3), 2: Fraction(2)})
    assert len(echelon) == 2
    assert echelon.express({0: Fraction(2), 1: Fraction(3), 2: Fraction(2)}) == {0: 2, 1: 1}
    assert echelon.express({2: Fraction(1)}) is None
    assert echelon.contains({})
