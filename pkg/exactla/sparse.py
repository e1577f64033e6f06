"""Sparse exact vectors, matrices and incremental Gaussian elimination.

Module actions on large weight modules (the E8 adjoint is 248-dimensional)
are far too slow as dense Fraction products, so they live here as column
dictionaries. Dense `RationalMatrix` copies are available on demand.
"""

from fractions import Fraction
from typing import Dict, Hashable, Iterable, List, Optional, Tuple

from .matrix import DimensionMismatchError, RationalMatrix, Scalar, to_rational

SparseVector = Dict[Hashable, Fraction]


def add_scaled(target: SparseVector, source: SparseVector, factor: Scalar) -> None:
    """target += factor * source, in place, dropping cancelled entries."""
    if factor == 0:
        return
    for key, value in source.items():
        new = target.get(key, 0) + factor * value
        if new == 0:
            target.pop(key, None)
        else:
            target[key] = new


def scaled(source: SparseVector, factor: Scalar) -> SparseVector:
    if factor == 0:
        return {}
    return {key: factor * value for key, value in source.items()}


def dense_to_sparse(values: Iterable[Scalar]) -> SparseVector:
    return {i: to_rational(x) for i, x in enumerate(values) if x != 0}


def sparse_to_dense(vector: SparseVector, length: int) -> Tuple[Fraction, ...]:
    out = [Fraction(0)] * length
    for i, x in vector.items():
        out[i] = to_rational(x)
    return tuple(out)


class SparseMatrix:
    """Square or rectangular matrix stored as {column: {row: value}}."""

    def __init__(self, rows: int, cols: int, columns: Optional[Dict[int, SparseVector]] = None):
        self.rows = rows
        self.cols = cols
        self.columns: Dict[int, SparseVector] = {
            j: dict(col) for j, col in (columns or {}).items() if col
        }

    @classmethod
    def from_dense(cls, m: RationalMatrix) -> 'SparseMatrix':
        columns = {}
        for j in range(m.cols):
            col = {i: m.entries[i][j] for i in range(m.rows) if m.entries[i][j] != 0}
            if col:
                columns[j] = col
        return cls(m.rows, m.cols, columns)

    def column(self, j: int) -> SparseVector:
        return self.columns.get(j, {})

    def entry(self, i: int, j: int) -> Fraction:
        return self.columns.get(j, {}).get(i, Fraction(0))

    def apply(self, vector: SparseVector) -> SparseVector:
        out: SparseVector = {}
        for j, x in vector.items():
            col = self.columns.get(j)
            if col:
                add_scaled(out, col, x)
        return out

    def __matmul__(self, other: 'SparseMatrix') -> 'SparseMatrix':
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        return SparseMatrix(self.rows, other.cols, {
            j: self.apply(col) for j, col in other.columns.items()
        })

    def __add__(self, other: 'SparseMatrix') -> 'SparseMatrix':
        return self.linear_combination([(1, self), (1, other)])

    def __sub__(self, other: 'SparseMatrix') -> 'SparseMatrix':
        return self.linear_combination([(1, self), (-1, other)])

    def scale(self, factor: Scalar) -> 'SparseMatrix':
        return SparseMatrix(self.rows, self.cols, {
            j: scaled(col, factor) for j, col in self.columns.items()
        })

    def linear_combination(self, terms: List[Tuple[Scalar, 'SparseMatrix']]) -> 'SparseMatrix':
        columns: Dict[int, SparseVector] = {}
        for factor, m in terms:
            if (m.rows, m.cols) != (self.rows, self.cols):
                raise DimensionMismatchError("Shape mismatch in linear combination")
            for j, col in m.columns.items():
                add_scaled(columns.setdefault(j, {}), col, factor)
        return SparseMatrix(self.rows, self.cols, columns)

    def commutator(self, other: 'SparseMatrix') -> 'SparseMatrix':
        return (self @ other) - (other @ self)

    def is_zero(self) -> bool:
        return not self.columns

    def is_diagonal(self) -> bool:
        return all(set(col) <= {j} for j, col in self.columns.items())

    def trace(self) -> Fraction:
        return sum((col.get(j, Fraction(0)) for j, col in self.columns.items()), Fraction(0))

    def restrict_rows(self, keep: Iterable[int]) -> Dict[int, SparseVector]:
        wanted = set(keep)
        return {
            j: {i: x for i, x in col.items() if i in wanted}
            for j, col in self.columns.items()
        }

    def to_dense(self) -> RationalMatrix:
        grid = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for j, col in self.columns.items():
            for i, x in col.items():
                grid[i][j] = x
        return RationalMatrix.from_rows(grid, cols=self.cols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.columns) == (other.rows, other.cols, other.columns)

    def __repr__(self) -> str:
        nnz = sum(len(col) for col in self.columns.values())
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={nnz})"


class SparseEchelon:
    """Incrementally maintained echelon basis of a span of sparse vectors.

    Accepted vectors are numbered 0, 1, ... in the order they were added.
    Each stored row remembers how it is written in terms of accepted vectors,
    so a dependent vector can be expressed through the accepted ones.
    """

    def __init__(self):
        self._rows: List[Tuple[Hashable, SparseVector, SparseVector]] = []
        self._accepted = 0

    def __len__(self) -> int:
        return self._accepted

    def _reduce(self, vector: SparseVector) -> Tuple[SparseVector, SparseVector]:
        residual = {k: to_rational(v) for k, v in vector.items() if v != 0}
        combination: SparseVector = {}
        for pivot, row, row_combination in self._rows:
            value = residual.get(pivot)
            if value is None:
                continue
            factor = value / row[pivot]
            add_scaled(residual, row, -factor)
            add_scaled(combination, row_combination, factor)
        return residual, combination

    def add(self, vector: SparseVector) -> bool:
        """Accept the vector if it is independent of the current span."""
        residual, combination = self._reduce(vector)
        if not residual:
            return False
        index = self._accepted
        row_combination = scaled(combination, -1)
        row_combination[index] = Fraction(1)
        self._rows.append((min(residual), residual, row_combination))
        self._accepted += 1
        return True

    def contains(self, vector: SparseVector) -> bool:
        return not self._reduce(vector)[0]

    def express(self, vector: SparseVector) -> Optional[SparseVector]:
        """Coefficients on the accepted vectors, or None outside the span."""
        residual, combination = self._reduce(vector)
        if residual:
            return None
        return combination
