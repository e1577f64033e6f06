"""Dense exact-rational matrices and row reduction."""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

Rational = Fraction
Scalar = Union[int, Fraction]
Vector = Tuple[Fraction, ...]


class LinearAlgebraError(Exception):
    """Base exception for exact linear algebra errors."""
    pass


class DimensionMismatchError(LinearAlgebraError):
    """Operands have incompatible shapes."""
    pass


def to_rational(value: Union[Scalar, str]) -> Fraction:
    """Coerce ints, Fractions and strings like '3/2' to a reduced Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise LinearAlgebraError(f"Not a rational scalar: {value!r}")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise LinearAlgebraError(f"Not a rational scalar: {value!r}")


def to_vector(values: Sequence[Scalar]) -> Vector:
    return tuple(to_rational(v) for v in values)


@dataclass(frozen=True)
class RationalMatrix:
    """Dense matrix of Fractions, stored row-major and never mutated."""

    rows: int
    cols: int
    entries: Tuple[Vector, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise DimensionMismatchError(
                f"Expected {self.rows} rows, got {len(self.entries)}"
            )
        for row in self.entries:
            if len(row) != self.cols:
                raise DimensionMismatchError(
                    f"Expected rows of length {self.cols}, got {len(row)}"
                )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], cols: int = None) -> 'RationalMatrix':
        entries = tuple(to_vector(row) for row in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(rows=len(entries), cols=cols, entries=entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'RationalMatrix':
        zero = Fraction(0)
        return cls(rows, cols, tuple((zero,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, size: int) -> 'RationalMatrix':
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(size)] for i in range(size)],
            cols=size,
        )

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> 'RationalMatrix':
        return RationalMatrix(
            self.cols, self.rows,
            tuple(self.column(j) for j in range(self.cols)),
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def __add__(self, other: 'RationalMatrix') -> 'RationalMatrix':
        self._check_same_shape(other)
        return RationalMatrix(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(r1, r2))
            for r1, r2 in zip(self.entries, other.entries)
        ))

    def __sub__(self, other: 'RationalMatrix') -> 'RationalMatrix':
        self._check_same_shape(other)
        return RationalMatrix(self.rows, self.cols, tuple(
            tuple(a - b for a, b in zip(r1, r2))
            for r1, r2 in zip(self.entries, other.entries)
        ))

    def scale(self, factor: Scalar) -> 'RationalMatrix':
        factor = to_rational(factor)
        return RationalMatrix(self.rows, self.cols, tuple(
            tuple(factor * x for x in row) for row in self.entries
        ))

    def __matmul__(self, other: 'RationalMatrix') -> 'RationalMatrix':
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        columns = [other.column(j) for j in range(other.cols)]
        out = []
        for row in self.entries:
            nonzero = [(k, x) for k, x in enumerate(row) if x != 0]
            out.append(tuple(
                sum((x * col[k] for k, x in nonzero), Fraction(0))
                for col in columns
            ))
        return RationalMatrix(self.rows, other.cols, tuple(out))

    def apply(self, vector: Sequence[Scalar]) -> Vector:
        if len(vector) != self.cols:
            raise DimensionMismatchError(
                f"Vector of length {len(vector)} for {self.cols} columns"
            )
        v = to_vector(vector)
        return tuple(
            sum((a * b for a, b in zip(row, v) if a != 0), Fraction(0))
            for row in self.entries
        )

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise DimensionMismatchError("Trace of a non-square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), Fraction(0))

    def _check_same_shape(self, other: 'RationalMatrix') -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatchError(
                f"Shape {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )


def rref(m: RationalMatrix) -> Tuple[RationalMatrix, List[int]]:
    """Reduced row echelon form and pivot columns.

    Pivots are taken column by column from the left; within a column the
    first row at or below the current pivot row with a nonzero entry is used.
    """
    work = [list(row) for row in m.entries]
    pivots: List[int] = []
    pivot_row = 0
    for col in range(m.cols):
        if pivot_row >= m.rows:
            break
        found = next((r for r in range(pivot_row, m.rows) if work[r][col] != 0), None)
        if found is None:
            continue
        work[pivot_row], work[found] = work[found], work[pivot_row]
        lead = work[pivot_row][col]
        if lead != 1:
            work[pivot_row] = [x / lead for x in work[pivot_row]]
        source = work[pivot_row]
        for r in range(m.rows):
            if r == pivot_row:
                continue
            factor = work[r][col]
            if factor != 0:
                target = work[r]
                work[r] = [a - factor * b for a, b in zip(target, source)]
        pivots.append(col)
        pivot_row += 1
    reduced = RationalMatrix(m.rows, m.cols, tuple(tuple(row) for row in work))
    return reduced, pivots


def rank(m: RationalMatrix) -> int:
    return len(rref(m)[1])


def nullspace(m: RationalMatrix) -> List[Vector]:
    """Basis of {v : m v = 0}, one vector per free column in ascending order."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis: List[Vector] = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -reduced.entries[r][free]
        basis.append(tuple(v))
    return basis
