"""Elements of a Lie algebra as sparse coefficient vectors over the Chevalley basis.

Coefficients are Fractions in ordinary use. Symbolic checks (pencils of
highest-weight vectors, SL2 substitutions) put sympy expressions in the same
slots; those are kept expanded so that zero tests stay structural.
"""

from fractions import Fraction
from typing import Any, Callable, Dict, Iterator, Optional, Sequence, Tuple

import sympy

Coefficient = Any


class AlgebraError(Exception):
    """Base exception for Lie algebra construction and use."""
    pass


class ElementMismatchError(AlgebraError):
    """Elements from algebras of different dimension were combined."""
    pass


def normalize_coefficient(value: Coefficient) -> Coefficient:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    expanded = sympy.expand(sympy.sympify(value))
    if expanded.is_Rational:
        return Fraction(int(expanded.p), int(expanded.q))
    return expanded


def coefficient_is_zero(value: Coefficient) -> bool:
    if isinstance(value, (int, Fraction)):
        return value == 0
    return sympy.expand(value) == 0


class AlgebraElement:
    """Sparse vector {basis index: coefficient} of fixed length `dim`."""

    __slots__ = ('dim', 'coeffs')

    def __init__(self, dim: int, coeffs: Optional[Dict[int, Coefficient]] = None):
        self.dim = dim
        cleaned: Dict[int, Coefficient] = {}
        for index, value in (coeffs or {}).items():
            if not 0 <= index < dim:
                raise ElementMismatchError(f"Basis index {index} outside 0..{dim - 1}")
            value = normalize_coefficient(value)
            if not coefficient_is_zero(value):
                cleaned[index] = value
        self.coeffs = cleaned

    @classmethod
    def zero(cls, dim: int) -> 'AlgebraElement':
        return cls(dim)

    @classmethod
    def basis(cls, dim: int, index: int) -> 'AlgebraElement':
        return cls(dim, {index: Fraction(1)})

    @classmethod
    def from_vector(cls, values: Sequence[Coefficient]) -> 'AlgebraElement':
        return cls(len(values), {i: v for i, v in enumerate(values) if v != 0})

    def to_vector(self) -> Tuple[Fraction, ...]:
        out = [Fraction(0)] * self.dim
        for i, v in self.coeffs.items():
            if not isinstance(v, Fraction):
                raise ElementMismatchError("Symbolic element has no rational vector")
            out[i] = v
        return tuple(out)

    def items(self) -> Iterator[Tuple[int, Coefficient]]:
        return iter(sorted(self.coeffs.items()))

    def support(self) -> Tuple[int, ...]:
        return tuple(sorted(self.coeffs))

    def coefficient(self, index: int) -> Coefficient:
        return self.coeffs.get(index, Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_symbolic(self) -> bool:
        return any(not isinstance(v, Fraction) for v in self.coeffs.values())

    def map_coefficients(self, fn: Callable[[Coefficient], Coefficient]) -> 'AlgebraElement':
        return AlgebraElement(self.dim, {i: fn(v) for i, v in self.coeffs.items()})

    def _check(self, other: 'AlgebraElement') -> None:
        if not isinstance(other, AlgebraElement):
            raise ElementMismatchError(f"Cannot combine element with {type(other).__name__}")
        if other.dim != self.dim:
            raise ElementMismatchError(f"Dimension {self.dim} vs {other.dim}")

    def __add__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        self._check(other)
        out = dict(self.coeffs)
        for i, v in other.coeffs.items():
            out[i] = out.get(i, 0) + v
        return AlgebraElement(self.dim, out)

    def __sub__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        return self + (-other)

    def __neg__(self) -> 'AlgebraElement':
        return AlgebraElement(self.dim, {i: -v for i, v in self.coeffs.items()})

    def __mul__(self, scalar: Coefficient) -> 'AlgebraElement':
        if isinstance(scalar, AlgebraElement):
            return NotImplemented
        return AlgebraElement(self.dim, {i: scalar * v for i, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.dim == other.dim and (self - other).is_zero()

    __hash__ = None

    def __repr__(self) -> str:
        terms = ", ".join(f"{i}: {v}" for i, v in self.items())
        return f"AlgebraElement(dim={self.dim}, {{{terms}}})"


def proportionality(a: AlgebraElement, b: AlgebraElement) -> Optional[Coefficient]:
    """Scalar s with a == s * b, or None. Zero a gives 0; zero b gives None."""
    if b.is_zero():
        return None
    if a.is_zero():
        return Fraction(0)
    if set(a.coeffs) != set(b.coeffs):
        return None
    index = min(b.coeffs)
    ratio = a.coeffs[index] / b.coeffs[index]
    if not isinstance(ratio, Fraction):
        ratio = normalize_coefficient(sympy.cancel(ratio))
    return ratio if a == ratio * b else None
