"""Root systems, weights and the Weyl dimension formula."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from exactla import RationalMatrix, rref

from .cartan import cartan_matrix
from .types import (
    NonDominantWeightError, RootSystemError, SimpleType, Weight, WeightIndexError,
)

Root = Tuple[int, ...]

_E_DIMENSIONS = {6: 78, 7: 133, 8: 248}


def algebra_dimension(t: SimpleType) -> int:
    if t.family == 'D':
        return 2 * t.rank * t.rank - t.rank
    return _E_DIMENSIONS[t.rank]


@dataclass(frozen=True)
class RootSystem:
    """Cartan matrix and positive roots in simple-root coordinates.

    Positive roots are ordered by height, then lexicographically with the
    larger leading coefficient first, so the first `rank` entries are the
    simple roots in node order.
    """

    type: SimpleType
    cartan: Tuple[Tuple[int, ...], ...]
    positive_roots: Tuple[Root, ...]
    _index: Dict[Root, int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, '_index', {r: k for k, r in enumerate(self.positive_roots)})

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def simple_roots(self) -> Tuple[Root, ...]:
        return self.positive_roots[:self.rank]

    def root_index(self, root: Sequence[int]) -> Optional[int]:
        return self._index.get(tuple(root))

    def is_positive_root(self, root: Sequence[int]) -> bool:
        return tuple(root) in self._index

    def pairing(self, root: Sequence[int], i: int) -> int:
        """<root, α_i^∨> for a node i in 1..rank."""
        row = self.cartan[i - 1]
        return sum(row[j] * c for j, c in enumerate(root))

    def check_node(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise WeightIndexError(f"Node {i} out of range 1..{self.rank} for {self.type}")


def height(root: Sequence[int]) -> int:
    return sum(root)


def _sort_key(root: Root) -> Tuple:
    return (height(root), tuple(-c for c in root))


def build_root_system(t: SimpleType) -> RootSystem:
    """Close the simple roots under root-string addition, level by level."""
    cartan = cartan_matrix(t)
    n = t.rank

    def pair(root: Root, i: int) -> int:
        return sum(cartan[i][j] * c for j, c in enumerate(root))

    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        next_layer = []
        for beta in layer:
            for i in range(n):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - pair(beta, i) > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        next_layer.append(up)
        layer = next_layer

    ordered = tuple(sorted(roots, key=_sort_key))
    expected = (algebra_dimension(t) - n) // 2
    if len(ordered) != expected:
        raise RootSystemError(
            f"{t}: generated {len(ordered)} positive roots, expected {expected}"
        )
    return RootSystem(type=t, cartan=cartan, positive_roots=ordered)


def highest_root(rs: RootSystem) -> Root:
    return rs.positive_roots[-1]


def root_to_weight(rs: RootSystem, root: Sequence[int]) -> Weight:
    """Fundamental-weight coordinates of Σ c_j α_j, using α_j(H_k) = M_kj."""
    return Weight(tuple(
        sum(rs.cartan[k][j] * c for j, c in enumerate(root)) for k in range(rs.rank)
    ))


def _check_weight(rs: RootSystem, weight: Weight) -> None:
    if weight.rank != rs.rank:
        raise WeightIndexError(
            f"Weight {weight.coords} has rank {weight.rank}, expected {rs.rank}"
        )


def weyl_dim(rs: RootSystem, hw: Weight) -> int:
    """Dimension of the irreducible module with dominant highest weight hw."""
    _check_weight(rs, hw)
    if not hw.is_dominant():
        raise NonDominantWeightError(f"Weight {hw.label()} is not dominant")
    shifted = [m + 1 for m in hw.coords]
    numerator = 1
    denominator = 1
    for root in rs.positive_roots:
        numerator *= sum(c * s for c, s in zip(root, shifted))
        denominator *= height(root)
    result = Fraction(numerator, denominator)
    if result.denominator != 1:
        raise RootSystemError(f"Non-integral Weyl dimension {result} for {hw.label()}")
    return int(result)


def weight_of_lowering_word(rs: RootSystem, hw: Weight, word: Sequence[int]) -> Weight:
    """λ minus the simple roots named by the word, in fundamental coordinates."""
    _check_weight(rs, hw)
    coords = list(hw.coords)
    for i in word:
        rs.check_node(i)
        for k in range(rs.rank):
            coords[k] -= rs.cartan[k][i - 1]
    return Weight(tuple(coords))


def simple_reflection(rs: RootSystem, weight: Weight, i: int) -> Weight:
    """s_i(μ) = μ - μ(H_i) α_i."""
    _check_weight(rs, weight)
    rs.check_node(i)
    mu_i = weight.coords[i - 1]
    return Weight(tuple(
        c - mu_i * rs.cartan[k][i - 1] for k, c in enumerate(weight.coords)
    ))


def fundamental_coweight(rs: RootSystem, i: int) -> Tuple[Fraction, ...]:
    """Coefficients of the i-th fundamental coweight on H_1..H_rank."""
    rs.check_node(i)
    n = rs.rank
    augmented = RationalMatrix.from_rows([
        list(rs.cartan[r]) + [1 if r == c else 0 for c in range(n)] for r in range(n)
    ])
    reduced, _ = rref(augmented)
    return tuple(reduced.entries[i - 1][n:])


def positive_roots_of_height(rs: RootSystem, h: int) -> List[Root]:
    return [r for r in rs.positive_roots if height(r) == h]
