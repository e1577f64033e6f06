"""Chevalley bases with integer structure constants.

Basis order: X_α for the positive roots (root-system order), then Y_α in the
same order, then H_1..H_rank. Signs come from a bimultiplicative cocycle on
the root lattice and are then re-normalised so that every extraspecial pair
(α_i, β), with i the smallest node such that γ - α_i is a root, has
[X_i, X_β] = +X_γ.
"""

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from exactla import SparseMatrix
from rootsys import Root, RootSystem, root_to_weight, Weight

from .element import AlgebraElement, AlgebraError, ElementMismatchError

Terms = Tuple[Tuple[int, int], ...]
StructureTable = Dict[Tuple[int, int], Terms]


class UnknownIndexError(AlgebraError):
    pass


class IntegralityError(AlgebraError):
    pass


def basis_labels(rs: RootSystem) -> List[str]:
    roots = ["".join(str(c) for c in r) for r in rs.positive_roots]
    return ([f"X_{r}" for r in roots] + [f"Y_{r}" for r in roots]
            + [f"H_{i}" for i in range(1, rs.rank + 1)])


class LieAlgebra:
    """Chevalley basis and sparse integer structure table of a simple algebra."""

    def __init__(self, root_system: RootSystem, table: StructureTable):
        self.root_system = root_system
        self.rank = root_system.rank
        self.n_positive = len(root_system.positive_roots)
        self.dim = 2 * self.n_positive + self.rank
        self._table = table
        self.labels = basis_labels(root_system)
        self._label_index = {label: i for i, label in enumerate(self.labels)}
        self._extraspecial = self._find_extraspecial()

    @property
    def name(self) -> str:
        return str(self.root_system.type)

    @property
    def cartan(self) -> Tuple[Tuple[int, ...], ...]:
        return self.root_system.cartan

    @property
    def table(self) -> StructureTable:
        return self._table

    # -- indices -------------------------------------------------------------

    def x_index(self, root_position: int) -> int:
        return root_position

    def y_index(self, root_position: int) -> int:
        return self.n_positive + root_position

    def h_index(self, node: int) -> int:
        self.check_node(node)
        return 2 * self.n_positive + node - 1

    def check_node(self, node: int) -> None:
        if not 1 <= node <= self.rank:
            raise UnknownIndexError(f"Node {node} out of range 1..{self.rank} for {self.name}")

    def index_of_label(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError as e:
            raise UnknownIndexError(f"No basis element {label!r} in {self.name}") from e

    def kind_of(self, index: int) -> str:
        if index < self.n_positive:
            return 'X'
        if index < 2 * self.n_positive:
            return 'Y'
        return 'H'

    def root_of(self, index: int) -> Root:
        """Root of a basis element in simple-root coordinates (zero for H)."""
        kind = self.kind_of(index)
        if kind == 'X':
            return self.root_system.positive_roots[index]
        if kind == 'Y':
            return tuple(-c for c in self.root_system.positive_roots[index - self.n_positive])
        return (0,) * self.rank

    def weight_of(self, index: int) -> Weight:
        return root_to_weight(self.root_system, self.root_of(index))

    def root_position(self, root: Sequence[int]) -> int:
        k = self.root_system.root_index(root)
        if k is None:
            raise UnknownIndexError(f"{tuple(root)} is not a positive root of {self.name}")
        return k

    # -- elements ------------------------------------------------------------

    def element(self, coeffs: Optional[Dict[int, object]] = None) -> AlgebraElement:
        return AlgebraElement(self.dim, coeffs)

    def zero(self) -> AlgebraElement:
        return AlgebraElement.zero(self.dim)

    def basis_element(self, index: int) -> AlgebraElement:
        return AlgebraElement.basis(self.dim, index)

    def x(self, node: int) -> AlgebraElement:
        self.check_node(node)
        return self.basis_element(self.x_index(node - 1))

    def y(self, node: int) -> AlgebraElement:
        self.check_node(node)
        return self.basis_element(self.y_index(node - 1))

    def h(self, node: int) -> AlgebraElement:
        return self.basis_element(self.h_index(node))

    def generator(self, kind: str, node: int) -> AlgebraElement:
        if kind == 'X':
            return self.x(node)
        if kind == 'Y':
            return self.y(node)
        if kind == 'H':
            return self.h(node)
        raise UnknownIndexError(f"Unknown generator kind {kind!r}")

    def root_vector(self, root: Sequence[int]) -> AlgebraElement:
        """X_α for a positive root, Y_{-α} for a negative one."""
        root = tuple(root)
        if all(c >= 0 for c in root):
            return self.basis_element(self.x_index(self.root_position(root)))
        return self.basis_element(self.y_index(self.root_position(tuple(-c for c in root))))

    def cartan_element(self, coefficients: Sequence[object]) -> AlgebraElement:
        if len(coefficients) != self.rank:
            raise ElementMismatchError(f"Expected {self.rank} Cartan coefficients")
        return self.element({self.h_index(i + 1): c for i, c in enumerate(coefficients)})

    def is_cartan(self, a: AlgebraElement) -> bool:
        return all(self.kind_of(i) == 'H' for i in a.coeffs)

    # -- brackets ------------------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> Terms:
        return self._table.get((i, j), ())

    def bracket(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        if a.dim != self.dim or b.dim != self.dim:
            raise ElementMismatchError(
                f"Bracket in {self.name} (dim {self.dim}) of elements of dim {a.dim}, {b.dim}"
            )
        out: Dict[int, object] = {}
        table = self._table
        for i, x in a.coeffs.items():
            for j, y in b.coeffs.items():
                terms = table.get((i, j))
                if not terms:
                    continue
                xy = x * y
                for k, c in terms:
                    out[k] = out.get(k, 0) + c * xy
        return AlgebraElement(self.dim, out)

    def ad(self, a: AlgebraElement) -> SparseMatrix:
        """Matrix of ad(a) on the basis; rational coefficients only."""
        columns: Dict[int, Dict[int, Fraction]] = {}
        for i, x in a.coeffs.items():
            for j in range(self.dim):
                terms = self._table.get((i, j))
                if not terms:
                    continue
                col = columns.setdefault(j, {})
                for k, c in terms:
                    value = col.get(k, 0) + c * x
                    if value == 0:
                        col.pop(k, None)
                    else:
                        col[k] = value
        return SparseMatrix(self.dim, self.dim, columns)

    # -- extraspecial pairs --------------------------------------------------

    def _find_extraspecial(self) -> Dict[int, Tuple[int, int]]:
        pairs: Dict[int, Tuple[int, int]] = {}
        roots = self.root_system.positive_roots
        for k in range(self.rank, self.n_positive):
            gamma = roots[k]
            for node in range(1, self.rank + 1):
                beta = list(gamma)
                beta[node - 1] -= 1
                position = self.root_system.root_index(beta)
                if position is not None:
                    pairs[k] = (node, position)
                    break
        return pairs

    def extraspecial_pair(self, root_position: int) -> Tuple[int, int]:
        """(node i, position of β) with γ = α_i + β for a non-simple root γ."""
        try:
            return self._extraspecial[root_position]
        except KeyError as e:
            raise UnknownIndexError(f"Root {root_position} is simple or unknown") from e

    def structure_constant(self, i: int, j: int, k: int) -> int:
        return dict(self.bracket_basis(i, j)).get(k, 0)

    def __repr__(self) -> str:
        return f"LieAlgebra({self.name}, dim={self.dim})"


def _cocycle_exponents(rs: RootSystem) -> List[List[int]]:
    n = rs.rank
    return [[1 if i == j else (1 if i < j and rs.cartan[i][j] == -1 else 0)
             for j in range(n)] for i in range(n)]


def build_algebra(rs: RootSystem) -> LieAlgebra:
    """Complete structure table of the Chevalley basis for a root system."""
    n = rs.rank
    roots = rs.positive_roots
    n_pos = len(roots)
    exponents = _cocycle_exponents(rs)

    def epsilon(a: Sequence[int], b: Sequence[int]) -> int:
        total = sum(a[i] * b[j] * exponents[i][j]
                    for i in range(n) if a[i] for j in range(n) if b[j])
        return -1 if total % 2 else 1

    # X_γ = s_γ E_γ and Y_γ = -s_γ E_{-γ}, with s fixed along extraspecial pairs.
    signs: List[int] = [1] * n_pos
    for k in range(n, n_pos):
        gamma = roots[k]
        for node in range(n):
            beta = list(gamma)
            beta[node] -= 1
            position = rs.root_index(beta)
            if position is not None:
                signs[k] = signs[position] * epsilon(roots[node], beta)
                break

    # Each non-Cartan basis element b is f_b * E_{r_b}.
    signed_roots: List[Tuple[int, Root]] = []
    for k, r in enumerate(roots):
        signed_roots.append((signs[k], r))
    for k, r in enumerate(roots):
        signed_roots.append((-signs[k], tuple(-c for c in r)))

    lookup: Dict[Root, int] = {}
    for index, (_, r) in enumerate(signed_roots):
        lookup[r] = index
    h_offset = 2 * n_pos

    table: StructureTable = {}
    for a in range(2 * n_pos):
        fa, ra = signed_roots[a]
        for b in range(2 * n_pos):
            if a == b:
                continue
            fb, rb = signed_roots[b]
            total = tuple(x + y for x, y in zip(ra, rb))
            if not any(total):
                # [E_r, E_{-r}] = -r, written on the H_i
                factor = -fa * fb
                table[(a, b)] = tuple(
                    (h_offset + i, factor * ra[i]) for i in range(n) if ra[i]
                )
            elif total in lookup:
                c = lookup[total]
                fc = signed_roots[c][0]
                table[(a, b)] = ((c, fa * fb * fc * epsilon(ra, rb)),)

    for i in range(n):
        row = rs.cartan[i]
        for b in range(2 * n_pos):
            rb = signed_roots[b][1]
            value = sum(row[j] * rb[j] for j in range(n))
            if value:
                table[(h_offset + i, b)] = ((b, value),)
                table[(b, h_offset + i)] = ((b, -value),)

    for key, terms in table.items():
        for _, c in terms:
            if not isinstance(c, int):
                raise IntegralityError(f"Non-integral structure constant at {key}: {c}")
    return LieAlgebra(rs, table)
