"""Weight modules given by sparse generator actions."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from exactla import SparseMatrix, SparseVector
from chevalley import AlgebraElement, LieAlgebra
from rootsys import Weight, simple_reflection


class ModuleError(Exception):
    """Base exception for module construction and use."""
    pass


class DimensionCapError(ModuleError):
    def __init__(self, required: int, cap: int, label: str = ""):
        super().__init__(
            f"{label or 'Module'} has dimension {required}, above the cap of {cap}"
        )
        self.required = required
        self.cap = cap


@dataclass
class WeightModule:
    """A finite-dimensional module with a weight basis.

    x_action[i], y_action[i], h_action[i] are the matrices of X_{i+1},
    Y_{i+1}, H_{i+1}. For modules built by lowering closure, basis vector 0
    is the highest-weight vector and basis_words[k] is the Y-word (applied
    right to left as written) that produced vector k.
    """

    algebra: LieAlgebra
    highest_weight: Weight
    weights: List[Weight]
    x_action: List[SparseMatrix]
    y_action: List[SparseMatrix]
    h_action: List[SparseMatrix]
    basis_words: Optional[List[Tuple[int, ...]]] = None
    highest_index: int = 0
    label: str = ""
    is_adjoint: bool = False
    _root_actions: Dict[int, SparseMatrix] = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.weights)

    def weight_spaces(self) -> Dict[Weight, List[int]]:
        spaces: Dict[Weight, List[int]] = {}
        for index, weight in enumerate(self.weights):
            spaces.setdefault(weight, []).append(index)
        return spaces

    def basis_vector(self, index: int) -> SparseVector:
        return {index: Fraction(1)}

    def describe(self) -> str:
        return self.label or f"V_{self.algebra.name}({self.highest_weight.label()})"


def _basis_action(m: WeightModule, index: int) -> SparseMatrix:
    """Matrix of one Chevalley basis element, built up along extraspecial pairs."""
    g = m.algebra
    cached = m._root_actions.get(index)
    if cached is not None:
        return cached
    kind = g.kind_of(index)
    if kind == 'H':
        result = m.h_action[index - 2 * g.n_positive]
    else:
        position = index if kind == 'X' else index - g.n_positive
        if position < g.rank:
            generators = m.x_action if kind == 'X' else m.y_action
            result = generators[position]
        else:
            index_of = g.x_index if kind == 'X' else g.y_index
            node, beta = g.extraspecial_pair(position)
            simple, lower = index_of(node - 1), index_of(beta)
            c = g.structure_constant(simple, lower, index)
            result = _basis_action(m, simple).commutator(_basis_action(m, lower)).scale(Fraction(1, c))
    m._root_actions[index] = result
    return result


def action_of(m: WeightModule, a: AlgebraElement) -> SparseMatrix:
    """Matrix of an algebra element acting on the module."""
    if a.dim != m.algebra.dim:
        raise ModuleError(f"Element of dimension {a.dim} does not act on a {m.algebra.name} module")
    if a.is_symbolic():
        raise ModuleError("Only rational elements have an action matrix")
    if m.is_adjoint:
        return m.algebra.ad(a)
    terms = [(coeff, _basis_action(m, i)) for i, coeff in a.coeffs.items()]
    return SparseMatrix(m.dim, m.dim).linear_combination(terms)


def adjoint_module(g: LieAlgebra) -> WeightModule:
    """g acting on itself; the basis is the Chevalley basis."""
    n = g.rank
    return WeightModule(
        algebra=g,
        highest_weight=g.weight_of(g.x_index(g.n_positive - 1)),
        weights=[g.weight_of(i) for i in range(g.dim)],
        x_action=[g.ad(g.x(i)) for i in range(1, n + 1)],
        y_action=[g.ad(g.y(i)) for i in range(1, n + 1)],
        h_action=[g.ad(g.h(i)) for i in range(1, n + 1)],
        highest_index=g.x_index(g.n_positive - 1),
        label=f"{g.name} adjoint",
        is_adjoint=True,
    )


def weight_multiplicities(m: WeightModule) -> Dict[Weight, int]:
    return {weight: len(indices) for weight, indices in sorted(m.weight_spaces().items())}


def format_multiplicities(m: WeightModule) -> str:
    lines = [f"# {m.describe()} dim {m.dim}"]
    for weight, mult in sorted(weight_multiplicities(m).items(), reverse=True):
        coords = " ".join(f"{c:>2}" for c in weight.coords)
        lines.append(f"{coords}  {mult}")
    return "\n".join(lines) + "\n"


def weyl_symmetry_failures(m: WeightModule) -> List[str]:
    """Weights whose multiplicity differs from that of a simple reflection."""
    mults = weight_multiplicities(m)
    rs = m.algebra.root_system
    bad = []
    for weight, mult in mults.items():
        for i in range(1, rs.rank + 1):
            reflected = simple_reflection(rs, weight, i)
            if mults.get(reflected, 0) != mult:
                bad.append(f"{weight.coords} vs s_{i}: {mult} != {mults.get(reflected, 0)}")
    return bad


def _ad_power(a: SparseMatrix, b: SparseMatrix, power: int) -> SparseMatrix:
    for _ in range(power):
        b = a.commutator(b)
    return b


def check_module_relations(m: WeightModule) -> List[str]:
    """Generator relations as matrix identities on the module."""
    cartan = m.algebra.cartan
    n = len(cartan)
    zero = SparseMatrix(m.dim, m.dim)
    failures: List[str] = []
    for i in range(n):
        if not m.h_action[i].is_diagonal():
            failures.append(f"H_{i + 1} is not diagonal")
        for j in range(n):
            xi, yj, hi = m.x_action[i], m.y_action[j], m.h_action[i]
            expected = m.h_action[i] if i == j else zero
            if xi.commutator(yj) != expected:
                failures.append(f"[X_{i + 1},Y_{j + 1}]")
            if i < j and not hi.commutator(m.h_action[j]).is_zero():
                failures.append(f"[H_{i + 1},H_{j + 1}]")
            if hi.commutator(m.x_action[j]) != m.x_action[j].scale(cartan[i][j]):
                failures.append(f"[H_{i + 1},X_{j + 1}]")
            if hi.commutator(m.y_action[j]) != m.y_action[j].scale(-cartan[i][j]):
                failures.append(f"[H_{i + 1},Y_{j + 1}]")
            if i != j:
                power = 1 - cartan[j][i]
                if not _ad_power(xi, m.x_action[j], power).is_zero():
                    failures.append(f"(ad X_{i + 1})^{power} X_{j + 1}")
                if not _ad_power(m.y_action[i], yj, power).is_zero():
                    failures.append(f"(ad Y_{i + 1})^{power} Y_{j + 1}")
    return failures
