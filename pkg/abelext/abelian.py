"""Invariant abelian subspaces of E_{n+1} under an embedded D_n."""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple

import sympy

from chevalley import AlgebraElement, LieAlgebra
from config import log
from decomp import decompose_under
from embed import (
    EmbeddingMap,
    apply_word,
    first_nonzero_bracket,
    generated_submodule,
    submodule_with_words,
)
from hwmod import adjoint_module
from rootsys import Weight

MAX_ABELIAN_DIMENSION = {'E6': 16, 'E7': 27, 'E8': 36}

PENCIL_SYMBOLS = ('alpha', 'beta', 'gamma', 'delta')


class AbelianExtensionError(Exception):
    """Base exception for abelian-extension scans and classification."""
    pass


@dataclass
class AbelianityResult:
    abelian: bool
    witness: Optional[Tuple[int, int, AlgebraElement]] = None

    def __bool__(self) -> bool:
        return self.abelian


def is_abelian_subspace(g: LieAlgebra, basis: Sequence[AlgebraElement]) -> AbelianityResult:
    """All pairwise brackets vanish; otherwise the first offending pair."""
    witness = first_nonzero_bracket(g, basis)
    return AbelianityResult(witness is None, witness)


@dataclass
class PencilConditions:
    """Coefficient polynomials of all brackets inside [Σ t_i v_i]."""

    symbols: Tuple[sympy.Symbol, ...]
    conditions: List[sympy.Expr]
    dim: int

    @property
    def always_abelian(self) -> bool:
        return not self.conditions

    def abelian_at(self, values: Sequence[Any]) -> bool:
        point = dict(zip(self.symbols, values))
        return all(sympy.simplify(c.subs(point)) == 0 for c in self.conditions)

    def describe(self) -> str:
        if not self.conditions:
            return "abelian for all parameters"
        return " = ".join(str(c) for c in self.conditions) + " = 0"


def pencil_abelian_conditions(
    g: LieAlgebra,
    emb: EmbeddingMap,
    vectors: Sequence[AlgebraElement],
    names: Sequence[str] = PENCIL_SYMBOLS,
) -> PencilConditions:
    """Abelianity of the submodule generated by t_1 v_1 + ... + t_k v_k.

    The v_i are highest-weight vectors of the same weight, so one set of
    lowering words gives matching bases of every [v_i]; the combination of
    those bases spans [Σ t_i v_i] for generic t.
    """
    if not vectors:
        raise AbelianExtensionError("A pencil needs at least one vector")
    symbols = tuple(sympy.Symbol(n) for n in names[:len(vectors)])
    words = [word for word, _ in submodule_with_words(g, vectors[0], emb)]
    basis = []
    for word in words:
        element = g.zero()
        for t, v in zip(symbols, vectors):
            element = element + apply_word(g, emb, word, v) * t
        basis.append(element)

    conditions: Dict[str, sympy.Expr] = {}
    for a, b in combinations(basis, 2):
        for _, coeff in g.bracket(a, b).items():
            factored = sympy.factor(coeff)
            conditions.setdefault(str(factored), factored)
    return PencilConditions(symbols, [conditions[k] for k in sorted(conditions)], len(basis))


@dataclass
class CatalogEntry:
    name: str
    weights: List[Weight]
    dim: int
    abelian: bool
    reason: str
    witness: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'weights': [w.label() for w in self.weights],
            'dim': self.dim,
            'abelian': self.abelian,
            'reason': self.reason,
            'witness': self.witness,
        }


@dataclass
class AbelianExtensionCatalog:
    ambient: str
    variant: str
    bound: int
    entries: List[CatalogEntry] = field(default_factory=list)

    def abelian_entries(self) -> List[CatalogEntry]:
        return [e for e in self.entries if e.abelian]

    def entry(self, name: str) -> CatalogEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise AbelianExtensionError(f"No catalog entry {name!r} for {self.ambient} {self.variant}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            'ambient': self.ambient,
            'variant': self.variant,
            'max_abelian_dimension': self.bound,
            'entries': [e.to_dict() for e in self.entries],
        }

    def format(self) -> str:
        lines = [f"{self.ambient} ({self.variant}), abelian dimension bound {self.bound}"]
        for e in self.entries:
            verdict = "abelian" if e.abelian else "not abelian"
            lines.append(f"  {e.name:<28} dim {e.dim:>3}  {verdict:<12} {e.reason}")
        return "\n".join(lines)


def _bracket_verdict(g: LieAlgebra, basis: List[AlgebraElement], labels: List[str],
                     bound: int) -> Tuple[bool, str, Optional[str]]:
    result = is_abelian_subspace(g, basis)
    too_big = len(basis) > bound
    if result.abelian:
        if too_big:
            raise AbelianExtensionError(f"abelian subspace of dimension {len(basis)} above {bound}")
        return True, "all brackets vanish", None
    i, j, _ = result.witness  # type: ignore[misc]
    reason = f"dimension {len(basis)} exceeds {bound}" if too_big else "nonzero bracket"
    return False, reason, f"[{labels[i]}, {labels[j]}] != 0"


def scan_invariant_abelian(g: LieAlgebra, emb: EmbeddingMap) -> AbelianExtensionCatalog:
    """Which invariant subspaces built from highest-weight vectors are abelian.

    Covers each single generated submodule, each sum of two of them, and the
    pencils spanned by highest-weight vectors sharing a weight.
    """
    if g.name not in MAX_ABELIAN_DIMENSION:
        raise AbelianExtensionError(f"No abelian scan for {g.name}")
    bound = MAX_ABELIAN_DIMENSION[g.name]
    decomposition = decompose_under(adjoint_module(g), emb)
    singles: List[Tuple[str, Weight, AlgebraElement, List[AlgebraElement]]] = []
    for weight, _ in decomposition.constituents:
        names = decomposition.hw_labels.get(weight, [])
        for name, coeffs in zip(names, decomposition.hw_vector_spaces[weight]):
            vector = AlgebraElement(g.dim, coeffs)
            singles.append((name, weight, vector, generated_submodule(g, vector, emb)))

    catalog = AbelianExtensionCatalog(g.name, emb.variant, bound)
    for name, weight, _, basis in singles:
        labels = [f"{name}#{i}" for i in range(len(basis))]
        abelian, reason, witness = _bracket_verdict(g, basis, labels, bound)
        catalog.entries.append(CatalogEntry(f"[{name}]", [weight], len(basis), abelian, reason, witness))

    for (n1, w1, _, b1), (n2, w2, _, b2) in combinations(singles, 2):
        basis = b1 + b2
        labels = [f"{n1}#{i}" for i in range(len(b1))] + [f"{n2}#{i}" for i in range(len(b2))]
        abelian, reason, witness = _bracket_verdict(g, basis, labels, bound)
        catalog.entries.append(
            CatalogEntry(f"[{n1}] + [{n2}]", [w1, w2], len(basis), abelian, reason, witness)
        )

    by_weight: Dict[Weight, List[Tuple[str, AlgebraElement, int]]] = {}
    for name, weight, vector, basis in singles:
        by_weight.setdefault(weight, []).append((name, vector, len(basis)))
    for weight, members in sorted(by_weight.items(), reverse=True):
        if len(members) < 2:
            continue
        symbols = PENCIL_SYMBOLS[:len(members)]
        pencil_name = " + ".join(f"{s} {name}" for s, (name, _, _) in zip(symbols, members))
        dim = members[0][2]
        if dim > bound:
            reason = f"dimension {dim} exceeds {bound}"
            catalog.entries.append(CatalogEntry(pencil_name, [weight], dim, False, reason, reason))
            continue
        pencil = pencil_abelian_conditions(g, emb, [v for _, v, _ in members], symbols)
        reason = pencil.describe()
        catalog.entries.append(CatalogEntry(pencil_name, [weight], pencil.dim, pencil.always_abelian,
                                            reason, None if pencil.always_abelian else reason))

    for e in catalog.abelian_entries():
        if e.dim > bound:
            raise AbelianExtensionError(f"{e.name} abelian of dimension {e.dim} above {bound}")
    log("scan", f"{g.name} {emb.variant}: {len(catalog.abelian_entries())} abelian of {len(catalog.entries)}")
    return catalog
