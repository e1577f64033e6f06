"""Irreducible highest-weight modules by lowering closure.

Starting from the highest-weight vector u, level L holds the vectors
Y_j b for b in level L-1. A vector below u is zero exactly when every X_i
kills it, so a candidate is recorded by its raising signature
(X_1 w, ..., X_n w), computed from already known actions through

    X_i Y_j b = Y_j X_i b + δ_ij μ_i(b) b.

Candidates are kept when their signature is independent of those already
kept in the same weight space; the others are written through the kept
ones, which fills in the Y action.
"""

from fractions import Fraction
from typing import Dict, Hashable, List, Optional, Tuple

from exactla import SparseEchelon, SparseMatrix, SparseVector, add_scaled
from chevalley import LieAlgebra
from config import log
from rootsys import Weight, root_to_weight, highest_root, weight_of_lowering_word, weyl_dim

from .module import DimensionCapError, ModuleError, WeightModule, adjoint_module

DEFAULT_DIMENSION_CAP = 1000


def _apply_columns(columns: Dict[int, SparseVector], vector: SparseVector) -> SparseVector:
    out: SparseVector = {}
    for j, x in vector.items():
        col = columns.get(j)
        if col:
            add_scaled(out, col, x)
    return out


def construct_irrep(g: LieAlgebra, hw: Weight, cap: int = DEFAULT_DIMENSION_CAP) -> WeightModule:
    rs = g.root_system
    n = g.rank
    expected = weyl_dim(rs, hw)
    if expected > cap:
        raise DimensionCapError(expected, cap, f"V_{g.name}({hw.label()})")

    weights: List[Weight] = [hw]
    words: List[Tuple[int, ...]] = [()]
    x_cols: List[Dict[int, SparseVector]] = [{} for _ in range(n)]
    y_cols: List[Dict[int, SparseVector]] = [{} for _ in range(n)]

    level = [0]
    while level:
        echelons: Dict[Weight, SparseEchelon] = {}
        kept_by_weight: Dict[Weight, List[int]] = {}
        next_level: List[int] = []
        for b in level:
            mu = weights[b]
            for j in range(n):
                target = weight_of_lowering_word(rs, mu, (j + 1,))
                signature: Dict[Hashable, Fraction] = {}
                for i in range(n):
                    part = _apply_columns(y_cols[j], x_cols[i].get(b, {}))
                    if i == j and mu.coords[i]:
                        add_scaled(part, {b: Fraction(1)}, mu.coords[i])
                    for k, value in part.items():
                        signature[(i, k)] = value
                if not signature:
                    continue
                echelon = echelons.setdefault(target, SparseEchelon())
                kept = kept_by_weight.setdefault(target, [])
                combination = echelon.express(signature)
                if combination is None:
                    echelon.add(signature)
                    index = len(weights)
                    if index >= cap:
                        raise DimensionCapError(index + 1, cap, f"V_{g.name}({hw.label()})")
                    weights.append(target)
                    words.append((j + 1,) + words[b])
                    kept.append(index)
                    next_level.append(index)
                    for (i, k), value in signature.items():
                        x_cols[i].setdefault(index, {})[k] = value
                    y_cols[j][b] = {index: Fraction(1)}
                else:
                    y_cols[j][b] = {kept[pos]: c for pos, c in combination.items() if c != 0}
        level = next_level

    dim = len(weights)
    if dim != expected:
        raise ModuleError(f"V_{g.name}({hw.label()}): closure gave {dim}, Weyl dimension is {expected}")
    log("build", f"V_{g.name}({hw.label()}) built, dim {dim}")
    h_action = [
        SparseMatrix(dim, dim, {k: {k: Fraction(w.coords[i])} for k, w in enumerate(weights) if w.coords[i]})
        for i in range(n)
    ]
    return WeightModule(
        algebra=g,
        highest_weight=hw,
        weights=weights,
        x_action=[SparseMatrix(dim, dim, cols) for cols in x_cols],
        y_action=[SparseMatrix(dim, dim, cols) for cols in y_cols],
        h_action=h_action,
        basis_words=words,
        label=f"V_{g.name}({hw.label()})",
    )


def highest_weight_module(g: LieAlgebra, hw: Optional[Weight] = None,
                          cap: int = DEFAULT_DIMENSION_CAP) -> WeightModule:
    """Adjoint module for hw None or the adjoint highest weight, else construct_irrep."""
    adjoint_weight = root_to_weight(g.root_system, highest_root(g.root_system))
    if hw is None or hw == adjoint_weight:
        return adjoint_module(g)
    return construct_irrep(g, hw, cap)
