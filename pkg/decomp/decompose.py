"""Restriction of a module to an embedded D_n and its isotypic constituents."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from exactla import RationalMatrix, SparseVector, nullspace
from chevalley import AlgebraElement, AlgebraRegistry, proportionality
from config import log
from embed import EmbeddingMap, frame_elements
from hwmod import WeightModule, action_of
from rootsys import Weight, weyl_dim


class DecompositionError(Exception):
    pass


@dataclass
class IsotypicDecomposition:
    module: str
    embedding: str
    source: str
    constituents: List[Tuple[Weight, int]]
    hw_vector_spaces: Dict[Weight, List[SparseVector]]
    total_dim: int
    hw_labels: Dict[Weight, List[str]] = field(default_factory=dict)

    def multiplicity(self, weight: Weight) -> int:
        return dict(self.constituents).get(weight, 0)

    def multiset(self) -> Dict[Tuple[int, ...], int]:
        return {w.coords: mult for w, mult in self.constituents}

    def dimensions(self) -> List[Tuple[Weight, int, int]]:
        rs = AlgebraRegistry.root_system(self.source)
        return [(w, mult, weyl_dim(rs, w)) for w, mult in self.constituents]

    def format(self) -> str:
        parts = []
        for weight, mult, _ in self.dimensions():
            prefix = f"{mult}" if mult > 1 else ""
            parts.append(f"{prefix}V({weight.label()})")
        return " ⊕ ".join(parts)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'module': self.module,
            'embedding': self.embedding,
            'total_dim': self.total_dim,
            'constituents': [
                {
                    'weight': list(w.coords),
                    'label': w.label(),
                    'multiplicity': mult,
                    'dim': dim,
                    'hw_vectors': self.hw_labels.get(w, []),
                }
                for w, mult, dim in self.dimensions()
            ],
            'summary': self.format(),
        }


def _joint_kernel(raising: List[Dict[int, SparseVector]], indices: List[int]) -> List[SparseVector]:
    """Vectors supported on indices and killed by every raising operator."""
    rows: Dict[Tuple[int, Any], Dict[int, Fraction]] = {}
    for op, columns in enumerate(raising):
        for col_pos, index in enumerate(indices):
            for row, value in columns.get(index, {}).items():
                rows.setdefault((op, row), {})[col_pos] = value
    if not rows:
        return [{index: Fraction(1)} for index in indices]
    matrix = RationalMatrix.from_rows(
        [[row.get(c, Fraction(0)) for c in range(len(indices))] for _, row in sorted(rows.items())]
    )
    kernel = []
    for vector in nullspace(matrix):
        kernel.append({indices[c]: x for c, x in enumerate(vector) if x != 0})
    return kernel


def _relabel(m: WeightModule, kernel: List[SparseVector]) -> Tuple[List[SparseVector], List[str]]:
    """On the adjoint module, swap kernel vectors for named elements they are proportional to."""
    labels = [""] * len(kernel)
    if not m.is_adjoint or m.algebra.name not in ("E6", "E7", "E8"):
        return kernel, labels
    g = m.algebra
    names = dict(frame_elements(g))
    names.update({"Y_1": g.y(1), "X_1": g.x(1)})
    out = list(kernel)
    for k, vector in enumerate(kernel):
        element = AlgebraElement(g.dim, vector)
        for name, named in names.items():
            if proportionality(element, named) is not None:
                out[k] = dict(named.coeffs)
                labels[k] = name
                break
    return out, labels


def decompose_under(m: WeightModule, emb: EmbeddingMap) -> IsotypicDecomposition:
    """Highest-weight vectors of the image of D_n and their multiplicities.

    Generator images are root vectors and Cartan elements, so the joint
    kernel of the raising images is computed one module weight space at a
    time.
    """
    if emb.target.name != m.algebra.name:
        raise DecompositionError(f"{emb.describe()} does not act on {m.describe()}")
    raising = [action_of(m, x).columns for x in emb.x]
    spaces: Dict[Weight, List[SparseVector]] = {}
    labels: Dict[Weight, List[str]] = {}
    for ambient_weight, indices in sorted(m.weight_spaces().items(), reverse=True):
        coords = emb.source_weight_of_target_weight(ambient_weight)
        if any(c < 0 or c.denominator != 1 for c in coords):
            continue
        kernel = _joint_kernel(raising, indices)
        if not kernel:
            continue
        kernel, names = _relabel(m, kernel)
        weight = Weight(tuple(int(c) for c in coords))
        spaces.setdefault(weight, []).extend(kernel)
        labels.setdefault(weight, []).extend(names)

    rs = AlgebraRegistry.root_system(emb.source)
    constituents = sorted(((w, len(v)) for w, v in spaces.items()), reverse=True)
    total = sum(mult * weyl_dim(rs, w) for w, mult in constituents)
    if total != m.dim:
        raise DecompositionError(
            f"{m.describe()} under {emb.describe()}: constituents sum to {total}, module has {m.dim}"
        )
    decomposition = IsotypicDecomposition(
        module=m.describe(),
        embedding=emb.describe(),
        source=str(emb.source),
        constituents=constituents,
        hw_vector_spaces=spaces,
        total_dim=total,
        hw_labels={
            w: [n or f"v{k}({w.label()})" for k, n in enumerate(names)] for w, names in labels.items()
        },
    )
    log("decomp", f"{m.describe()} under {emb.describe()}: {decomposition.format()}")
    return decomposition


def linear_equivalence_witness(m: WeightModule, first: EmbeddingMap, second: EmbeddingMap) -> bool:
    """True when both restrictions have the same constituent multiset."""
    a = decompose_under(m, first)
    b = a if first is second else decompose_under(m, second)
    return a.multiset() == b.multiset()
