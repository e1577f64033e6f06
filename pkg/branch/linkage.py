"""Restriction of E_{n+1} modules to a lifted D_n ⋉ V and linkage of constituents."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Set, Tuple

import networkx as nx

from exactla import SparseEchelon, SparseMatrix, SparseVector
from chevalley import AlgebraElement, proportionality
from config import log
from decomp import IsotypicDecomposition, decompose_under, isotypic_splitting
from embed import EmbeddingMap, generated_submodule, image_span
from hwmod import WeightModule, action_of
from rootsys import Weight


class BranchingError(Exception):
    pass


def _require_lift(m: WeightModule, lift: EmbeddingMap) -> None:
    if not lift.has_radical:
        raise BranchingError(f"{lift.describe()} has no radical")
    if lift.radical_image is not None and lift.radical_image.is_symbolic():
        raise BranchingError(f"{lift.describe()} has symbolic parameters; branch a rational member")
    if m.algebra.name != lift.target.name:
        raise BranchingError(f"{lift.describe()} does not act on {m.describe()}")


def indecomposability_criterion(m: WeightModule, lift: EmbeddingMap) -> bool:
    """The lift's image contains all positive or all negative root vectors of the ambient algebra.

    Such an image leaves no proper direct-sum splitting of an irreducible
    ambient module invariant.
    """
    _require_lift(m, lift)
    g = lift.target
    echelon = SparseEchelon()
    for b in image_span(lift):
        echelon.add(dict(b.coeffs))
    positive = all(echelon.contains({g.x_index(k): 1}) for k in range(g.n_positive))
    negative = all(echelon.contains({g.y_index(k): 1}) for k in range(g.n_positive))
    return positive or negative


def radical_actions(m: WeightModule, lift: EmbeddingMap) -> List[SparseMatrix]:
    """Action matrices of a basis of the radical image."""
    _require_lift(m, lift)
    basis = generated_submodule(lift.target, lift.radical_image, lift)  # type: ignore[arg-type]
    return [action_of(m, r) for r in basis]


def radical_commutation_failures(m: WeightModule, lift: EmbeddingMap) -> List[Tuple[int, int]]:
    """Pairs of radical basis elements whose actions on m do not commute."""
    actions = radical_actions(m, lift)
    failures = []
    for i in range(len(actions)):
        for j in range(i + 1, len(actions)):
            if not actions[i].commutator(actions[j]).is_zero():
                failures.append((i, j))
    return failures


@dataclass
class BranchingReport:
    """Linkage blocks of a module under a lift.

    `all_positive_roots_contained` is the indecomposability criterion: it is
    true when the lifted image holds every positive root vector or every
    negative one. `contains_root_half` reads the same flag.
    """

    module: str
    lift: str
    decomposition: IsotypicDecomposition
    linkage_edges: List[Tuple[int, int]]
    blocks: List[List[int]]
    all_positive_roots_contained: bool
    parameter_dependent: List[int] = field(default_factory=list)

    @property
    def contains_root_half(self) -> bool:
        return self.all_positive_roots_contained

    @property
    def components(self) -> List[Weight]:
        """Isotypic components; edges and blocks index into this list."""
        return [w for w, _ in self.decomposition.constituents]

    def block_weights(self) -> List[List[Weight]]:
        """Each block with every constituent repeated by its multiplicity."""
        out = []
        for block in self.blocks:
            weights: List[Weight] = []
            for i in block:
                weight, mult = self.decomposition.constituents[i]
                weights.extend([weight] * mult)
            out.append(weights)
        return out

    def to_dict(self) -> Dict[str, Any]:
        return {
            'module': self.module,
            'lift': self.lift,
            'constituents': self.decomposition.to_dict()['constituents'],
            'linkage_edges': [list(e) for e in self.linkage_edges],
            'blocks': [[w.label() for w in block] for block in self.block_weights()],
            'all_positive_roots_contained': self.all_positive_roots_contained,
            'parameter_dependent': [self.components[i].label() for i in self.parameter_dependent],
            'summary': format_blocks(self),
        }


def _acts_as_scalar(dim: int, vectors: Sequence[SparseVector], images: Sequence[SparseVector]) -> bool:
    scalar = None
    for v, w in zip(vectors, images):
        s = proportionality(AlgebraElement(dim, w), AlgebraElement(dim, v))
        if s is None or (scalar is not None and s != scalar):
            return False
        scalar = s
    return True


def branch_with_linkage(m: WeightModule, lift: EmbeddingMap) -> BranchingReport:
    """Constituents under the image of D_n, joined where the radical maps one into another.

    Blocks are the connected components of the linkage graph. A component
    of multiplicity above one on which the radical acts by a non-scalar map
    is listed as parameter dependent: how it splits is not settled here.
    """
    _require_lift(m, lift)
    decomposition = decompose_under(m, lift)
    splitting = isotypic_splitting(m, lift, decomposition)
    actions = radical_actions(m, lift)
    position = {w: i for i, (w, _) in enumerate(decomposition.constituents)}

    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(position)))
    internal: Set[int] = set()
    for weight, vectors in splitting.components.items():
        i = position[weight]
        for op in actions:
            images = [op.apply(v) for v in vectors]
            for image in images:
                for target in splitting.components_hit(image):
                    if target != weight:
                        graph.add_edge(i, position[target])
            if decomposition.multiplicity(weight) > 1 and not _acts_as_scalar(m.dim, vectors, images):
                if weight in {t for image in images for t in splitting.components_hit(image)}:
                    internal.add(i)

    blocks = sorted(sorted(c) for c in nx.weakly_connected_components(graph))
    report = BranchingReport(
        module=m.describe(),
        lift=lift.describe(),
        decomposition=decomposition,
        linkage_edges=sorted(graph.edges()),
        blocks=blocks,
        all_positive_roots_contained=indecomposability_criterion(m, lift),
        parameter_dependent=sorted(internal),
    )
    log("branch", f"{m.describe()} under {lift.describe()}: {format_blocks(report)}")
    return report


def format_blocks(report: BranchingReport) -> str:
    """Blocks joined by "⊕", constituents inside a block joined by "+"."""
    parts = []
    for block in report.blocks:
        terms = []
        for i in block:
            weight, mult = report.decomposition.constituents[i]
            prefix = f"{mult}" if mult > 1 else ""
            terms.append(f"{prefix}V({weight.label()})")
        text = " + ".join(terms)
        parts.append(f"({text})" if len(report.blocks) > 1 and len(terms) > 1 else text)
    return " ⊕ ".join(parts)
