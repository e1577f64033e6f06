"""Explicit isotypic components and projections onto them."""

from typing import Dict, List, Set

from exactla import SparseEchelon, SparseVector
from embed import EmbeddingMap
from hwmod import WeightModule, action_of
from rootsys import Weight

from .decompose import DecompositionError, IsotypicDecomposition


class IsotypicSplitting:
    """The module as a direct sum of its isotypic components.

    Component vectors are homogeneous for the ambient weights (the lowering
    images are root vectors), so coordinates along the components are solved
    one ambient weight space at a time.
    """

    def __init__(self, m: WeightModule, components: Dict[Weight, List[SparseVector]]):
        self.module = m
        self.components = components
        self._echelons: Dict[Weight, SparseEchelon] = {}
        self._owners: Dict[Weight, List[Weight]] = {}
        for label, vectors in sorted(components.items(), reverse=True):
            for vector in vectors:
                ambient = self._ambient_weight(vector)
                echelon = self._echelons.setdefault(ambient, SparseEchelon())
                if not echelon.add(vector):
                    raise DecompositionError(f"Isotypic components overlap at weight {ambient.coords}")
                self._owners.setdefault(ambient, []).append(label)
        total = sum(len(v) for v in components.values())
        if total != m.dim:
            raise DecompositionError(f"Isotypic components span {total} of {m.dim} dimensions")

    def _ambient_weight(self, vector: SparseVector) -> Weight:
        weights = {self.module.weights[i] for i in vector}
        if len(weights) != 1:
            raise DecompositionError("Component vector is not a weight vector")
        return weights.pop()

    def project(self, vector: SparseVector) -> Dict[Weight, SparseVector]:
        """Coordinates of vector along the basis of each component."""
        by_weight: Dict[Weight, SparseVector] = {}
        for i, x in vector.items():
            by_weight.setdefault(self.module.weights[i], {})[i] = x
        out: Dict[Weight, SparseVector] = {}
        for ambient, part in by_weight.items():
            combination = self._echelons[ambient].express(part)
            if combination is None:
                raise DecompositionError(f"Vector outside the module at weight {ambient.coords}")
            owners = self._owners[ambient]
            for position, c in combination.items():
                if c != 0:
                    out.setdefault(owners[position], {})[(ambient, position)] = c
        return out

    def components_hit(self, vector: SparseVector) -> Set[Weight]:
        return set(self.project(vector))


def isotypic_subspaces(
    m: WeightModule,
    emb: EmbeddingMap,
    decomposition: IsotypicDecomposition,
) -> Dict[Weight, List[SparseVector]]:
    """Lowering closure of each highest-weight space under the image of D_n."""
    lowering = [action_of(m, y) for y in emb.y]
    components: Dict[Weight, List[SparseVector]] = {}
    for weight, hw_vectors in decomposition.hw_vector_spaces.items():
        echelon = SparseEchelon()
        basis: List[SparseVector] = []
        for v in hw_vectors:
            if echelon.add(v):
                basis.append(v)
        position = 0
        while position < len(basis):
            for op in lowering:
                image = op.apply(basis[position])
                if image and echelon.add(image):
                    basis.append(image)
            position += 1
        components[weight] = basis
    return components


def isotypic_splitting(
    m: WeightModule,
    emb: EmbeddingMap,
    decomposition: IsotypicDecomposition,
) -> IsotypicSplitting:
    return IsotypicSplitting(m, isotypic_subspaces(m, emb, decomposition))
