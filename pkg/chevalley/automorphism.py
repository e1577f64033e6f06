"""Maps of a Lie algebra given on its Chevalley generators."""

from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from exactla import SparseEchelon, SparseMatrix

from .algebra import AlgebraError, LieAlgebra
from .checks import check_generator_relations
from .element import AlgebraElement


class GeneratorMapError(AlgebraError):
    pass


class GeneratorMap:
    """Endomorphism of g determined by the images of X_i, Y_i, H_i.

    Root vectors are reached through extraspecial pairs: X_γ is a multiple of
    [X_i, X_β] with β lower than γ, so its image is the same multiple of the
    bracket of images. Images may carry sympy coefficients.
    """

    def __init__(
        self,
        g: LieAlgebra,
        x: Sequence[AlgebraElement],
        y: Sequence[AlgebraElement],
        h: Sequence[AlgebraElement],
        label: str = "",
    ):
        if not (len(x) == len(y) == len(h) == g.rank):
            raise GeneratorMapError(f"{g.name} needs {g.rank} images per generator kind")
        self.algebra = g
        self.x = list(x)
        self.y = list(y)
        self.h = list(h)
        self.label = label
        self._images: Optional[List[AlgebraElement]] = None

    @classmethod
    def from_overrides(cls, g: LieAlgebra, overrides: Dict[str, AlgebraElement],
                       label: str = "") -> 'GeneratorMap':
        """Identity on every generator except those named ('X_1', 'H_1', ...)."""
        images = {kind: [g.generator(kind, i) for i in range(1, g.rank + 1)] for kind in 'XYH'}
        for name, image in overrides.items():
            kind, node = name[0], int(name[2:])
            g.check_node(node)
            images[kind][node - 1] = image
        return cls(g, images['X'], images['Y'], images['H'], label)

    def images(self) -> List[AlgebraElement]:
        """Image of every basis element, in basis order."""
        if self._images is not None:
            return self._images
        g = self.algebra
        out: List[Optional[AlgebraElement]] = [None] * g.dim
        for node in range(1, g.rank + 1):
            out[g.x_index(node - 1)] = self.x[node - 1]
            out[g.y_index(node - 1)] = self.y[node - 1]
            out[g.h_index(node)] = self.h[node - 1]
        for k in range(g.rank, g.n_positive):
            node, beta = g.extraspecial_pair(k)
            for index_of in (g.x_index, g.y_index):
                simple = index_of(node - 1)
                lower = index_of(beta)
                c = g.structure_constant(simple, lower, index_of(k))
                if c == 0:
                    raise GeneratorMapError(f"Extraspecial bracket vanishes at {g.labels[index_of(k)]}")
                out[index_of(k)] = g.bracket(out[simple], out[lower]) * Fraction(1, c)
        self._images = out  # type: ignore[assignment]
        return self._images  # type: ignore[return-value]

    def apply(self, a: AlgebraElement) -> AlgebraElement:
        images = self.images()
        result = self.algebra.zero()
        for i, coeff in a.coeffs.items():
            result = result + images[i] * coeff
        return result

    def relation_failures(self) -> List[str]:
        return check_generator_relations(self.algebra, self.algebra.cartan, self.x, self.y, self.h)

    def matrix(self) -> SparseMatrix:
        g = self.algebra
        columns = {}
        for j, image in enumerate(self.images()):
            if image.is_symbolic():
                raise GeneratorMapError("Symbolic map has no rational matrix")
            columns[j] = dict(image.coeffs)
        return SparseMatrix(g.dim, g.dim, columns)

    def is_bijective(self) -> bool:
        echelon = SparseEchelon()
        for image in self.images():
            if image.is_symbolic():
                raise GeneratorMapError("Bijectivity is only decided for rational maps")
            echelon.add(dict(image.coeffs))
        return len(echelon) == self.algebra.dim

    def is_automorphism(self) -> bool:
        return not self.relation_failures() and self.is_bijective()

    def __repr__(self) -> str:
        return f"GeneratorMap({self.algebra.name}, {self.label or 'unnamed'})"
