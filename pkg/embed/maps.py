"""The natural and twisted embeddings of D_n in E_{n+1}."""

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from chevalley import AlgebraElement, AlgebraRegistry, LieAlgebra, proportionality
from rootsys import SimpleType, Weight, cartan_matrix

SUPPORTED_SOURCE_RANKS = (5, 6, 7)
VARIANTS = ("natural", "twisted")


class EmbeddingError(Exception):
    """Base exception for embeddings and lifts."""
    pass


class HomomorphismError(EmbeddingError):
    pass


class LiftError(EmbeddingError):
    pass


@dataclass
class EmbeddingMap:
    """Images of the D_n generators in E_{n+1}, plus an optional radical.

    The radical is described by the image of a highest-weight vector u of
    the representation V attached to D_n; its D_n weight is radical_weight.
    """

    source: SimpleType
    target: LieAlgebra
    x: List[AlgebraElement]
    y: List[AlgebraElement]
    h: List[AlgebraElement]
    variant: str = "natural"
    radical_image: Optional[AlgebraElement] = None
    radical_weight: Optional[Weight] = None
    params: Dict[str, Any] = field(default_factory=dict)
    label: str = ""

    @property
    def rank(self) -> int:
        return self.source.rank

    @property
    def source_cartan(self) -> Tuple[Tuple[int, ...], ...]:
        return cartan_matrix(self.source)

    @property
    def has_radical(self) -> bool:
        return self.radical_image is not None

    def generator_images(self) -> List[AlgebraElement]:
        return self.x + self.y + self.h

    def image(self, kind: str, node: int) -> AlgebraElement:
        if not 1 <= node <= self.rank:
            raise EmbeddingError(f"{self.source} has no node {node}")
        return {'X': self.x, 'Y': self.y, 'H': self.h}[kind][node - 1]

    def cartan_coefficients(self) -> List[Dict[int, Fraction]]:
        """φ(H_k) on H_1..H_rank of the target, for each source node k."""
        g = self.target
        offset = 2 * g.n_positive
        out = []
        for image in self.h:
            if not g.is_cartan(image) or image.is_symbolic():
                raise EmbeddingError("Cartan images must be rational Cartan elements")
            out.append({i - offset: c for i, c in image.coeffs.items()})
        return out

    def source_weight_of_target_weight(self, target_weight: Weight) -> Tuple[Fraction, ...]:
        return tuple(
            sum((c * target_weight.coords[t] for t, c in coeffs.items()), Fraction(0))
            for coeffs in self.cartan_coefficients()
        )

    def source_weight(self, a: AlgebraElement) -> Optional[Weight]:
        """D_n weight of a weight vector of the image, or None."""
        coords = []
        for image in self.h:
            value = self.target.bracket(image, a)
            s = proportionality(value, a) if not value.is_zero() else Fraction(0)
            if s is None:
                return None
            if not isinstance(s, Fraction) or s.denominator != 1:
                return None
            coords.append(int(s))
        return Weight(tuple(coords))

    def describe(self) -> str:
        if self.label:
            return self.label
        base = "phi" if self.variant == "natural" else "rho"
        return f"{base}_{self.rank}: {self.source} -> {self.target.name}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'source': str(self.source),
            'target': self.target.name,
            'variant': self.variant,
            'label': self.describe(),
            'radical_weight': list(self.radical_weight.coords) if self.radical_weight else None,
            'params': {k: str(v) for k, v in sorted(self.params.items())},
        }

    def without_radical(self) -> 'EmbeddingMap':
        return replace(self, radical_image=None, radical_weight=None, params={}, label="")


def _check_rank(n: int) -> None:
    if n not in SUPPORTED_SOURCE_RANKS:
        raise EmbeddingError(f"D{n} -> E{n + 1} is only realised for n in 5, 6, 7")


def target_node(n: int, source_node: int) -> int:
    """Source node n+1-i goes to target node i+1."""
    return n + 2 - source_node


def natural_embedding(n: int, target: Optional[LieAlgebra] = None) -> EmbeddingMap:
    _check_rank(n)
    g = target if target is not None else AlgebraRegistry.get(f"E{n + 1}")
    if g.name != f"E{n + 1}":
        raise EmbeddingError(f"D{n} embeds in E{n + 1}, not {g.name}")
    nodes = [target_node(n, k) for k in range(1, n + 1)]
    return EmbeddingMap(
        source=SimpleType('D', n),
        target=g,
        x=[g.x(t) for t in nodes],
        y=[g.y(t) for t in nodes],
        h=[g.h(t) for t in nodes],
        variant="natural",
    )


def outer_automorphism_permutation(n: int) -> List[int]:
    """The diagram automorphism of D_n exchanging nodes n-1 and n."""
    perm = list(range(1, n + 1))
    perm[n - 2], perm[n - 1] = n, n - 1
    return perm


def twisted_embedding(n: int, target: Optional[LieAlgebra] = None) -> EmbeddingMap:
    """The natural embedding precomposed with the outer automorphism."""
    natural = natural_embedding(n, target)
    perm = outer_automorphism_permutation(n)
    return EmbeddingMap(
        source=natural.source,
        target=natural.target,
        x=[natural.x[p - 1] for p in perm],
        y=[natural.y[p - 1] for p in perm],
        h=[natural.h[p - 1] for p in perm],
        variant="twisted",
    )


def embedding(n: int, variant: str = "natural", target: Optional[LieAlgebra] = None) -> EmbeddingMap:
    if variant == "natural":
        return natural_embedding(n, target)
    if variant == "twisted":
        return twisted_embedding(n, target)
    raise EmbeddingError(f"Unknown embedding variant {variant!r}")
