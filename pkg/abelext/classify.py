"""Lifts of the D_n embeddings up to inner automorphisms of the ambient algebra."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

import sympy

from chevalley import AlgebraRegistry, LieAlgebra, named_elements, proportionality
from config import log
from decomp import linear_equivalence_witness
from embed import LIFT_FAMILIES, EmbeddingMap, embedding, lift_label
from hwmod import highest_weight_module
from rootsys import Weight

from .abelian import AbelianExtensionError
from .automorphisms import (
    IDENTITY_QUADRUPLE,
    check_sl2_substitution,
    realize_torus_equivalence,
    sl2_lift_images,
)

AMBIENTS = ('E6', 'E7', 'E8')


def _rational(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


@dataclass
class ScalingObstruction:
    """Eigenvalue condition on a Cartan-radical rescaling H -> rH.

    An automorphism fixing the image of D_n and sending H to rH moves
    H_node to a Cartan element whose eigenvalue on Y_node must stay -2.
    """

    ambient: str
    node: int
    eigenvalue: sympy.Expr
    solutions: List[Any]

    @property
    def forces_identity(self) -> bool:
        return self.solutions == [1]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'ambient': self.ambient,
            'node': self.node,
            'eigenvalue': str(self.eigenvalue),
            'solutions': [str(s) for s in self.solutions],
            'forces_identity': self.forces_identity,
        }


def cartan_scaling_obstruction(g: LieAlgebra, emb: Optional[EmbeddingMap] = None,
                               node: int = 1) -> ScalingObstruction:
    if emb is None:
        emb = embedding(g.rank - 1, 'natural', g)
    fixed = {i + 1 for coeffs in emb.cartan_coefficients() for i in coeffs}
    free = set(range(1, g.rank + 1)) - fixed
    if free != {node}:
        raise AbelianExtensionError(f"The image Cartan leaves nodes {sorted(free)} free, not only {node}")
    special = named_elements(g).H_special.coeffs
    h = [special.get(g.h_index(i), Fraction(0)) for i in range(1, g.rank + 1)]
    r = sympy.Symbol('r')
    coefficients = [
        r if i == node else (r - 1) * _rational(h[i - 1]) / _rational(h[node - 1])
        for i in range(1, g.rank + 1)
    ]
    moved = g.cartan_element(coefficients)
    eigenvalue = proportionality(g.bracket(moved, g.y(node)), g.y(node))
    if eigenvalue is None:
        raise AbelianExtensionError(f"Y_{node} is not an eigenvector of the moved H_{node}")
    eigenvalue = sympy.factor(eigenvalue)
    solutions = sorted(sympy.solve(sympy.Eq(eigenvalue, -2), r), key=str)
    obstruction = ScalingObstruction(g.name, node, eigenvalue, solutions)
    log("lifts", f"{g.name}: eigenvalue of moved H_{node} on Y_{node} is {eigenvalue}, r in {solutions}")
    return obstruction


@dataclass
class WeightCertificate:
    """ad H eigenvalues on named root vectors."""

    ambient: str
    eigenvalues: Dict[str, Any]

    @property
    def separated(self) -> bool:
        """X''' and Y' lie in different ad H eigenspaces."""
        return self.eigenvalues.get("X'''") != self.eigenvalues.get("Y'")

    @property
    def fixes_xpp(self) -> bool:
        """[H, X''] = X''."""
        return self.eigenvalues.get("X''") == 1

    @property
    def verified(self) -> bool:
        return self.fixes_xpp and self.separated

    def to_dict(self) -> Dict[str, Any]:
        return {
            'ambient': self.ambient,
            'eigenvalues': {k: str(v) for k, v in self.eigenvalues.items()},
            'separated': self.separated,
            'fixes_xpp': self.fixes_xpp,
        }


def weight_eigenvalue_certificate(g: LieAlgebra) -> WeightCertificate:
    elements = named_elements(g).as_dict()
    h = elements.pop("H")
    eigenvalues = {name: proportionality(g.bracket(h, e), e) for name, e in elements.items()}
    return WeightCertificate(g.name, eigenvalues)


@dataclass
class LiftClass:
    ambient: str
    variant: str
    family: str
    label: str
    radical_weight: Weight
    kind: str
    description: str
    certificates: Dict[str, bool] = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return all(self.certificates.values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            'ambient': self.ambient,
            'variant': self.variant,
            'family': self.family,
            'label': self.label,
            'radical_weight': self.radical_weight.label(),
            'kind': self.kind,
            'description': self.description,
            'certificates': dict(sorted(self.certificates.items())),
            'verified': self.verified,
        }


def _radical_weight(ambient: str, variant: str, family: str) -> Weight:
    node = LIFT_FAMILIES[(ambient, variant)][family][0]
    n = int(ambient[1]) - 1
    return Weight.zero(n) if node == 0 else Weight.fundamental(n, node)


def _representative(ambient: str, variant: str, family: str, alpha: Any,
                    extra: Dict[str, bool]) -> LiftClass:
    equivalence = realize_torus_equivalence(ambient, variant, family, alpha)
    label = lift_label(ambient, variant, family, {'alpha': 1})
    general = lift_label(ambient, variant, family, {'alpha': 'α'})
    certificates = {f"torus scaling to alpha={alpha}": equivalence.verified}
    certificates.update(extra)
    return LiftClass(ambient, variant, family, label, _radical_weight(ambient, variant, family),
                     'representative', f"{general} ~ {label} for every α ≠ 0", certificates)


def _continuum(g: LieAlgebra, variant: str) -> LiftClass:
    emb = embedding(g.rank - 1, variant, g)
    obstruction = cartan_scaling_obstruction(g, emb)
    general = lift_label(g.name, variant, 'zero', {'alpha': 'α'})
    return LiftClass(g.name, variant, 'zero', general, _radical_weight(g.name, variant, 'zero'),
                     'continuum', f"{general}, α ≠ 0, pairwise inequivalent",
                     {"Cartan rescaling forced to 1": obstruction.forces_identity})


def _e7_orbits(g: LieAlgebra, variant: str) -> LiftClass:
    general = lift_label('E7', variant, 'zero', {'alpha': 'α', 'beta': 'β', 'gamma': 'γ'})
    sample = (Fraction(1), Fraction(1), Fraction(1), Fraction(0))
    transported, _ = sl2_lift_images((Fraction(1), Fraction(0), Fraction(0)), sample, variant)
    certificates = {
        "identity quadruple fixes the frame": not check_sl2_substitution(IDENTITY_QUADRUPLE, g),
        "SL2 frame action and invariant": not check_sl2_substitution(sample, g),
        "SL2 transports lifts": transported,
    }
    return LiftClass('E7', variant, 'zero', general, Weight.zero(6), 'orbit',
                     f"{general} for (α,β,γ) ≠ 0 up to the SL2 substitution; γ²+αβ is invariant",
                     certificates)


def classify_lifts(ambient: str, alpha: Any = Fraction(4)) -> List[LiftClass]:
    """Lift classes with the computations backing each distinctness claim.

    `alpha` is the sample parameter the torus equivalences are realised at.
    """
    if ambient not in AMBIENTS:
        raise AbelianExtensionError(f"No lift classification for {ambient}")
    g = AlgebraRegistry.get(ambient)
    classes: List[LiftClass] = []
    if ambient == 'E8':
        certificate = weight_eigenvalue_certificate(g)
        evidence = {"[H, X''] = X''": certificate.fixes_xpp,
                    "ad H eigenvalue separates X''' from Y'": certificate.separated}
        for family in ('lambda1', "lambda1'"):
            classes.append(_representative('E8', 'natural', family, alpha, dict(evidence)))
        classes.append(_continuum(g, 'natural'))
    elif ambient == 'E7':
        classes.extend(_e7_orbits(g, variant) for variant in ('natural', 'twisted'))
    else:
        module = highest_weight_module(g, Weight.fundamental(6, 6))
        distinct = not linear_equivalence_witness(module, embedding(5, 'natural', g), embedding(5, 'twisted', g))
        for family in ('lambda5', 'lambda4'):
            for variant in ('natural', 'twisted'):
                classes.append(_representative('E6', variant, family, alpha,
                                               {"phi and rho not linearly equivalent": distinct}))
        classes.extend(_continuum(g, variant) for variant in ('natural', 'twisted'))
    log("lifts", f"{ambient}: {len(classes)} classes, {sum(c.verified for c in classes)} verified")
    return classes


def format_classification(classes: List[LiftClass]) -> str:
    if not classes:
        return ""
    lines = [f"Lifts into {classes[0].ambient}",
             f"  {'radical':<8} {'variant':<8} {'kind':<15} class"]
    for c in sorted(classes, key=lambda c: (c.radical_weight, c.variant), reverse=True):
        mark = "" if c.verified else "  [unverified]"
        lines.append(f"  {c.radical_weight.label():<8} {c.variant:<8} {c.kind:<15} {c.description}{mark}")
    return "\n".join(lines)
