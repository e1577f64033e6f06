"""Inner automorphisms that move lifts into each other.

Two kinds are used: torus scalings X_i -> b_i X_i, and for E7 an SL2 acting
through the triple (X''', H, Y') of the frame from `e7_frame`.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import sympy

from chevalley import (
    AlgebraElement,
    AlgebraRegistry,
    GeneratorMap,
    LieAlgebra,
    coefficient_is_zero,
    e7_frame,
    normalize_coefficient,
)
from config import log
from embed import LiftError, standard_lift

from .abelian import AbelianExtensionError

Quadruple = Tuple[Any, Any, Any, Any]
Triple = Tuple[Any, Any, Any]

IDENTITY_QUADRUPLE: Quadruple = (Fraction(1), Fraction(0), Fraction(1), Fraction(0))


class AutomorphismError(AbelianExtensionError):
    pass


def _inverse(value: Any) -> Any:
    if isinstance(value, (int, Fraction)):
        return Fraction(1) / Fraction(value)
    return normalize_coefficient(1 / sympy.sympify(value))


def _as_sympy(value: Any) -> sympy.Expr:
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    return sympy.sympify(value)


def torus_automorphism(g: LieAlgebra, scalings: Mapping[int, Any], label: str = "") -> GeneratorMap:
    """X_i -> b_i X_i, Y_i -> b_i^-1 Y_i, H_i fixed; unlisted nodes keep b_i = 1."""
    overrides: Dict[str, AlgebraElement] = {}
    for node, value in sorted(scalings.items()):
        g.check_node(node)
        if coefficient_is_zero(normalize_coefficient(value)):
            raise AutomorphismError(f"Torus scaling at node {node} is zero")
        overrides[f"X_{node}"] = g.x(node) * value
        overrides[f"Y_{node}"] = g.y(node) * _inverse(value)
    return GeneratorMap.from_overrides(g, overrides, label or f"torus {dict(scalings)}")


def torus_scale_factor(root: Sequence[int], scalings: Mapping[int, Any]) -> Any:
    """Scalar by which the torus automorphism multiplies the root vector of `root`."""
    factor: Any = Fraction(1)
    for node, c in enumerate(root, start=1):
        if c and node in scalings:
            value = scalings[node] if c > 0 else _inverse(scalings[node])
            factor = factor * value ** abs(c)
    return normalize_coefficient(factor)


@dataclass
class TorusEquivalence:
    """A torus automorphism taking the parameter-1 lift to the parameter-alpha lift."""

    ambient: str
    variant: str
    family: str
    alpha: Any
    scalings: Dict[int, Any]
    fixes_image: bool
    maps_radical: bool
    relation_failures: List[str] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return self.fixes_image and self.maps_radical and not self.relation_failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            'ambient': self.ambient,
            'variant': self.variant,
            'family': self.family,
            'alpha': str(self.alpha),
            'scalings': {str(k): str(v) for k, v in self.scalings.items()},
            'verified': self.verified,
        }


def realize_torus_equivalence(ambient: str, variant: str, family: str, alpha: Any,
                              node: int = 1) -> TorusEquivalence:
    """Scale node `node` so that the radical root vector picks up the factor alpha.

    The embedding images avoid `node`, so the scaling fixes them.
    """
    base = standard_lift(ambient, variant, family, {'alpha': 1})
    g = base.target
    scaled = standard_lift(ambient, variant, family, {'alpha': alpha}, target=g)
    radical = base.radical_image
    if radical is None or len(radical.coeffs) != 1 or g.is_cartan(radical):
        raise AutomorphismError(f"{base.describe()} has no root-vector radical to scale")
    (index,) = radical.coeffs
    power = g.root_of(index)[node - 1]
    if power == 0:
        raise AutomorphismError(f"Node {node} does not occur in the radical root of {base.describe()}")
    beta = normalize_coefficient(_as_sympy(alpha) ** sympy.Rational(1, power))
    scalings = {node: beta}
    rho = torus_automorphism(g, scalings)
    fixes = all(rho.apply(image) == image for image in base.generator_images())
    maps = rho.apply(radical) == scaled.radical_image
    result = TorusEquivalence(ambient, variant, family, alpha, scalings, fixes, maps, rho.relation_failures())
    log("lifts", f"{base.describe()} -> alpha={alpha} via node {node} scaling {beta}: "
                 f"{'ok' if result.verified else 'FAILED'}")
    return result


# -- SL2 acting on the E7 frame -------------------------------------------


def _is_unimodular(q: Sequence[Any]) -> bool:
    a, b, c, d = q
    return coefficient_is_zero(normalize_coefficient(a * c - b * d - 1))


def sl2_automorphism_e7(a: Any, b: Any, c: Any, d: Any, g: Optional[LieAlgebra] = None) -> GeneratorMap:
    """X_1 -> a X_1 + b Y'', Y_1 -> c Y_1 + d X'', generators 2..7 fixed.

    H_1 goes to the bracket of the two images. The map is conjugation by an
    element of the SL2 with triple (X''', H, Y'), so it fixes the image of
    D_6 and moves the Cartan-radical lifts among themselves.
    """
    if g is None:
        g = AlgebraRegistry.get('E7')
    if g.name != 'E7':
        raise AutomorphismError(f"The SL2 automorphism is defined on E7, not {g.name}")
    if not _is_unimodular((a, b, c, d)):
        raise AutomorphismError(f"ac - bd must be 1 for (a, b, c, d) = {(a, b, c, d)}")
    frame = e7_frame(g)
    x1 = g.x(1) * a + frame["Y''"] * b
    y1 = g.y(1) * c + frame["X''"] * d
    return GeneratorMap.from_overrides(
        g, {'X_1': x1, 'Y_1': y1, 'H_1': g.bracket(x1, y1)}, label=f"sl2 {(a, b, c, d)}"
    )


def expected_frame_images(g: LieAlgebra, q: Quadruple) -> Dict[str, AlgebraElement]:
    """Closed forms for the images of Y', X''', H."""
    a, b, c, d = q
    frame = e7_frame(g)
    y, x, h = frame["Y'"], frame["X'''"], frame["H"]
    return {
        "Y'": y * (c * c) - h * (c * d) - x * (d * d),
        "X'''": x * (a * a) + h * (a * b) - y * (b * b),
        "H": h * (a * c + b * d) + x * (2 * a * d) - y * (2 * b * c),
    }


def frame_action_failures(q: Quadruple, g: Optional[LieAlgebra] = None) -> List[str]:
    """Relations, bijectivity and the induced action on (Y', X''', H)."""
    rho = sl2_automorphism_e7(*q, g=g)
    g = rho.algebra
    failures = list(rho.relation_failures())
    frame = e7_frame(g)
    for name, expected in expected_frame_images(g, q).items():
        if rho.apply(frame[name]) != expected:
            failures.append(f"image of {name}")
    for node in range(2, g.rank + 1):
        if rho.apply(g.x(node)) != g.x(node):
            failures.append(f"X_{node} moved")
    return failures


def sl2_substitution(params: Triple, q: Quadruple) -> Triple:
    """Coefficients of rho(alpha Y' + beta X''' + gamma H) in Y', X''', H."""
    alpha, beta, gamma = params
    a, b, c, d = q
    return (
        normalize_coefficient(alpha * c * c - beta * b * b - 2 * gamma * b * c),
        normalize_coefficient(-alpha * d * d + beta * a * a + 2 * gamma * a * d),
        normalize_coefficient(-alpha * c * d + beta * a * b + gamma * (a * c + b * d)),
    )


def compose_quadruples(first: Quadruple, second: Quadruple) -> Quadruple:
    """Quadruple of rho_first after rho_second."""
    a1, b1, c1, d1 = first
    a2, b2, c2, d2 = second
    return (
        normalize_coefficient(a1 * a2 + d1 * b2),
        normalize_coefficient(b1 * a2 + c1 * b2),
        normalize_coefficient(b1 * d2 + c1 * c2),
        normalize_coefficient(a1 * d2 + d1 * c2),
    )


def sl2_invariant(params: Triple) -> Any:
    alpha, beta, gamma = params
    return normalize_coefficient(gamma * gamma + alpha * beta)


def is_sl2_witness(source: Triple, target: Triple, q: Quadruple) -> bool:
    if not _is_unimodular(q):
        return False
    image = sl2_substitution(source, q)
    return all(coefficient_is_zero(normalize_coefficient(u - v)) for u, v in zip(image, target))


def find_sl2_witness(source: Triple, target: Triple) -> Optional[Quadruple]:
    """A quadruple with ac - bd = 1 carrying source to target, over Q(i) where needed."""
    if not coefficient_is_zero(normalize_coefficient(sl2_invariant(source) - sl2_invariant(target))):
        return None
    symbols = sympy.symbols('a b c d')
    image = sl2_substitution(tuple(_as_sympy(v) for v in source), symbols)  # type: ignore[arg-type]
    a, b, c, d = symbols
    equations = [sympy.expand(u - _as_sympy(v)) for u, v in zip(image, target)]
    equations.append(a * c - b * d - 1)
    for solution in sympy.solve(equations, list(symbols), dict=True):
        general = [sympy.sympify(solution.get(s, s)) for s in symbols]
        free = set().union(*(expr.free_symbols for expr in general))
        for trial in (0, 1, 2, -1):
            candidate = tuple(normalize_coefficient(expr.subs({f: trial for f in free}))
                              for expr in general)
            if is_sl2_witness(source, target, candidate):  # type: ignore[arg-type]
                return candidate  # type: ignore[return-value]
    return None


def sample_quadruples(count: int, seed: int = 7) -> List[Quadruple]:
    """Rational (a, b, c, d) with ac - bd = 1, c solved from random a, b, d."""
    rng = random.Random(seed)
    out: List[Quadruple] = []
    while len(out) < count:
        a = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2, 3]))
        b = Fraction(rng.randint(-3, 3), rng.choice([1, 2]))
        d = Fraction(rng.randint(-3, 3), rng.choice([1, 3]))
        c = (1 + b * d) / a
        out.append((a, b, c, d))
    return out


def check_sl2_substitution(q: Quadruple, g: Optional[LieAlgebra] = None) -> List[str]:
    """Frame action of one quadruple plus invariance of gamma^2 + alpha*beta."""
    failures = frame_action_failures(q, g)
    alpha, beta, gamma = sympy.symbols('alpha beta gamma')
    image = sl2_substitution((alpha, beta, gamma), q)
    if sympy.expand(sl2_invariant(image) - sl2_invariant((alpha, beta, gamma))) != 0:
        failures.append("gamma^2 + alpha*beta not preserved")
    return failures


def sl2_lift_images(params: Triple, q: Quadruple, variant: str = "natural") -> Tuple[bool, Triple]:
    """Apply rho_q to the Cartan-radical lift with params; True when it lands on the substituted lift."""
    names = ('alpha', 'beta', 'gamma')
    try:
        lift = standard_lift('E7', variant, 'zero', dict(zip(names, params)))
    except LiftError as e:
        raise AutomorphismError(f"No E7 lift with parameters {params}: {e}") from e
    rho = sl2_automorphism_e7(*q, g=lift.target)
    moved = sl2_substitution(params, q)
    target = standard_lift('E7', variant, 'zero', dict(zip(names, moved)), target=lift.target)
    ok = rho.apply(lift.radical_image) == target.radical_image  # type: ignore[arg-type]
    ok = ok and all(rho.apply(image) == image for image in lift.generator_images())
    return ok, moved
