"""Nested commutators and the distinguished elements of E6, E7 and E8."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from .algebra import AlgebraError, LieAlgebra, UnknownIndexError
from .element import AlgebraElement, proportionality


class NamedElementError(AlgebraError):
    pass


def nested_commutator(g: LieAlgebra, kind: str, indices: Sequence[int]) -> AlgebraElement:
    """[[...[[G_a1, G_a2], G_a3], ...], G_ak] for G = X or Y."""
    if kind not in ('X', 'Y'):
        raise UnknownIndexError(f"Nested commutators use X or Y generators, got {kind!r}")
    if not indices:
        raise UnknownIndexError("Empty index list")
    for i in indices:
        g.check_node(i)
    result = g.generator(kind, indices[0])
    for i in indices[1:]:
        result = g.bracket(result, g.generator(kind, i))
    return result


def lowered(g: LieAlgebra, element: AlgebraElement, indices: Sequence[int]) -> AlgebraElement:
    """[Y_am, ... [Y_a2, [Y_a1, element]]]."""
    for i in indices:
        element = g.bracket(g.y(i), element)
    return element


# (sign, kind, index string) per element, and the special Cartan element.
_RECIPES: Dict[str, Dict[str, Tuple[int, str, Tuple[int, ...]]]] = {
    'E8': {
        "X'": (1, 'X', (4, 5, 6, 7, 8, 2, 3, 4, 5, 6, 7)),
        "X''": (-1, 'X', (3, 4, 2, 1, 5, 4, 3, 6, 5, 4, 7, 2, 6, 5, 8, 7, 6, 4, 5, 3, 4, 2)),
        "X'''": (1, 'X', (8, 7, 6, 5, 4, 3, 2, 1, 4, 5, 6, 7, 3, 4, 5, 6, 2, 4, 5, 3, 4, 2,
                          1, 3, 4, 5, 6, 7, 8)),
        "Y'": (-1, 'Y', (5, 4, 2, 3, 6, 4, 1, 3, 5, 4, 7, 2, 6, 5, 4, 3, 1)),
    },
    'E7': {
        "X'": (1, 'X', (6, 7, 5, 4, 3, 2, 4, 5, 6)),
        "X''": (1, 'X', (7, 6, 5, 4, 3, 2, 4, 5, 6, 1, 3, 4, 5, 2, 4, 3)),
        "X'''": (-1, 'X', (7, 6, 5, 4, 3, 2, 4, 5, 6, 1, 3, 4, 5, 2, 4, 3, 1)),
        "Y'": (-1, 'Y', (7, 6, 5, 4, 3, 2, 4, 5, 6, 1, 3, 4, 5, 2, 4, 3, 1)),
        "Y''": (1, 'Y', (7, 6, 5, 4, 3, 2, 4, 5, 6, 1, 3, 4, 5, 2, 4, 3)),
    },
    'E6': {
        "X'": (1, 'X', (6, 5, 4, 3, 2, 4, 5)),
        "X''": (1, 'X', (6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2)),
    },
}

SPECIAL_CARTAN: Dict[str, Tuple[Fraction, ...]] = {
    'E8': tuple(Fraction(c) for c in (4, 5, 7, 10, 8, 6, 4, 2)),
    'E7': tuple(Fraction(c) for c in (2, 2, 3, 4, 3, 2, 1)),
    'E6': (Fraction(2), Fraction(3, 2), Fraction(5, 2), Fraction(3), Fraction(2), Fraction(1)),
}

ELEMENT_FIELDS = (("X'", 'Xp'), ("X''", 'Xpp'), ("X'''", 'Xppp'),
                  ("Y'", 'Yp'), ("Y''", 'Ypp'), ("H", 'H_special'))


@dataclass
class NamedElements:
    ambient: str
    Xp: AlgebraElement
    Xpp: AlgebraElement
    H_special: AlgebraElement
    Xppp: Optional[AlgebraElement] = None
    Yp: Optional[AlgebraElement] = None
    Ypp: Optional[AlgebraElement] = None

    def as_dict(self) -> Dict[str, AlgebraElement]:
        out = {}
        for name, attr in ELEMENT_FIELDS:
            value = getattr(self, attr)
            if value is not None:
                out[name] = value
        return out

    def get(self, name: str) -> AlgebraElement:
        elements = self.as_dict()
        if name not in elements:
            raise NamedElementError(f"{self.ambient} has no element {name}")
        return elements[name]


def element_recipe(ambient: str, name: str) -> Tuple[int, str, Tuple[int, ...]]:
    try:
        return _RECIPES[ambient][name]
    except KeyError as e:
        raise NamedElementError(f"{ambient} has no nested-commutator element {name}") from e


def named_elements(g: LieAlgebra) -> NamedElements:
    if g.name not in _RECIPES:
        raise NamedElementError(f"Named elements exist only for E6, E7, E8, not {g.name}")
    built: Dict[str, AlgebraElement] = {}
    for name, (sign, kind, indices) in _RECIPES[g.name].items():
        element = nested_commutator(g, kind, indices)
        if element.is_zero():
            raise NamedElementError(f"{g.name} {name} vanishes")
        built[name] = element if sign == 1 else -element
    built["H"] = g.cartan_element(SPECIAL_CARTAN[g.name])
    return NamedElements(
        ambient=g.name,
        Xp=built["X'"],
        Xpp=built["X''"],
        H_special=built["H"],
        Xppp=built.get("X'''"),
        Yp=built.get("Y'"),
        Ypp=built.get("Y''"),
    )


def resolve_element(g: LieAlgebra, name: str, named: Optional[NamedElements] = None) -> AlgebraElement:
    """Named element ("X'''", "H", ...) or generator ("Y_1", "H_3")."""
    if len(name) == 3 and name[0] in 'XYH' and name[1] == '_' and name[2].isdigit():
        return g.generator(name[0], int(name[2]))
    if named is None:
        named = named_elements(g)
    return named.get(name)


def e7_frame(g: LieAlgebra) -> Dict[str, AlgebraElement]:
    """E7 elements re-signed so the SL2 relations hold exactly.

    Starting from X'', sets X''' = [X_1, X''], then picks the signs of Y'
    and Y'' with [X''', Y'] = H and [Y_1, Y''] = Y'. [Y_1, X'''] = X'' then
    holds automatically.
    """
    if g.name != 'E7':
        raise NamedElementError(f"The SL2 frame is defined on E7, not {g.name}")
    named = named_elements(g)
    x2 = named.Xpp
    x3 = g.bracket(g.x(1), x2)
    h = named.H_special
    s = proportionality(g.bracket(x3, named.Yp), h)
    if s not in (1, -1):
        raise NamedElementError("[X''', Y'] is not ±H")
    y1 = named.Yp * s
    t = proportionality(g.bracket(g.y(1), named.Ypp), y1)
    if t not in (1, -1):
        raise NamedElementError("[Y_1, Y''] is not ±Y'")
    y2 = named.Ypp * t
    if g.bracket(g.y(1), x3) != x2:
        raise NamedElementError("[Y_1, X'''] is not X''")
    return {"X''": x2, "X'''": x3, "Y'": y1, "Y''": y2, "H": h}


def sign_audit(g: LieAlgebra) -> Dict[str, Optional[int]]:
    """Observed signs s in the convention-dependent relations 'lhs = s * rhs'.

    None means the two sides are not proportional, which is a failure.
    """
    if g.name not in ('E7', 'E8'):
        return {}
    named = named_elements(g)
    audit: Dict[str, Optional[int]] = {}

    def record(label: str, lhs: AlgebraElement, rhs: AlgebraElement) -> None:
        s = proportionality(lhs, rhs)
        audit[label] = int(s) if s in (1, -1) else None

    if g.name == 'E7':
        record("[X_1,X''] = s X'''", g.bracket(g.x(1), named.Xpp), named.Xppp)
        record("[Y_1,Y''] = s Y'", g.bracket(g.y(1), named.Ypp), named.Yp)
        record("[Y_1,X'''] = s X''", g.bracket(g.y(1), named.Xppp), named.Xpp)
        record("[X''',Y'] = s H", g.bracket(named.Xppp, named.Yp), named.H_special)
    else:
        mixed = named.Xppp + named.Yp
        lhs = g.bracket(mixed, g.bracket(g.y(8), mixed))
        record("[X'''+Y',[Y_8,X'''+Y']] = s (-2X')", lhs, named.Xp * -2)
    return audit
