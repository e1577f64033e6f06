"""Homomorphism checks and lifts of embeddings to abelian extensions."""

from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from chevalley import (
    AlgebraElement,
    AlgebraError,
    AlgebraRegistry,
    LieAlgebra,
    check_generator_relations,
    e7_frame,
    named_elements,
)
from config import log
from rootsys import Weight, weyl_dim

from .closure import first_nonzero_bracket, generated_submodule
from .maps import EmbeddingError, EmbeddingMap, HomomorphismError, LiftError, embedding


def frame_elements(g: LieAlgebra) -> Dict[str, AlgebraElement]:
    """Named elements by name; for E7 the SL2-compatible signs are used."""
    elements = named_elements(g).as_dict()
    if g.name == 'E7':
        elements.update(e7_frame(g))
    return elements


def element_from_terms(g: LieAlgebra, terms: Mapping[str, Any]) -> AlgebraElement:
    """Σ coefficient · element over names like "X'''", "H", "Y_1"."""
    elements: Optional[Dict[str, AlgebraElement]] = None
    result = g.zero()
    for name, coeff in terms.items():
        if len(name) == 3 and name[1] == '_' and name[0] in 'XYH' and name[2].isdigit():
            element = g.generator(name[0], int(name[2]))
        else:
            if elements is None:
                elements = frame_elements(g)
            if name not in elements:
                raise LiftError(f"{g.name} has no element named {name}")
            element = elements[name]
        result = result + element * coeff
    return result


def highest_weight_failures(emb: EmbeddingMap, vector: AlgebraElement, weight: Weight) -> List[str]:
    g = emb.target
    failures = []
    if vector.is_zero():
        return ["radical image is zero"]
    for i, xi in enumerate(emb.x, start=1):
        if not g.bracket(xi, vector).is_zero():
            failures.append(f"ad X_{i} does not kill the radical image")
    for i, hi in enumerate(emb.h, start=1):
        if g.bracket(hi, vector) != vector * weight.coords[i - 1]:
            failures.append(f"radical image is not of weight {weight.label()} for H_{i}")
    return failures


def radical_failures(emb: EmbeddingMap, submodule: Optional[List[AlgebraElement]] = None) -> List[str]:
    """Conditions on the radical: highest weight, irreducible size, [V, V] = 0."""
    if emb.radical_image is None or emb.radical_weight is None:
        return []
    g = emb.target
    failures = highest_weight_failures(emb, emb.radical_image, emb.radical_weight)
    if failures:
        return failures
    if emb.radical_image.is_symbolic():
        return failures
    if submodule is None:
        submodule = generated_submodule(g, emb.radical_image, emb)
    rs = AlgebraRegistry.root_system(emb.source)
    expected = weyl_dim(rs, emb.radical_weight)
    if len(submodule) != expected:
        failures.append(f"radical generates {len(submodule)} dimensions, expected {expected}")
    witness = first_nonzero_bracket(g, submodule)
    if witness is not None:
        failures.append(f"radical is not abelian (basis vectors {witness[0]}, {witness[1]})")
    return failures


def verify_homomorphism(emb: EmbeddingMap) -> List[str]:
    failures = check_generator_relations(emb.target, emb.source_cartan, emb.x, emb.y, emb.h)
    failures.extend(radical_failures(emb))
    log("verify", f"{emb.describe()}: {len(failures)} relation failures")
    return failures


def lift_embedding(
    emb: EmbeddingMap,
    radical_hw: Weight,
    image_vector: AlgebraElement,
    params: Optional[Dict[str, Any]] = None,
    label: str = "",
) -> EmbeddingMap:
    """emb extended by u -> image_vector; raises LiftError unless it is a lift."""
    if radical_hw.rank != emb.rank:
        raise LiftError(f"Radical weight {radical_hw.coords} has the wrong rank for {emb.source}")
    failures = highest_weight_failures(emb, image_vector, radical_hw)
    if failures:
        raise LiftError("; ".join(failures))
    # symbolic members are checked on the highest-weight conditions only
    submodule = None if image_vector.is_symbolic() else generated_submodule(emb.target, image_vector, emb)
    lifted = EmbeddingMap(
        source=emb.source,
        target=emb.target,
        x=emb.x,
        y=emb.y,
        h=emb.h,
        variant=emb.variant,
        radical_image=image_vector,
        radical_weight=radical_hw,
        params=dict(params or {}),
        label=label,
    )
    failures = radical_failures(lifted, submodule)
    if failures:
        raise LiftError("; ".join(failures))
    if submodule is not None:
        log("build", f"Lift {lifted.describe()} valid, radical dim {len(submodule)}")
    return lifted


# (ambient, variant) -> family -> (radical weight node or 0, element names, parameter names)
LIFT_FAMILIES: Dict[Tuple[str, str], Dict[str, Tuple[int, Tuple[str, ...], Tuple[str, ...]]]] = {
    ('E8', 'natural'): {
        'lambda1': (1, ("X'''",), ('alpha',)),
        "lambda1'": (1, ("Y'",), ('alpha',)),
        'zero': (0, ("H",), ('alpha',)),
    },
    ('E7', 'natural'): {
        'zero': (0, ("Y'", "X'''", "H"), ('alpha', 'beta', 'gamma')),
    },
    ('E7', 'twisted'): {
        'zero': (0, ("Y'", "X'''", "H"), ('alpha', 'beta', 'gamma')),
    },
    ('E6', 'natural'): {
        'lambda5': (5, ("X''",), ('alpha',)),
        'lambda4': (4, ("Y_1",), ('alpha',)),
        'zero': (0, ("H",), ('alpha',)),
    },
    ('E6', 'twisted'): {
        'lambda5': (5, ("Y_1",), ('alpha',)),
        'lambda4': (4, ("X''",), ('alpha',)),
        'zero': (0, ("H",), ('alpha',)),
    },
}


def lift_label(ambient: str, variant: str, family: str, params: Mapping[str, Any]) -> str:
    base = "phi~" if variant == "natural" else "rho~"
    n = int(ambient[1]) - 1
    weight = "0" if family == 'zero' else family.replace('lambda', 'λ')
    values = ",".join(str(params[k]) for k in sorted(params))
    if len(params) > 1:
        values = f"({values})"
    return f"{base}_{n}^{{{weight},{values}}}"


def standard_lift(
    ambient: str,
    variant: str,
    family: str,
    params: Optional[Mapping[str, Any]] = None,
    target: Optional[LieAlgebra] = None,
) -> EmbeddingMap:
    """One of the catalogued lifts, e.g. ('E8', 'natural', 'lambda1', {'alpha': 1})."""
    try:
        node, names, param_names = LIFT_FAMILIES[(ambient, variant)][family]
    except KeyError as e:
        raise LiftError(f"No lift family {family!r} for {ambient} {variant}") from e
    values = {k: Fraction(1) if k == 'alpha' else Fraction(0) for k in param_names}
    for k, v in (params or {}).items():
        if k not in values:
            raise LiftError(f"Lift family {family!r} has no parameter {k!r}")
        values[k] = v
    if all(v == 0 for v in values.values()):
        raise LiftError("Lift parameters must not all vanish")

    n = int(ambient[1]) - 1
    try:
        emb = embedding(n, variant, target)
        g = emb.target
        vector = element_from_terms(g, dict(zip(names, (values[k] for k in param_names))))
    except (EmbeddingError, AlgebraError) as e:
        raise LiftError(f"Cannot build {ambient} {variant} {family}: {e}") from e
    weight = Weight.zero(n) if node == 0 else Weight.fundamental(n, node)
    return lift_embedding(emb, weight, vector, values, lift_label(ambient, variant, family, values))


def lift_from_description(
    emb: EmbeddingMap,
    weight: Sequence[int],
    terms: Mapping[str, Any],
    params: Optional[Dict[str, Any]] = None,
) -> EmbeddingMap:
    """Lift described by a run spec: weight coordinates and named-element terms."""
    vector = element_from_terms(emb.target, terms)
    return lift_embedding(emb, Weight.of(weight), vector, params)


def require_homomorphism(emb: EmbeddingMap) -> EmbeddingMap:
    failures = verify_homomorphism(emb)
    if failures:
        raise HomomorphismError(f"{emb.describe()}: " + "; ".join(failures[:5]))
    return emb
