from fractions import Fraction

import pytest
import sympy

from abelext import (
    IDENTITY_QUADRUPLE,
    AbelianExtensionError,
    AutomorphismError,
    WeightCertificate,
    cartan_scaling_obstruction,
    check_sl2_substitution,
    classify_lifts,
    compose_quadruples,
    find_sl2_witness,
    format_classification,
    is_abelian_subspace,
    is_sl2_witness,
    pencil_abelian_conditions,
    realize_torus_equivalence,
    sample_quadruples,
    scan_invariant_abelian,
    sl2_automorphism_e7,
    sl2_invariant,
    sl2_lift_images,
    sl2_substitution,
    torus_automorphism,
    torus_scale_factor,
    weight_eigenvalue_certificate,
)
from chevalley import AlgebraRegistry, named_elements
from embed import embedding, generated_submodule


@pytest.fixture(scope="module")
def e6():
    return AlgebraRegistry.get("E6")


@pytest.fixture(scope="module")
def e7():
    return AlgebraRegistry.get("E7")


@pytest.fixture(scope="module")
def e8():
    return AlgebraRegistry.get("E8")


def test_e6_radicals_are_abelian(e6):
    emb = embedding(5, "natural", e6)
    top = generated_submodule(e6, named_elements(e6).Xpp, emb)
    bottom = generated_submodule(e6, e6.y(1), emb)
    assert len(top) == len(bottom) == 16
    assert is_abelian_subspace(e6, top)
    assert is_abelian_subspace(e6, bottom)
    mixed = is_abelian_subspace(e6, top + bottom)
    assert not mixed
    assert mixed.witness is not None


def test_e8_pencil_needs_a_vanishing_parameter(e8):
    named = named_elements(e8)
    pencil = pencil_abelian_conditions(e8, embedding(7, "natural", e8), [named.Xppp, named.Yp])
    alpha, beta = pencil.symbols
    assert pencil.dim == 14
    assert not pencil.always_abelian
    for condition in pencil.conditions:
        assert sympy.div(condition, alpha * beta, alpha, beta)[1] == 0
    assert pencil.abelian_at([1, 0])
    assert pencil.abelian_at([0, 3])
    assert not pencil.abelian_at([1, 1])


def test_pencil_needs_vectors(e8):
    with pytest.raises(AbelianExtensionError):
        pencil_abelian_conditions(e8, embedding(7, "natural", e8), [])


@pytest.mark.parametrize("ambient,variant,expected", [
    ("E8", "natural", {"[H]", "[X''']", "[Y']"}),
    ("E7", "natural", {"[H]", "[X''']", "[Y']", "alpha X''' + beta H + gamma Y'"}),
    ("E6", "natural", {"[H]", "[X'']", "[Y_1]"}),
    ("E6", "twisted", {"[H]", "[X'']", "[Y_1]"}),
])
def test_abelian_catalogs(ambient, variant, expected):
    g = AlgebraRegistry.get(ambient)
    catalog = scan_invariant_abelian(g, embedding(g.rank - 1, variant, g))
    assert {e.name for e in catalog.abelian_entries()} == expected
    assert all(e.dim <= catalog.bound for e in catalog.abelian_entries())


def test_e6_catalog_weights_swap(e6):
    weights = {}
    for variant in ("natural", "twisted"):
        catalog = scan_invariant_abelian(e6, embedding(5, variant, e6))
        weights[variant] = {e.name: e.weights[0].label() for e in catalog.abelian_entries()}
    assert weights["natural"] == {"[X'']": "λ5", "[Y_1]": "λ4", "[H]": "0"}
    assert weights["twisted"] == {"[X'']": "λ4", "[Y_1]": "λ5", "[H]": "0"}


def test_catalog_entries_explain_failures(e6):
    catalog = scan_invariant_abelian(e6, embedding(5, "natural", e6))
    mixed = catalog.entry("[Y_1] + [X'']")
    assert not mixed.abelian
    assert mixed.reason == "dimension 32 exceeds 16"
    assert mixed.witness.startswith("[Y_1#")
    assert "X''#" in mixed.witness
    assert all(e.witness for e in catalog.entries if not e.abelian)
    assert catalog.to_dict()['max_abelian_dimension'] == 16
    assert "not abelian" in catalog.format()
    with pytest.raises(AbelianExtensionError):
        catalog.entry("[Z]")


def test_scan_rejects_other_algebras():
    d5 = AlgebraRegistry.get("D5")
    with pytest.raises(AbelianExtensionError):
        scan_invariant_abelian(d5, embedding(5, "natural"))


# -- torus scalings --------------------------------------------------------


def test_torus_scale_factor():
    scalings = {1: Fraction(3)}
    assert torus_scale_factor((2, 1, 0), scalings) == 9
    assert torus_scale_factor((-1, 0, 0), scalings) == Fraction(1, 3)
    assert torus_scale_factor((0, 1, 1), scalings) == 1


def test_torus_automorphism(e6):
    rho = torus_automorphism(e6, {1: Fraction(2), 3: Fraction(-1, 2)})
    assert rho.is_automorphism()
    with pytest.raises(AutomorphismError):
        torus_automorphism(e6, {1: 0})


@pytest.mark.parametrize("ambient,variant,family,beta", [
    ("E8", "natural", "lambda1", Fraction(2)),
    ("E8", "natural", "lambda1'", Fraction(1, 2)),
    ("E6", "natural", "lambda5", Fraction(4)),
    ("E6", "natural", "lambda4", Fraction(1, 4)),
    ("E6", "twisted", "lambda5", Fraction(1, 4)),
    ("E6", "twisted", "lambda4", Fraction(4)),
])
def test_torus_equivalences(ambient, variant, family, beta):
    result = realize_torus_equivalence(ambient, variant, family, Fraction(4))
    assert result.verified
    assert result.scalings == {1: beta}
    assert result.to_dict()['verified']


def test_cartan_radical_cannot_be_torus_scaled():
    with pytest.raises(AutomorphismError):
        realize_torus_equivalence("E6", "natural", "zero", Fraction(4))


# -- SL2 on E7 -------------------------------------------------------------


def test_sl2_identity_and_samples(e7):
    assert check_sl2_substitution(IDENTITY_QUADRUPLE, e7) == []
    for q in sample_quadruples(2, seed=3):
        assert q[0] * q[2] - q[1] * q[3] == 1
        assert check_sl2_substitution(q, e7) == []


def test_sl2_automorphism_is_an_automorphism(e7):
    rho = sl2_automorphism_e7(Fraction(2), Fraction(1), Fraction(1), Fraction(1), g=e7)
    assert rho.is_automorphism()


def test_sl2_requires_unit_determinant(e7, e6):
    with pytest.raises(AutomorphismError):
        sl2_automorphism_e7(Fraction(2), Fraction(0), Fraction(1), Fraction(0), g=e7)
    with pytest.raises(AutomorphismError):
        sl2_automorphism_e7(*IDENTITY_QUADRUPLE, g=e6)


def test_substitution_composes():
    triple = sympy.symbols('alpha beta gamma')
    assert sl2_substitution(triple, IDENTITY_QUADRUPLE) == tuple(triple)
    q1, q2 = sample_quadruples(2, seed=5)
    lhs = sl2_substitution(sl2_substitution(triple, q2), q1)
    rhs = sl2_substitution(triple, compose_quadruples(q1, q2))
    assert all(sympy.expand(a - b) == 0 for a, b in zip(lhs, rhs))


def test_invariant_is_preserved():
    params = (Fraction(1), Fraction(2), Fraction(1))
    for q in sample_quadruples(4, seed=9):
        assert sl2_invariant(sl2_substitution(params, q)) == sl2_invariant(params) == 3


def test_sl2_witnesses():
    one = (Fraction(1), Fraction(0), Fraction(0))
    for target in ((Fraction(0), Fraction(-1), Fraction(0)), (Fraction(0), Fraction(1), Fraction(0))):
        q = find_sl2_witness(one, target)
        assert q is not None
        assert is_sl2_witness(one, target, q)
    assert is_sl2_witness(one, (0, -1, 0), (Fraction(5), Fraction(-1), Fraction(0), Fraction(1)))
    assert find_sl2_witness(one, (Fraction(0), Fraction(0), Fraction(1))) is None


def test_sl2_moves_lifts(e7):
    q = (Fraction(1), Fraction(0), Fraction(1), Fraction(1))
    ok, moved = sl2_lift_images((Fraction(1), Fraction(0), Fraction(0)), q, "natural")
    assert ok
    assert moved == (1, -1, -1)
    with pytest.raises(AutomorphismError):
        sl2_lift_images((0, 0, 0), q)


# -- classification --------------------------------------------------------


def test_cartan_scaling_obstructions(e6, e8):
    r = sympy.Symbol('r')
    e8_case = cartan_scaling_obstruction(e8)
    assert sympy.simplify(e8_case.eigenvalue + (r + 7) / 4) == 0
    assert e8_case.forces_identity
    for variant in ("natural", "twisted"):
        e6_case = cartan_scaling_obstruction(e6, embedding(5, variant, e6))
        assert sympy.simplify(e6_case.eigenvalue + (3 * r + 5) / 4) == 0
        assert e6_case.solutions == [1]


def test_weight_certificate(e8):
    certificate = weight_eigenvalue_certificate(e8)
    assert certificate.separated
    assert certificate.fixes_xpp
    assert certificate.verified
    assert certificate.eigenvalues["X''"] == 1
    assert certificate.eigenvalues["X'''"] == 2
    assert certificate.eigenvalues["Y'"] == -1
    assert certificate.to_dict()['fixes_xpp']
    shifted = WeightCertificate("E8", {**certificate.eigenvalues, "X''": Fraction(2)})
    assert shifted.separated and not shifted.verified


def test_e8_classes_carry_both_eigenvalue_certificates():
    for lift_class in classify_lifts("E8"):
        if lift_class.kind == "representative":
            assert lift_class.certificates["[H, X''] = X''"]
            assert lift_class.certificates["ad H eigenvalue separates X''' from Y'"]


@pytest.mark.parametrize("ambient,count", [("E8", 3), ("E7", 2), ("E6", 6)])
def test_classification(ambient, count):
    classes = classify_lifts(ambient)
    assert len(classes) == count
    assert all(c.verified for c in classes), [c.certificates for c in classes]
    text = format_classification(classes)
    assert text.startswith(f"Lifts into {ambient}")


def test_classification_kinds():
    kinds = sorted(c.kind for c in classify_lifts("E8"))
    assert kinds == ["continuum", "representative", "representative"]
    assert {c.kind for c in classify_lifts("E7")} == {"orbit"}
    assert format_classification([]) == ""
    with pytest.raises(AbelianExtensionError):
        classify_lifts("E5")
