from fractions import Fraction

import pytest
import sympy

from chevalley import AlgebraRegistry
from embed import (
    EmbeddingError,
    HomomorphismError,
    LiftError,
    apply_word,
    embedding,
    frame_elements,
    generated_subalgebra,
    generated_submodule,
    image_span,
    lift_embedding,
    lift_from_description,
    lift_label,
    outer_automorphism_permutation,
    require_homomorphism,
    standard_lift,
    submodule_with_words,
    target_node,
    verify_homomorphism,
)
from rootsys import Weight


@pytest.fixture(scope="module")
def e6():
    return AlgebraRegistry.get("E6")


@pytest.mark.parametrize("n", [5, 6, 7])
@pytest.mark.parametrize("variant", ["natural", "twisted"])
def test_embeddings_are_homomorphisms(n, variant):
    emb = embedding(n, variant)
    assert emb.target.name == f"E{n + 1}"
    assert verify_homomorphism(emb) == []
    assert require_homomorphism(emb) is emb


def test_node_layout():
    assert [target_node(5, k) for k in range(1, 6)] == [6, 5, 4, 3, 2]
    assert outer_automorphism_permutation(5) == [1, 2, 3, 5, 4]
    natural, twisted = embedding(5, "natural"), embedding(5, "twisted")
    assert twisted.x[3] == natural.x[4]
    assert twisted.describe().startswith("rho_5")


def test_image_dimension(e6):
    assert len(image_span(embedding(5, "natural", e6))) == 45


def test_source_weights_of_named_vectors(e6):
    elements = frame_elements(e6)
    natural, twisted = embedding(5, "natural", e6), embedding(5, "twisted", e6)
    assert natural.source_weight(elements["X''"]) == Weight.fundamental(5, 5)
    assert natural.source_weight(e6.y(1)) == Weight.fundamental(5, 4)
    assert twisted.source_weight(elements["X''"]) == Weight.fundamental(5, 4)
    assert twisted.source_weight(e6.y(1)) == Weight.fundamental(5, 5)


@pytest.mark.parametrize("ambient,variant,family,dim", [
    ("E8", "natural", "lambda1", 14),
    ("E8", "natural", "lambda1'", 14),
    ("E8", "natural", "zero", 1),
    ("E7", "natural", "zero", 1),
    ("E6", "natural", "lambda5", 16),
    ("E6", "natural", "lambda4", 16),
    ("E6", "twisted", "lambda5", 16),
    ("E6", "twisted", "zero", 1),
])
def test_standard_lifts(ambient, variant, family, dim):
    lift = standard_lift(ambient, variant, family)
    assert lift.has_radical
    assert len(generated_submodule(lift.target, lift.radical_image, lift)) == dim
    assert verify_homomorphism(lift) == []


def test_lift_image_adds_the_radical(e6):
    lift = standard_lift("E6", "natural", "lambda5", target=e6)
    assert len(image_span(lift)) == 45 + 16
    assert len(image_span(lift.without_radical())) == 45


def test_e7_lift_with_mixed_parameters():
    lift = standard_lift("E7", "twisted", "zero", {'alpha': 1, 'beta': 2, 'gamma': 1})
    assert lift.params == {'alpha': 1, 'beta': 2, 'gamma': 1}
    assert lift.describe() == "rho~_6^{0,(1,2,1)}"


def test_symbolic_lift_keeps_parameters():
    alpha = sympy.Symbol('alpha')
    lift = standard_lift("E8", "natural", "lambda1", {'alpha': alpha})
    assert lift.radical_image.is_symbolic()


def test_words_rebuild_the_radical(e6):
    lift = standard_lift("E6", "natural", "lambda4", target=e6)
    found = submodule_with_words(e6, lift.radical_image, lift)
    assert len(found) == 16
    for word, vector in found:
        assert apply_word(e6, lift, word, lift.radical_image) == vector


def test_labels():
    assert lift_label("E8", "natural", "lambda1", {'alpha': 1}) == "phi~_7^{λ1,1}"
    assert lift_label("E6", "twisted", "lambda4", {'alpha': Fraction(1, 2)}) == "rho~_5^{λ4,1/2}"


def test_lift_failures(e6):
    natural = embedding(5, "natural", e6)
    with pytest.raises(LiftError):
        lift_from_description(natural, [0, 0, 0, 0, 1], {"Y_1": 1})
    with pytest.raises(LiftError):
        lift_from_description(natural, [0, 0, 0, 1], {"Y_1": 1})
    with pytest.raises(LiftError):
        lift_from_description(natural, [0, 0, 0, 0, 1], {"Z'": 1})
    with pytest.raises(LiftError):
        standard_lift("E6", "natural", "lambda5", {'alpha': 0})
    with pytest.raises(LiftError):
        standard_lift("E6", "natural", "lambda1")
    with pytest.raises(LiftError):
        standard_lift("E6", "natural", "lambda5", {'beta': 1})


def test_embedding_errors(e6):
    with pytest.raises(EmbeddingError):
        embedding(4)
    with pytest.raises(EmbeddingError):
        embedding(5, "sideways")
    with pytest.raises(EmbeddingError):
        embedding(6, "natural", e6)


def test_broken_image_is_not_a_homomorphism(e6):
    emb = embedding(5, "natural", e6)
    emb.x = [emb.x[0] * 2] + emb.x[1:]
    with pytest.raises(HomomorphismError):
        require_homomorphism(emb)


def test_generated_subalgebras(e6):
    emb = embedding(5, "natural", e6)
    assert len(generated_subalgebra(e6, emb.x + emb.y)) == 45
    xpp = frame_elements(e6)["X''"]
    assert len(generated_subalgebra(e6, emb.x + emb.y + [xpp])) == 45 + 16


def test_lift_embedding_checks_the_weight(e6):
    emb = embedding(5, "natural", e6)
    xpp = frame_elements(e6)["X''"]
    lift = lift_embedding(emb, Weight.fundamental(5, 5), xpp)
    assert lift.has_radical
    assert lift.radical_weight == Weight.fundamental(5, 5)
    with pytest.raises(LiftError):
        lift_embedding(emb, Weight.fundamental(5, 4), xpp)
