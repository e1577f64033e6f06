import pytest
import sympy

from branch import (
    BranchingError,
    branch_with_linkage,
    format_blocks,
    indecomposability_criterion,
    radical_actions,
    radical_commutation_failures,
)
from chevalley import AlgebraRegistry
from embed import embedding, image_span, standard_lift
from exactla import SparseEchelon
from hwmod import adjoint_module, highest_weight_module
from rootsys import Weight


def _block_labels(report):
    return sorted(sorted(w.label() for w in block) for block in report.block_weights())


@pytest.fixture(scope="module")
def e6_minimal():
    return highest_weight_module(AlgebraRegistry.get("E6"), Weight.fundamental(6, 6))


@pytest.mark.parametrize("variant", ["natural", "twisted"])
@pytest.mark.parametrize("family", ["lambda5", "lambda4"])
def test_sixteen_dimensional_radicals_meet_the_criterion(e6_minimal, variant, family):
    lift = standard_lift("E6", variant, family, target=e6_minimal.algebra)
    assert indecomposability_criterion(e6_minimal, lift)


@pytest.mark.parametrize("ambient", ["E6", "E7", "E8"])
def test_cartan_radicals_fail_the_criterion(ambient):
    g = AlgebraRegistry.get(ambient)
    lift = standard_lift(ambient, "natural", "zero", target=g)
    assert not indecomposability_criterion(adjoint_module(g), lift)


def test_e8_adjoint_splits_into_two_blocks():
    g = AlgebraRegistry.get("E8")
    m = adjoint_module(g)
    lift = standard_lift("E8", "natural", "lambda1", target=g)
    report = branch_with_linkage(m, lift)
    assert _block_labels(report) == sorted([sorted(["λ2", "λ1", "λ1", "0"]), sorted(["λ6", "λ7"])])
    assert not report.all_positive_roots_contained
    assert radical_commutation_failures(m, lift) == []
    assert len(radical_actions(m, lift)) == 14
    assert format_blocks(report).count("⊕") == 1
    data = report.to_dict()
    assert data['summary'] == format_blocks(report)
    assert len(data['blocks']) == 2


def test_e6_cartan_lift_links_nothing():
    g = AlgebraRegistry.get("E6")
    report = branch_with_linkage(adjoint_module(g), standard_lift("E6", "natural", "zero", target=g))
    assert len(report.blocks) == 4
    assert report.linkage_edges == []
    assert report.parameter_dependent == []


@pytest.mark.parametrize("variant,spinor", [("natural", "λ5"), ("twisted", "λ6")])
def test_e7_cartan_lifts_are_parameter_dependent(variant, spinor):
    g = AlgebraRegistry.get("E7")
    lift = standard_lift("E7", variant, "zero", {'alpha': 1, 'beta': 2, 'gamma': 1}, target=g)
    report = branch_with_linkage(adjoint_module(g), lift)
    labels = {w.label(): mult for w, mult in report.decomposition.constituents}
    assert labels == {"λ2": 1, spinor: 2, "0": 3}
    assert report.parameter_dependent
    assert report.to_dict()['parameter_dependent']


def test_minimal_e6_module_is_one_block(e6_minimal):
    lift = standard_lift("E6", "natural", "lambda5", target=e6_minimal.algebra)
    report = branch_with_linkage(e6_minimal, lift)
    assert len(report.blocks) == 1
    assert report.all_positive_roots_contained
    assert radical_commutation_failures(e6_minimal, lift) == []
    assert "⊕" not in format_blocks(report)


def test_branching_needs_a_rational_matching_lift(e6_minimal):
    g = e6_minimal.algebra
    with pytest.raises(BranchingError):
        branch_with_linkage(e6_minimal, embedding(5, "natural", g))
    with pytest.raises(BranchingError):
        branch_with_linkage(e6_minimal, standard_lift("E6", "natural", "lambda5",
                                                      {'alpha': sympy.Symbol('alpha')}, target=g))
    with pytest.raises(BranchingError):
        indecomposability_criterion(adjoint_module(AlgebraRegistry.get("E7")),
                                    standard_lift("E6", "natural", "lambda5", target=g))


def test_criterion_accepts_the_negative_half(e6_minimal):
    g = e6_minimal.algebra
    lift = standard_lift("E6", "natural", "lambda4", target=g)
    echelon = SparseEchelon()
    for b in image_span(lift):
        echelon.add(dict(b.coeffs))
    assert all(echelon.contains({g.y_index(k): 1}) for k in range(g.n_positive))
    assert not echelon.contains({g.x_index(0): 1})
    report = branch_with_linkage(e6_minimal, lift)
    assert report.all_positive_roots_contained
    assert report.contains_root_half
