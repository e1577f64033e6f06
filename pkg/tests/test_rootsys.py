import pytest

from rootsys import (
    NonDominantWeightError,
    SimpleType,
    UnsupportedTypeError,
    Weight,
    WeightIndexError,
    algebra_dimension,
    build_root_system,
    fundamental_coweight,
    highest_root,
    root_to_weight,
    simple_reflection,
    weight_of_lowering_word,
    weyl_dim,
)


@pytest.fixture(scope="module")
def systems():
    return {name: build_root_system(SimpleType.parse(name))
            for name in ("D5", "D6", "D7", "E6", "E7", "E8")}


@pytest.mark.parametrize("name,count", [
    ("D5", 20), ("D6", 30), ("D7", 42), ("E6", 36), ("E7", 63), ("E8", 120),
])
def test_positive_root_counts(systems, name, count):
    rs = systems[name]
    assert len(rs.positive_roots) == count
    assert 2 * count + rs.rank == algebra_dimension(rs.type)


def test_simple_roots_come_first(systems):
    rs = systems["E7"]
    for i, root in enumerate(rs.simple_roots):
        assert root == tuple(1 if j == i else 0 for j in range(7))


@pytest.mark.parametrize("name,root,adjoint_node", [
    ("E6", (1, 2, 2, 3, 2, 1), 2),
    ("E7", (2, 2, 3, 4, 3, 2, 1), 1),
    ("E8", (2, 3, 4, 6, 5, 4, 3, 2), 8),
])
def test_highest_roots(systems, name, root, adjoint_node):
    rs = systems[name]
    assert highest_root(rs) == root
    assert root_to_weight(rs, root) == Weight.fundamental(rs.rank, adjoint_node)


@pytest.mark.parametrize("name,node,dim", [
    ("D5", 1, 10), ("D5", 5, 16), ("D6", 6, 32), ("D7", 7, 64), ("D7", 2, 91),
    ("E6", 1, 27), ("E6", 6, 27), ("E6", 2, 78), ("E7", 7, 56), ("E7", 1, 133), ("E8", 8, 248),
])
def test_weyl_dimensions(systems, name, node, dim):
    rs = systems[name]
    assert weyl_dim(rs, Weight.fundamental(rs.rank, node)) == dim


def test_trivial_weight_has_dimension_one(systems):
    assert weyl_dim(systems["E8"], Weight.zero(8)) == 1


def test_simple_reflection_is_an_involution(systems):
    rs = systems["E6"]
    mu = Weight.of([1, 0, -2, 1, 0, 3])
    for i in range(1, 7):
        assert simple_reflection(rs, simple_reflection(rs, mu, i), i) == mu
    assert simple_reflection(rs, Weight.fundamental(6, 1), 1) == Weight.of([-1, 0, 1, 0, 0, 0])


def test_lowering_word_subtracts_simple_roots(systems):
    rs = systems["D5"]
    hw = Weight.fundamental(5, 1)
    assert weight_of_lowering_word(rs, hw, [1]) == hw - root_to_weight(rs, rs.simple_roots[0])
    assert weight_of_lowering_word(rs, hw, []) == hw


def test_fundamental_coweights_are_dual(systems):
    rs = systems["E7"]
    for i in range(1, 8):
        coweight = fundamental_coweight(rs, i)
        for j in range(7):
            pairing = sum(coweight[k] * rs.cartan[k][j] for k in range(7))
            assert pairing == (1 if j == i - 1 else 0)


@pytest.mark.parametrize("coords,label", [
    ((0, 0, 0, 0, 0), "0"),
    ((1, 0, 0, 0, 0), "λ1"),
    ((2, 0, 0, 0, 0), "2λ1"),
    ((1, 0, 0, 0, 1), "λ1+λ5"),
    ((1, -1, 0, 0, 0), "λ1-λ2"),
])
def test_weight_labels(coords, label):
    assert Weight.of(coords).label() == label


def test_type_parsing():
    assert str(SimpleType.parse("e_7")) == "E7"
    assert SimpleType.parse(" D6 ") == SimpleType('D', 6)


@pytest.mark.parametrize("text", ["A3", "E9", "D3", "E", ""])
def test_unsupported_types(text):
    with pytest.raises(UnsupportedTypeError):
        SimpleType.parse(text)


def test_weight_errors(systems):
    with pytest.raises(NonDominantWeightError):
        weyl_dim(systems["D5"], Weight.of([0, -1, 0, 0, 0]))
    with pytest.raises(WeightIndexError):
        Weight.fundamental(5, 6)
    with pytest.raises(WeightIndexError):
        weyl_dim(systems["D5"], Weight.fundamental(6, 1))
