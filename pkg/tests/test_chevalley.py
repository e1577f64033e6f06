from fractions import Fraction

import pytest
import sympy

from chevalley import (
    AlgebraRegistry,
    ElementMismatchError,
    GeneratorMap,
    NamedElementError,
    TableFormatError,
    UnknownIndexError,
    check_antisymmetry,
    check_jacobi,
    dump_table,
    e7_frame,
    load_table,
    named_elements,
    nested_commutator,
    proportionality,
    read_table,
    resolve_element,
    sign_audit,
    verify_serre,
    weight_vector_failures,
    write_table,
)


@pytest.fixture(scope="module")
def d4():
    return AlgebraRegistry.get("D4")


@pytest.fixture(scope="module")
def e6():
    return AlgebraRegistry.get("E6")


@pytest.fixture(scope="module")
def e7():
    return AlgebraRegistry.get("E7")


@pytest.fixture(scope="module")
def e8():
    return AlgebraRegistry.get("E8")


@pytest.mark.parametrize("name,dim", [
    ("D4", 28), ("D5", 45), ("D6", 66), ("D7", 91), ("E6", 78), ("E7", 133), ("E8", 248),
])
def test_serre_relations(name, dim):
    g = AlgebraRegistry.get(name)
    assert g.dim == dim
    report = verify_serre(g)
    assert report.passed, report.failures
    assert report.to_dict()['passed']


def test_jacobi_exhaustive_on_small_algebra(d4):
    report = check_jacobi(d4)
    assert report.exhaustive
    assert report.triples_checked == 28 * 27 * 26 // 6
    assert report.passed


@pytest.mark.parametrize("name", ["D5", pytest.param("E6", marks=pytest.mark.slow)])
def test_jacobi_exhaustive_on_ambient_algebras(name):
    g = AlgebraRegistry.get(name)
    report = check_jacobi(g)
    assert report.exhaustive
    assert report.triples_checked == g.dim * (g.dim - 1) * (g.dim - 2) // 6
    assert report.passed, report.failures


def test_jacobi_sampled_on_e8(e8):
    report = check_jacobi(e8, samples=3000, seed=11)
    assert not report.exhaustive
    assert report.passed


@pytest.mark.slow
def test_jacobi_default_sample_count_on_e8(e8):
    report = check_jacobi(e8)
    assert not report.exhaustive
    assert report.triples_checked == 100000
    assert report.passed, report.failures


def test_bracket_is_antisymmetric(e6):
    assert check_antisymmetry(e6) == []
    a = e6.x(1) + e6.y(3) * 2
    b = e6.x(3) - e6.h(4)
    assert e6.bracket(a, b) == -e6.bracket(b, a)


def test_cartan_acts_by_roots(e7):
    for index in (0, 10, e7.n_positive - 1, e7.n_positive + 5):
        element = e7.basis_element(index)
        weight = e7.weight_of(index)
        for node in range(1, 8):
            assert e7.bracket(e7.h(node), element) == element * weight.coords[node - 1]


def test_root_vector_lookup(e6):
    highest = e6.root_system.positive_roots[-1]
    assert e6.root_vector(highest) == e6.basis_element(e6.n_positive - 1)
    negative = tuple(-c for c in highest)
    assert e6.root_of(e6.index_of_label(f"Y_{''.join(map(str, highest))}")) == negative
    with pytest.raises(UnknownIndexError):
        e6.root_position((1, 1, 1, 1, 1, 1, 1))
    with pytest.raises(UnknownIndexError):
        e6.x(7)


def test_elements_of_different_algebras_do_not_mix(d4, e6):
    with pytest.raises(ElementMismatchError):
        e6.bracket(e6.x(1), d4.x(1))


def test_symbolic_coefficients_stay_expanded(e6):
    a, b = sympy.symbols('a b')
    element = e6.x(1) * a + e6.x(1) * b - e6.x(1) * (a + b)
    assert element.is_zero()
    assert proportionality(e6.x(2) * (a * b), e6.x(2)) == a * b


@pytest.mark.parametrize("name", ["E6", "E7", "E8"])
def test_named_elements_are_weight_vectors(name):
    g = AlgebraRegistry.get(name)
    elements = named_elements(g).as_dict()
    assert "H" in elements
    assert weight_vector_failures(g, elements) == []


def test_named_element_availability(e6, d4):
    named = named_elements(e6)
    assert named.Xppp is None
    with pytest.raises(NamedElementError):
        named.get("Y'")
    with pytest.raises(NamedElementError):
        named_elements(d4)
    assert resolve_element(e6, "Y_1") == e6.y(1)
    assert resolve_element(e6, "X''", named) == named.Xpp


def test_special_cartan_separates_x_and_y(e8):
    named = named_elements(e8)
    plus = proportionality(e8.bracket(named.H_special, named.Xppp), named.Xppp)
    minus = proportionality(e8.bracket(named.H_special, named.Yp), named.Yp)
    assert plus is not None and minus is not None
    assert plus != minus


def test_e7_frame_relations(e7):
    frame = e7_frame(e7)
    assert e7.bracket(e7.x(1), frame["X''"]) == frame["X'''"]
    assert e7.bracket(e7.y(1), frame["Y''"]) == frame["Y'"]
    assert e7.bracket(e7.y(1), frame["X'''"]) == frame["X''"]
    assert e7.bracket(frame["X'''"], frame["Y'"]) == frame["H"]
    assert e7.bracket(e7.x(1), frame["Y'"]) == frame["Y''"]
    assert e7.bracket(frame["X'''"], frame["Y''"]) == -e7.x(1)


@pytest.mark.parametrize("name", ["E7", "E8"])
def test_sign_audit_finds_definite_signs(name):
    audit = sign_audit(AlgebraRegistry.get(name))
    assert audit
    assert all(s in (1, -1) for s in audit.values())


def test_nested_commutator_of_simple_chain(e6):
    expected = e6.root_vector((1, 0, 1, 0, 0, 0))
    assert proportionality(nested_commutator(e6, 'X', [1, 3]), expected) in (1, -1)
    with pytest.raises(UnknownIndexError):
        nested_commutator(e6, 'H', [1])


def test_torus_scaling_is_an_automorphism(e6):
    scaling = GeneratorMap.from_overrides(e6, {'X_1': e6.x(1) * 3, 'Y_1': e6.y(1) * Fraction(1, 3)})
    assert scaling.is_automorphism()
    assert scaling.apply(e6.root_vector((1, 0, 1, 0, 0, 0))) == e6.root_vector((1, 0, 1, 0, 0, 0)) * 3


def test_broken_generator_map_is_rejected(e6):
    broken = GeneratorMap.from_overrides(e6, {'X_1': e6.x(1) * 2})
    assert broken.relation_failures()
    assert not broken.is_automorphism()


def test_table_text_round_trip(d4, tmp_path):
    path = write_table(d4, tmp_path / "D4.table")
    reread = read_table(path, d4.root_system)
    assert reread.table == d4.table
    assert dump_table(reread) == dump_table(d4)


def _flip(text, pair, both=True):
    lines = []
    for line in text.splitlines():
        parts = line.split()
        if len(parts) == 4 and {parts[0], parts[1]} == set(pair) and (both or parts[0] == pair[0]):
            parts[3] = str(-int(parts[3]))
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def test_flipped_structure_constant_breaks_jacobi(d4):
    text = _flip(dump_table(d4), ("X_1000", "X_0100"))
    mutated = load_table(text, d4.root_system)
    assert check_antisymmetry(mutated) == []
    assert not check_jacobi(mutated).passed


def test_one_sided_flip_breaks_antisymmetry(d4):
    text = _flip(dump_table(d4), ("X_1000", "X_0100"), both=False)
    mutated = load_table(text, d4.root_system)
    assert ("X_1000", "X_0100") in check_antisymmetry(mutated)


def test_malformed_tables(d4, e6):
    with pytest.raises(TableFormatError):
        load_table("X_1000 X_0100 X_1100 1\n", d4.root_system)
    with pytest.raises(TableFormatError):
        load_table(dump_table(d4), e6.root_system)
    with pytest.raises(TableFormatError):
        load_table("# D4 dim 28\nX_1000 X_9999 X_1100 1\n", d4.root_system)


def test_registry_reads_and_writes_cache(tmp_path, monkeypatch):
    monkeypatch.setattr(AlgebraRegistry, "_algebras", {})
    monkeypatch.setattr(AlgebraRegistry, "_root_systems", {})
    monkeypatch.setattr(AlgebraRegistry, "_cache_dir", None)
    AlgebraRegistry.configure(tmp_path)
    built = AlgebraRegistry.get("D4")
    assert (tmp_path / "D4.table").exists()
    assert AlgebraRegistry.list_algebras() == ["D4"]
    AlgebraRegistry.clear()
    loaded = AlgebraRegistry.get("d_4")
    assert loaded is not built
    assert loaded.table == built.table


def test_registry_rebuilds_a_tampered_cache(tmp_path, monkeypatch, capsys):
    monkeypatch.setattr(AlgebraRegistry, "_algebras", {})
    monkeypatch.setattr(AlgebraRegistry, "_root_systems", {})
    monkeypatch.setattr(AlgebraRegistry, "_cache_dir", None)
    AlgebraRegistry.configure(tmp_path)
    path = tmp_path / "D4.table"
    AlgebraRegistry.get("D4")
    original = path.read_text()
    capsys.readouterr()

    path.write_text(_flip(original, ("X_1000", "Y_1000")))
    AlgebraRegistry.clear()
    rebuilt = AlgebraRegistry.get("D4")
    assert verify_serre(rebuilt).passed
    assert "Ignoring cache file" in capsys.readouterr().err
    assert path.read_text() == original

    path.write_text(original.replace("# D4 dim 28", "# D4 dim 29", 1))
    AlgebraRegistry.clear()
    assert AlgebraRegistry.get("D4").dim == 28
    assert "Ignoring cache file" in capsys.readouterr().err
    assert path.read_text() == original
