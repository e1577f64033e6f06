import json
from pathlib import Path

import pytest

from chevalley import AlgebraRegistry
from cli import (
    SELECTOR_ALIASES,
    SELECTORS,
    CheckSpec,
    build_parser,
    check,
    main,
    registered_checks,
    resolve_selector,
    run_suite,
)
from cli import suite as suite_module
from cli.main import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE
from config import Settings, console

SPECS = Path(__file__).resolve().parent.parent / "data" / "specs"


@pytest.fixture(autouse=True)
def isolated_registry(monkeypatch):
    monkeypatch.setattr(AlgebraRegistry, "_cache_dir", None)
    monkeypatch.setattr(console, "_verbose", False)
    monkeypatch.delenv("DNLIFT_CACHE_DIR", raising=False)


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_build_writes_a_table(tmp_path, capsys):
    out = tmp_path / "E6.table"
    assert main(["--json", "build", "E6", "--out", str(out)]) == EXIT_OK
    data = _json(capsys)
    assert data['dim'] == 78
    assert data['positive_roots'] == 36
    assert out.read_text().startswith("# E6 dim 78")


def test_build_rejects_unknown_types(capsys):
    assert main(["build", "A3"]) == EXIT_USAGE
    assert capsys.readouterr().err.startswith("error:")
    assert main(["build", "D4"]) == EXIT_USAGE


def test_verify_serre_on_one_algebra(tmp_path, capsys):
    report = tmp_path / "serre.json"
    assert main(["--json", "verify", "serre", "--types", "d5", "--output", str(report)]) == EXIT_OK
    data = _json(capsys)
    assert data['passed']
    assert [c['name'] for c in data['checks']] == [
        "serre_relations", "jacobi_identity", "dimension_identities", "named_element_signs",
    ]
    assert all('seconds' not in c for c in data['checks'])
    saved = json.loads(report.read_text())
    assert saved['checks'] == data['checks']

    assert main(["report", str(report)]) == EXIT_OK
    text = capsys.readouterr().out
    assert text.startswith("Verification 'serre': 4/4 checks passed")


def test_verify_rejects_unknown_types(capsys):
    assert main(["verify", "serre", "--types", "E9"]) == EXIT_USAGE
    assert "--types" in capsys.readouterr().err


def test_report_of_a_failed_run(tmp_path, capsys):
    path = tmp_path / "failed.json"
    path.write_text(json.dumps({
        'selector': 'lifts', 'passed': False,
        'checks': [{'selector': 'lifts', 'name': 'x', 'claim': 'c', 'passed': False, 'error': 'boom'}],
    }))
    assert main(["report", str(path)]) == EXIT_CHECK_FAILED
    assert "boom" in capsys.readouterr().out
    assert main(["report", str(tmp_path / "missing.json")]) == EXIT_USAGE


def test_decompose_run_spec(capsys):
    assert main(["--json", "decompose", str(SPECS / "e6_minimal_twisted.json")]) == EXIT_OK
    data = _json(capsys)
    assert {c['label'] for c in data['constituents']} == {"λ4", "λ1", "0"}
    assert data['total_dim'] == 27


def test_scan_run_spec(capsys):
    assert main(["--json", "scan", str(SPECS / "e6_adjoint_natural.json")]) == EXIT_OK
    data = _json(capsys)
    assert {e['name'] for e in data['entries'] if e['abelian']} == {"[H]", "[X'']", "[Y_1]"}


def test_branch_run_spec(capsys):
    assert main(["--json", "branch", str(SPECS / "e6_minimal_lift_lambda5.json")]) == EXIT_OK
    data = _json(capsys)
    assert len(data['blocks']) == 1
    assert data['all_positive_roots_contained']


def test_branch_needs_a_lift(capsys):
    assert main(["branch", str(SPECS / "e6_adjoint_natural.json")]) == EXIT_USAGE
    assert "lift" in capsys.readouterr().err


def test_classify(capsys):
    assert main(["--json", "classify", "e8"]) == EXIT_OK
    data = _json(capsys)
    assert data['ambient'] == "E8"
    assert len(data['classes']) == 3
    assert all(c['verified'] for c in data['classes'])


def test_verify_abelian_catalogs(capsys):
    assert main(["--json", "verify", "props6"]) == EXIT_OK
    data = _json(capsys)
    assert data['selector'] == "props6"
    assert data['passed']
    assert [c['name'] for c in data['checks']] == ["abelian_catalogs", "e6_catalog_symmetry"]
    assert data['checks'][0]['details']["E6 natural"] == ["[H]", "[X'']", "[Y_1]"]


def test_selector_aliases_run_the_same_checks(capsys):
    assert main(["--json", "verify", "catalogs"]) == EXIT_OK
    assert _json(capsys)['selector'] == "props6"


@pytest.mark.parametrize("selector", SELECTORS + ("all",))
def test_every_selector_parses(selector):
    args = build_parser().parse_args(["verify", selector])
    assert args.selector == selector


def test_every_selector_has_checks():
    assert SELECTORS == ("serre", "eq10-12", "eq13-21", "lemmas6", "props6", "section7", "tables",
                         "section8")
    for selector in SELECTORS:
        assert registered_checks(selector)
    for alias, selector in SELECTOR_ALIASES.items():
        assert resolve_selector(alias) == selector
        assert registered_checks(alias) == registered_checks(selector)
    assert len(registered_checks("all")) == sum(len(registered_checks(s)) for s in SELECTORS)
    with pytest.raises(ValueError):
        registered_checks("bogus")
    with pytest.raises(ValueError):
        check("bogus", "never registered")
    with pytest.raises(ValueError):
        check("all", "never registered")


def test_exceptions_become_failures(monkeypatch):
    def explode(ctx):
        raise RuntimeError("boom")

    def fine(ctx):
        return True, {'ok': 1}

    monkeypatch.setattr(suite_module, "_CHECKS", [
        CheckSpec("serre", "explode", "raises", explode),
        CheckSpec("serre", "fine", "passes", fine),
    ])
    suite = run_suite("serre")
    assert not suite.passed
    assert [r.name for r in suite.failures] == ["explode"]
    assert suite.failures[0].error == "RuntimeError: boom"
    assert 'seconds' in suite.to_dict(timing=True)['checks'][1]
    assert "[FAIL]" in suite.format()


def _jacobi_details(suite):
    return next(r.details for r in suite.results if r.name == "jacobi_identity")


def test_jacobi_sample_count_follows_settings():
    settings = Settings(jacobi_exhaustive_max_dim=50, jacobi_samples=500)
    details = _jacobi_details(run_suite("serre", settings, types=("D5", "D6")))
    assert details["D5"] == {'triples': 45 * 44 * 43 // 6, 'exhaustive': True, 'failures': 0}
    assert details["D6"] == {'triples': 500, 'exhaustive': False, 'failures': 0}


def test_verify_reads_jacobi_settings_from_config(tmp_path, capsys):
    config = tmp_path / "settings.yaml"
    config.write_text("jacobi:\n  exhaustive_max_dim: 50\n  samples: 300\n")
    assert main(["--json", "--config", str(config), "verify", "serre", "--types", "D6"]) == EXIT_OK
    data = _json(capsys)
    jacobi = next(c for c in data['checks'] if c['name'] == "jacobi_identity")
    assert jacobi['details']["D6"] == {'triples': 300, 'exhaustive': False, 'failures': 0}


def test_default_settings_sample_e8(monkeypatch):
    calls = {}
    real = suite_module.check_jacobi

    def record(g, samples=None, seed=7, exhaustive_max_dim=133):
        calls[g.name] = samples
        return real(g, 50 if samples else None, seed, exhaustive_max_dim)

    monkeypatch.setattr(suite_module, "check_jacobi", record)
    details = _jacobi_details(run_suite("serre", Settings(), types=("D5", "E8")))
    assert calls == {"D5": None, "E8": 100000}
    assert details["E8"] == {'triples': 50, 'exhaustive': False, 'failures': 0}
