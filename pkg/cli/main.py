#!/usr/bin/env python3
"""Command-line entry point: build tables, run verification suites, emit reports."""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from abelext import AbelianExtensionError, classify_lifts, format_classification, scan_invariant_abelian
from branch import BranchingError, branch_with_linkage, format_blocks
from chevalley import AlgebraError, AlgebraRegistry, write_table
from config import ConfigError, RunSpec, RunSpecError, Settings, load_run_spec, load_settings, log, set_verbose
from decomp import DecompositionError, decompose_under
from embed import EmbeddingError, EmbeddingMap, embedding, lift_from_description
from hwmod import ModuleError, WeightModule, adjoint_module, highest_weight_module
from rootsys import RootSystemError, SimpleType, Weight

from .suite import ALGEBRA_TYPES, SELECTOR_ALIASES, SELECTORS, run_suite

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

USAGE_ERRORS = (ConfigError, RootSystemError, EmbeddingError, ModuleError, AlgebraError,
                AbelianExtensionError, BranchingError, DecompositionError)


def emit(data: Dict[str, Any], text: str, as_json: bool) -> None:
    if as_json:
        print(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(text)


def build_run(spec: RunSpec, settings: Settings) -> Tuple[WeightModule, EmbeddingMap, Optional[EmbeddingMap]]:
    """Module, embedding and optional lift described by a run spec."""
    g = AlgebraRegistry.get(spec.module.ambient)
    if spec.module.is_adjoint:
        m = adjoint_module(g)
    else:
        m = highest_weight_module(g, Weight.of(spec.module.highest_weight),  # type: ignore[arg-type]
                                  cap=settings.irrep_dimension_cap)
    emb = embedding(g.rank - 1, spec.variant, g)
    lift = None
    if spec.lift is not None:
        terms = {name: spec.lift.coefficient(name) for name in spec.lift.element}
        lift = lift_from_description(emb, spec.lift.weight, terms, dict(spec.lift.params))
    return m, emb, lift


def cmd_build(args: argparse.Namespace, settings: Settings) -> int:
    t = SimpleType.parse(args.type)
    if str(t) not in ALGEBRA_TYPES:
        raise RootSystemError(f"{t} is not one of {', '.join(ALGEBRA_TYPES)}")
    g = AlgebraRegistry.get(t)
    path = write_table(g, args.out or f"{t}.table")
    data = {'type': str(t), 'dim': g.dim, 'positive_roots': g.n_positive, 'rank': g.rank, 'table': str(path)}
    emit(data, f"{t}: dim {g.dim}, {g.n_positive} positive roots, table written to {path}", args.json)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    types = tuple(t.strip().upper() for t in args.types.split(",")) if args.types else ALGEBRA_TYPES
    for t in types:
        if t not in ALGEBRA_TYPES:
            raise RunSpecError("--types", f"unknown algebra {t!r}")
    suite = run_suite(args.selector, settings, types)
    if args.output:
        suite.artifacts.append(str(args.output))
        Path(args.output).write_text(json.dumps(suite.to_dict(args.timing), indent=2, sort_keys=True,
                                                ensure_ascii=False) + "\n")
        log("verify", f"Report saved to {args.output}")
    emit(suite.to_dict(args.timing), suite.format(), args.json)
    return EXIT_OK if suite.passed else EXIT_CHECK_FAILED


def cmd_decompose(args: argparse.Namespace, settings: Settings) -> int:
    m, emb, lift = build_run(load_run_spec(args.spec), settings)
    decomposition = decompose_under(m, lift or emb)
    emit(decomposition.to_dict(), f"{decomposition.module} under {decomposition.embedding}: "
                                  f"{decomposition.format()}", args.json)
    return EXIT_OK


def cmd_scan(args: argparse.Namespace, settings: Settings) -> int:
    _, emb, _ = build_run(load_run_spec(args.spec), settings)
    catalog = scan_invariant_abelian(emb.target, emb)
    emit(catalog.to_dict(), catalog.format(), args.json)
    return EXIT_OK


def cmd_branch(args: argparse.Namespace, settings: Settings) -> int:
    spec = load_run_spec(args.spec)
    if spec.lift is None:
        raise RunSpecError("lift", "branch needs a lift descriptor")
    m, _, lift = build_run(spec, settings)
    report = branch_with_linkage(m, lift)  # type: ignore[arg-type]
    emit(report.to_dict(), f"{report.module} under {report.lift}: {format_blocks(report)}", args.json)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace, settings: Settings) -> int:
    classes = classify_lifts(args.ambient.upper())
    data = {'ambient': args.ambient.upper(), 'classes': [c.to_dict() for c in classes]}
    emit(data, format_classification(classes), args.json)
    return EXIT_OK if all(c.verified for c in classes) else EXIT_CHECK_FAILED


def format_report(data: Dict[str, Any]) -> str:
    checks: List[Dict[str, Any]] = data.get('checks', [])
    passed = sum(1 for c in checks if c.get('passed'))
    lines = [f"Verification '{data.get('selector', '?')}': {passed}/{len(checks)} checks passed"]
    for c in checks:
        lines.append(f"  [{'PASS' if c.get('passed') else 'FAIL'}] {c.get('selector', ''):<17} {c.get('name', '')}")
        lines.append(f"         {c.get('claim', '')}")
        if not c.get('passed'):
            lines.append(f"         {c.get('error') or c.get('details')}")
    return "\n".join(lines)


def cmd_report(args: argparse.Namespace, settings: Settings) -> int:
    if args.file:
        path = Path(args.file)
        try:
            data = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"Cannot read report {path}: {e}") from e
    else:
        data = run_suite("all", settings).to_dict()
    emit(data, format_report(data), args.json)
    return EXIT_OK if data.get('passed') else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dnlift", description="Exact D_n ⊂ E_{n+1} embedding toolkit")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--verbose", action="store_true", help="tagged logging and progress bars on stderr")
    parser.add_argument("--config", default=None, help="settings YAML (default config/settings.yaml)")
    parser.add_argument("--cache-dir", default=None, help="structure-table cache directory")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a structure table")
    p.add_argument("type", help=f"one of {', '.join(ALGEBRA_TYPES)}")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_build)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("selector", choices=SELECTORS + tuple(SELECTOR_ALIASES) + ("all",))
    p.add_argument("--output", default=None, help="write the JSON report here")
    p.add_argument("--types", default=None, help="comma-separated algebras for the serre checks")
    p.add_argument("--timing", action="store_true", help="include per-check seconds in JSON")
    p.set_defaults(handler=cmd_verify)

    for name, handler, text in (("decompose", cmd_decompose, "decompose a module"),
                                ("scan", cmd_scan, "scan for invariant abelian subspaces"),
                                ("branch", cmd_branch, "branch a module under a lift")):
        p = sub.add_parser(name, help=text)
        p.add_argument("spec", help="run spec (JSON or YAML)")
        p.set_defaults(handler=handler)

    p = sub.add_parser("classify", help="classify lifts into E6, E7 or E8")
    p.add_argument("ambient", choices=["E6", "E7", "E8", "e6", "e7", "e8"])
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("report", help="render a JSON report as text (runs 'all' without a file)")
    p.add_argument("file", nargs="?", default=None)
    p.set_defaults(handler=cmd_report)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        set_verbose(True)
    try:
        settings = load_settings(args.config)
        AlgebraRegistry.configure(args.cache_dir or settings.cache_dir)
        return args.handler(args, settings)
    except RunSpecError as e:
        print(f"error: invalid run spec field {e}", file=sys.stderr)
        return EXIT_USAGE
    except USAGE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
