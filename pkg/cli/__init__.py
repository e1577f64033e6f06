"""Command-line surface and verification suites."""

from .main import build_parser, build_run, format_report, main
from .suite import (
    ALGEBRA_TYPES,
    SELECTOR_ALIASES,
    SELECTORS,
    CheckResult,
    CheckSpec,
    SuiteContext,
    VerificationSuite,
    check,
    registered_checks,
    resolve_selector,
    run_suite,
)

__all__ = [
    'build_parser', 'build_run', 'format_report', 'main',
    'ALGEBRA_TYPES', 'SELECTOR_ALIASES', 'SELECTORS', 'CheckResult', 'CheckSpec', 'SuiteContext',
    'VerificationSuite', 'check', 'registered_checks', 'resolve_selector', 'run_suite',
]
