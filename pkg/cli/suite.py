"""Named verification checks grouped by selector, and the suite that runs them."""

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import sympy

from abelext import (
    IDENTITY_QUADRUPLE,
    MAX_ABELIAN_DIMENSION,
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
    sl2_substitution,
    weight_eigenvalue_certificate,
)
from branch import (
    branch_with_linkage,
    format_blocks,
    indecomposability_criterion,
    radical_commutation_failures,
)
from chevalley import AlgebraRegistry, check_jacobi, named_elements, proportionality, sign_audit, verify_serre
from config import Settings, log, progress
from decomp import IsotypicDecomposition, decompose_under, linear_equivalence_witness
from embed import embedding, generated_submodule, standard_lift
from hwmod import WeightModule, adjoint_module, highest_weight_module
from rootsys import SimpleType, Weight, algebra_dimension, weyl_dim

SELECTORS = ("serre", "eq10-12", "eq13-21", "lemmas6", "props6", "section7", "tables", "section8")

# descriptive names accepted wherever a selector is
SELECTOR_ALIASES = {
    "witnesses": "eq10-12",
    "adjoint": "eq13-21",
    "abelian": "lemmas6",
    "catalogs": "props6",
    "lifts": "section7",
    "indecomposability": "section8",
}

ALGEBRA_TYPES = ("D5", "D6", "D7", "E6", "E7", "E8")

CheckFn = Callable[['SuiteContext'], Tuple[bool, Dict[str, Any]]]


@dataclass
class SuiteContext:
    settings: Settings
    types: Sequence[str] = ALGEBRA_TYPES


@dataclass
class CheckSpec:
    selector: str
    name: str
    claim: str
    fn: CheckFn


_CHECKS: List[CheckSpec] = []


def resolve_selector(selector: str) -> str:
    """Canonical selector for a name or alias; "all" passes through."""
    resolved = SELECTOR_ALIASES.get(selector, selector)
    if resolved != "all" and resolved not in SELECTORS:
        raise ValueError(f"Unknown selector {selector!r}; expected one of "
                         f"{', '.join(SELECTORS + tuple(SELECTOR_ALIASES))}, all")
    return resolved


def check(selector: str, claim: str) -> Callable[[CheckFn], CheckFn]:
    """Register a check under a selector; the function name becomes the check name."""
    selector = resolve_selector(selector)
    if selector == "all":
        raise ValueError("Checks cannot be registered under 'all'")

    def decorator(fn: CheckFn) -> CheckFn:
        _CHECKS.append(CheckSpec(selector, fn.__name__, claim, fn))
        return fn

    return decorator


def registered_checks(selector: str = "all") -> List[CheckSpec]:
    selector = resolve_selector(selector)
    return [c for c in _CHECKS if selector == "all" or c.selector == selector]


@dataclass
class CheckResult:
    selector: str
    name: str
    claim: str
    passed: bool
    details: Dict[str, Any] = field(default_factory=dict)
    error: Optional[str] = None
    seconds: float = 0.0

    def to_dict(self, timing: bool = False) -> Dict[str, Any]:
        out = {
            'selector': self.selector,
            'name': self.name,
            'claim': self.claim,
            'passed': self.passed,
            'details': self.details,
            'error': self.error,
        }
        if timing:
            out['seconds'] = round(self.seconds, 3)
        return out


@dataclass
class VerificationSuite:
    selector: str
    results: List[CheckResult] = field(default_factory=list)
    artifacts: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    def to_dict(self, timing: bool = False) -> Dict[str, Any]:
        return {
            'selector': self.selector,
            'passed': self.passed,
            'checks': [r.to_dict(timing) for r in self.results],
            'artifacts': list(self.artifacts),
        }

    def format(self) -> str:
        lines = [f"Verification '{self.selector}': "
                 f"{len(self.results) - len(self.failures)}/{len(self.results)} checks passed"]
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"  [{status}] {r.selector:<17} {r.name:<40} {r.seconds:7.2f}s")
            if not r.passed:
                lines.append(f"         {r.claim}")
                lines.append(f"         {r.error or r.details}")
        return "\n".join(lines)


def run_suite(selector: str, settings: Optional[Settings] = None,
              types: Sequence[str] = ALGEBRA_TYPES) -> VerificationSuite:
    """Run every check under selector; an exception inside a check counts as its failure."""
    selector = resolve_selector(selector)
    context = SuiteContext(settings or Settings(), types)
    suite = VerificationSuite(selector)
    for spec in progress(registered_checks(selector), desc=f"verify {selector}"):
        start = time.perf_counter()
        try:
            passed, details = spec.fn(context)
            result = CheckResult(spec.selector, spec.name, spec.claim, passed, details)
        except Exception as e:
            result = CheckResult(spec.selector, spec.name, spec.claim, False, error=f"{type(e).__name__}: {e}")
        result.seconds = time.perf_counter() - start
        log("verify", f"{spec.name}: {'pass' if result.passed else 'FAIL'} ({result.seconds:.2f}s)")
        suite.results.append(result)
    return suite


# -- helpers ---------------------------------------------------------------


def _labels(decomposition: IsotypicDecomposition) -> Dict[str, int]:
    return {w.label(): mult for w, mult in decomposition.constituents}


def _expect(observed: Dict[str, Any], expected: Dict[str, Any]) -> Tuple[bool, Dict[str, Any]]:
    ok = all(observed.get(k) == v for k, v in expected.items())
    return ok, {'expected': expected, 'observed': {k: observed.get(k) for k in expected}}


def _fundamental_module(ambient: str, node: int) -> WeightModule:
    g = AlgebraRegistry.get(ambient)
    return highest_weight_module(g, Weight.fundamental(g.rank, node))


# -- serre -----------------------------------------------------------------


@check("serre", "Chevalley-Serre relations hold exactly in every structure table")
def serre_relations(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    reports = {t: verify_serre(AlgebraRegistry.get(t)) for t in ctx.types}
    return all(r.passed for r in reports.values()), {
        t: {'relations': r.relations_checked, 'failures': r.failures[:5]} for t, r in reports.items()
    }


@check("serre", "Jacobi identity: exhaustive up to dimension 133, sampled above")
def jacobi_identity(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    details: Dict[str, Any] = {}
    ok = True
    for t in ctx.types:
        g = AlgebraRegistry.get(t)
        samples = None if g.dim <= ctx.settings.jacobi_exhaustive_max_dim else ctx.settings.jacobi_samples
        report = check_jacobi(g, samples, ctx.settings.seed, ctx.settings.jacobi_exhaustive_max_dim)
        ok = ok and report.passed
        details[t] = {'triples': report.triples_checked, 'exhaustive': report.exhaustive,
                      'failures': len(report.failures)}
    return ok, details


@check("serre", "Algebra and module dimensions match the dimension formulas")
def dimension_identities(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    observed: Dict[str, Any] = {}
    expected: Dict[str, Any] = {}
    for t in ctx.types:
        observed[t] = AlgebraRegistry.get(t).dim
        expected[t] = algebra_dimension(SimpleType.parse(t))
    for n in (5, 6, 7):
        if f"D{n}" in ctx.types:
            expected[f"D{n}"] = 2 * n * n - n
    expected.update({k: v for k, v in {'E6': 78, 'E7': 133, 'E8': 248}.items() if k in ctx.types})
    for name, node, dim in (("D7", 1, 14), ("D6", 5, 32), ("D6", 6, 32), ("D5", 4, 16), ("D5", 5, 16)):
        rs = AlgebraRegistry.root_system(name)
        observed[f"{name} λ{node}"] = weyl_dim(rs, Weight.fundamental(rs.rank, node))
        expected[f"{name} λ{node}"] = dim
    return _expect(observed, expected)


@check("serre", "Named-element relations hold with the signs recorded by the sign audit")
def named_element_signs(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    audits = {t: sign_audit(AlgebraRegistry.get(t)) for t in ("E7", "E8") if t in ctx.types}
    ok = all(s is not None for audit in audits.values() for s in audit.values())
    return ok, audits


# -- eq10-12: restriction witnesses -----------------------------------------


@check("eq10-12", "Minimal E6 module restricts differently under phi_5 and rho_5")
def e6_restriction_witness(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    m = _fundamental_module('E6', 6)
    natural = _labels(decompose_under(m, embedding(5, 'natural', m.algebra)))
    twisted = _labels(decompose_under(m, embedding(5, 'twisted', m.algebra)))
    ok = natural == {'λ5': 1, 'λ1': 1, '0': 1} and twisted == {'λ4': 1, 'λ1': 1, '0': 1}
    return ok, {'phi': natural, 'rho': twisted}


@check("eq10-12", "Minimal E7 module restricts differently under phi_6 and rho_6")
def e7_restriction_witness(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    m = _fundamental_module('E7', 7)
    natural = _labels(decompose_under(m, embedding(6, 'natural', m.algebra)))
    twisted = _labels(decompose_under(m, embedding(6, 'twisted', m.algebra)))
    ok = natural == {'λ6': 1, 'λ1': 2} and twisted == {'λ5': 1, 'λ1': 2}
    return ok, {'phi': natural, 'rho': twisted}


@check("eq10-12", "E8 adjoint module restricts identically under phi_7 and rho_7")
def e8_restriction_symmetry(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    g = AlgebraRegistry.get('E8')
    m = adjoint_module(g)
    same = linear_equivalence_witness(m, embedding(7, 'natural', g), embedding(7, 'twisted', g))
    return same, {'linearly_equivalent': same}


# -- eq13-21: adjoint decompositions ----------------------------------------


@check("eq13-21", "Adjoint decompositions of E6, E7, E8 under the natural D_n")
def adjoint_decompositions(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    expected = {
        'E6': {'λ2': 1, 'λ4': 1, 'λ5': 1, '0': 1},
        'E7': {'λ2': 1, 'λ5': 2, '0': 3},
        'E8': {'λ2': 1, 'λ1': 2, 'λ6': 1, 'λ7': 1, '0': 1},
    }
    observed = {}
    for ambient in expected:
        g = AlgebraRegistry.get(ambient)
        observed[ambient] = _labels(decompose_under(adjoint_module(g), embedding(g.rank - 1, 'natural', g)))
    return observed == expected, {'expected': expected, 'observed': observed}


@check("eq13-21", "Constituent dimensions add up to 248, 133 and 78")
def adjoint_dimension_sums(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    observed = {}
    for ambient in ('E6', 'E7', 'E8'):
        g = AlgebraRegistry.get(ambient)
        d = decompose_under(adjoint_module(g), embedding(g.rank - 1, 'natural', g))
        observed[ambient] = sorted((dim for _, mult, dim in d.dimensions() for _ in range(mult)), reverse=True)
    expected = {'E6': [45, 16, 16, 1], 'E7': [66, 32, 32, 1, 1, 1], 'E8': [91, 64, 64, 14, 14, 1]}
    return observed == expected, {'expected': expected, 'observed': observed}


@check("eq13-21", "Highest-weight vectors of the adjoint constituents are the named elements")
def adjoint_highest_weight_vectors(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    expected = {
        'E6': {"X'", "X''", "Y_1", "H"},
        'E7': {"X'", "X''", "Y_1", "X'''", "Y'", "H"},
        'E8': {"X'", "X''", "X'''", "Y'", "Y_1", "H"},
    }
    observed = {}
    for ambient in expected:
        g = AlgebraRegistry.get(ambient)
        d = decompose_under(adjoint_module(g), embedding(g.rank - 1, 'natural', g))
        observed[ambient] = sorted(name for names in d.hw_labels.values() for name in names)
    ok = all(set(observed[a]) == expected[a] for a in expected)
    return ok, {'observed': observed}


# -- lemmas6: abelian brackets ----------------------------------------------


@check("lemmas6", "[X'''] is abelian in E8 and [X'''] + [Y'] is not")
def e8_abelian_brackets(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    g = AlgebraRegistry.get('E8')
    emb = embedding(7, 'natural', g)
    named = named_elements(g)
    top = generated_submodule(g, named.Xppp, emb)  # type: ignore[arg-type]
    bottom = generated_submodule(g, named.Yp, emb)  # type: ignore[arg-type]
    single = is_abelian_subspace(g, top)
    mixed = is_abelian_subspace(g, top + bottom)
    mixed_bracket = g.bracket(named.Xppp + named.Yp, g.bracket(g.y(8), named.Xppp + named.Yp))  # type: ignore
    ratio = proportionality(mixed_bracket, named.Xp)
    ok = single.abelian and len(top) == 14 and not mixed.abelian and ratio in (2, -2)
    return ok, {'dim': len(top), 'mixed_abelian': mixed.abelian, 'mixed_bracket_over_Xp': str(ratio)}


@check("lemmas6", "Pencil alpha X''' + beta Y' in E8 is abelian only when alpha*beta = 0")
def e8_pencil(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    g = AlgebraRegistry.get('E8')
    named = named_elements(g)
    pencil = pencil_abelian_conditions(g, embedding(7, 'natural', g), [named.Xppp, named.Yp])  # type: ignore
    alpha, beta = pencil.symbols
    ok = bool(pencil.conditions) and all(sympy.div(c, alpha * beta, alpha, beta)[1] == 0 for c in pencil.conditions)
    ok = ok and pencil.abelian_at([1, 0]) and pencil.abelian_at([0, 1]) and not pencil.abelian_at([1, 1])
    return ok, {'conditions': pencil.describe()}


@check("lemmas6", "[Y', X'''] is nonzero in E7")
def e7_mixed_bracket(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    g = AlgebraRegistry.get('E7')
    named = named_elements(g)
    value = g.bracket(named.Yp, named.Xppp)  # type: ignore[arg-type]
    return not value.is_zero(), {'bracket_is_cartan': g.is_cartan(value)}


@check("lemmas6", "[X''] and [Y_1] are 16-dimensional abelian subalgebras of E6")
def e6_abelian_brackets(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    g = AlgebraRegistry.get('E6')
    emb = embedding(5, 'natural', g)
    observed = {}
    for name, element in (("X''", named_elements(g).Xpp), ("Y_1", g.y(1))):
        basis = generated_submodule(g, element, emb)
        observed[name] = [len(basis), is_abelian_subspace(g, basis).abelian]
    return _expect(observed, {"X''": [16, True], "Y_1": [16, True]})


# -- props6: abelian catalogs ------------------------------------------------

_EXPECTED_ABELIAN = {
    ('E8', 'natural'): {"[H]", "[X''']", "[Y']"},
    ('E7', 'natural'): {"[H]", "[X''']", "[Y']", "alpha X''' + beta H + gamma Y'"},
    ('E6', 'natural'): {"[H]", "[X'']", "[Y_1]"},
    ('E6', 'twisted'): {"[H]", "[X'']", "[Y_1]"},
}


@check("props6", "Invariant abelian subspaces of E8, E7, E6 under the embedded D_n")
def abelian_catalogs(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    observed = {}
    ok = True
    for (ambient, variant), expected in _EXPECTED_ABELIAN.items():
        g = AlgebraRegistry.get(ambient)
        catalog = scan_invariant_abelian(g, embedding(g.rank - 1, variant, g))
        found = {e.name for e in catalog.abelian_entries()}
        observed[f"{ambient} {variant}"] = sorted(found)
        ok = ok and found == expected
    return ok, observed


@check("props6", "Swapping phi and rho exchanges the radical weights of E6 catalogs")
def e6_catalog_symmetry(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    g = AlgebraRegistry.get('E6')
    weights = {}
    for variant in ('natural', 'twisted'):
        catalog = scan_invariant_abelian(g, embedding(5, variant, g))
        weights[variant] = {e.name: e.weights[0].label() for e in catalog.abelian_entries()}
    expected = {'natural': {"[X'']": 'λ5', "[Y_1]": 'λ4', "[H]": '0'},
                'twisted': {"[X'']": 'λ4', "[Y_1]": 'λ5', "[H]": '0'}}
    return weights == expected, weights


# -- section7: lift automorphisms ------------------------------------------


@check("section7", "Torus automorphisms rescale every root-vector lift parameter")
def torus_equivalences(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    cases = [('E8', 'natural', 'lambda1'), ('E8', 'natural', "lambda1'")]
    cases += [('E6', v, f) for v in ('natural', 'twisted') for f in ('lambda5', 'lambda4')]
    observed = {}
    for ambient, variant, family in cases:
        result = realize_torus_equivalence(ambient, variant, family, Fraction(4))
        observed[f"{ambient} {variant} {family}"] = result.verified
    return all(observed.values()), observed


@check("section7", "SL2 automorphisms of E7 act on (Y', X''', H) by the substitution formulas")
def sl2_substitutions(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    g = AlgebraRegistry.get('E7')
    failures = {}
    quadruples = [IDENTITY_QUADRUPLE] + sample_quadruples(ctx.settings.sl2_samples, ctx.settings.seed)
    for q in progress(quadruples, desc="SL2 samples"):
        bad = check_sl2_substitution(q, g)
        if bad:
            failures[str(tuple(str(x) for x in q))] = bad
    return not failures, {'samples': len(quadruples), 'failures': failures}


@check("section7", "Substitutions compose like the product of their SL2 matrices")
def sl2_composition(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    triple = sympy.symbols('alpha beta gamma')
    quadruples = sample_quadruples(6, ctx.settings.seed + 1)
    ok = sl2_substitution(triple, IDENTITY_QUADRUPLE) == tuple(triple)
    for q1, q2 in zip(quadruples[::2], quadruples[1::2]):
        lhs = sl2_substitution(sl2_substitution(triple, q2), q1)
        rhs = sl2_substitution(triple, compose_quadruples(q1, q2))
        ok = ok and all(sympy.expand(a - b) == 0 for a, b in zip(lhs, rhs))
    return ok, {'pairs': len(quadruples) // 2}


@check("section7", "Cartan-radical lifts Y', X''' and -X''' are SL2 related")
def sl2_witnesses(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    one = (Fraction(1), Fraction(0), Fraction(0))
    targets = {'-X\'\'\'': (Fraction(0), Fraction(-1), Fraction(0)), "X'''": (Fraction(0), Fraction(1), Fraction(0))}
    observed = {}
    for name, target in targets.items():
        q = find_sl2_witness(one, target)
        observed[name] = None if q is None else [str(x) for x in q]
        if q is None or not is_sl2_witness(one, target, q):
            return False, observed
    none = find_sl2_witness(one, (Fraction(0), Fraction(0), Fraction(1)))
    return none is None, observed


@check("section7",
       "Rescaling a Cartan radical forces the ratio 1; ad H fixes X'' and separates X''' from Y'")
def inequivalence_certificates(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    observed: Dict[str, Any] = {}
    for ambient, variants in (('E8', ('natural',)), ('E6', ('natural', 'twisted'))):
        g = AlgebraRegistry.get(ambient)
        for variant in variants:
            obstruction = cartan_scaling_obstruction(g, embedding(g.rank - 1, variant, g))
            observed[f"{ambient} {variant}"] = obstruction.to_dict()
    certificate = weight_eigenvalue_certificate(AlgebraRegistry.get('E8'))
    observed['E8 eigenvalues'] = certificate.to_dict()
    ok = all(v['forces_identity'] for k, v in observed.items() if k != 'E8 eigenvalues')
    ok = ok and certificate.verified and certificate.eigenvalues.get("X'''") == 2
    return ok, observed


# -- tables ----------------------------------------------------------------


@check("tables", "Lift classifications of E8, E7 and E6 with every certificate verified")
def classification_tables(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    tables = {}
    ok = True
    for ambient in ('E8', 'E7', 'E6'):
        classes = classify_lifts(ambient)
        ok = ok and all(c.verified for c in classes)
        tables[ambient] = {'classes': [c.to_dict() for c in classes], 'text': format_classification(classes)}
    counts = {a: len(t['classes']) for a, t in tables.items()}
    return ok and counts == {'E8': 3, 'E7': 2, 'E6': 6}, tables


@check("tables", "Maximal abelian dimensions bound every abelian subspace found")
def maximal_abelian_dimensions(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    observed = {}
    for ambient in ('E6', 'E7', 'E8'):
        g = AlgebraRegistry.get(ambient)
        catalog = scan_invariant_abelian(g, embedding(g.rank - 1, 'natural', g))
        observed[ambient] = max((e.dim for e in catalog.abelian_entries()), default=0)
    ok = all(observed[a] <= MAX_ABELIAN_DIMENSION[a] for a in observed)
    return ok and MAX_ABELIAN_DIMENSION == {'E6': 16, 'E7': 27, 'E8': 36}, observed


# -- section8: indecomposability -------------------------------------------


@check("section8", "E6 lifts with 16-dimensional radicals contain all positive or negative root vectors")
def e6_indecomposability(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    m = _fundamental_module('E6', 6)
    observed = {}
    for variant in ('natural', 'twisted'):
        for family in ('lambda5', 'lambda4'):
            lift = standard_lift('E6', variant, family, target=m.algebra)
            observed[lift.describe()] = indecomposability_criterion(m, lift)
    return all(observed.values()), observed


@check("section8", "Cartan-radical lifts never satisfy the root-vector criterion")
def cartan_lifts_decomposable(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    observed = {}
    for ambient in ('E6', 'E7', 'E8'):
        g = AlgebraRegistry.get(ambient)
        lift = standard_lift(ambient, 'natural', 'zero', target=g)
        observed[lift.describe()] = indecomposability_criterion(adjoint_module(g), lift)
    return not any(observed.values()), observed


@check("section8", "E8 adjoint under the lambda1 lift splits into two linkage blocks")
def e8_linkage_blocks(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    g = AlgebraRegistry.get('E8')
    m = adjoint_module(g)
    lift = standard_lift('E8', 'natural', 'lambda1', target=g)
    report = branch_with_linkage(m, lift)
    blocks = sorted(sorted(w.label() for w in block) for block in report.block_weights())
    expected = sorted([sorted(['λ2', 'λ1', 'λ1', '0']), sorted(['λ6', 'λ7'])])
    commuting = not radical_commutation_failures(m, lift)
    return blocks == expected and commuting, {'blocks': format_blocks(report), 'radical_commutes': commuting}


@check("section8", "Cartan lifts of E6 leave the adjoint constituents unlinked")
def e6_cartan_blocks(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    g = AlgebraRegistry.get('E6')
    report = branch_with_linkage(adjoint_module(g), standard_lift('E6', 'natural', 'zero', target=g))
    return len(report.blocks) == 4 and not report.linkage_edges, {'blocks': format_blocks(report)}


@check("section8", "E7 adjoint under Cartan lifts has parameter-dependent multiplicity spaces")
def e7_parameter_dependence(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    g = AlgebraRegistry.get('E7')
    observed = {}
    ok = True
    for variant, spinor in (('natural', 'λ5'), ('twisted', 'λ6')):
        report = branch_with_linkage(adjoint_module(g), standard_lift('E7', variant, 'zero', target=g))
        labels = _labels(report.decomposition)
        flagged = [report.components[i].label() for i in report.parameter_dependent]
        observed[variant] = {'constituents': labels, 'parameter_dependent': flagged}
        ok = ok and labels == {'λ2': 1, spinor: 2, '0': 3} and bool(flagged)
    return ok, observed


@check("section8", "Minimal E6 module under the lambda5 lift is one linkage block")
def e6_single_block(ctx: SuiteContext) -> Tuple[bool, Dict[str, Any]]:
    m = _fundamental_module('E6', 6)
    lift = standard_lift('E6', 'natural', 'lambda5', target=m.algebra)
    report = branch_with_linkage(m, lift)
    ok = len(report.blocks) == 1 and report.all_positive_roots_contained
    ok = ok and not radical_commutation_failures(m, lift)
    return ok, {'blocks': format_blocks(report)}
