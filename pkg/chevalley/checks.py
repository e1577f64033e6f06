"""Chevalley-Serre relations and the Jacobi identity."""

import random
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple

from config import log, progress

from .algebra import LieAlgebra
from .element import AlgebraElement, proportionality

MAX_RECORDED_FAILURES = 20


def _ad_power(g: LieAlgebra, a: AlgebraElement, b: AlgebraElement, power: int) -> AlgebraElement:
    for _ in range(power):
        b = g.bracket(a, b)
    return b


def check_generator_relations(
    g: LieAlgebra,
    cartan: Sequence[Sequence[int]],
    x: Sequence[AlgebraElement],
    y: Sequence[AlgebraElement],
    h: Sequence[AlgebraElement],
) -> List[str]:
    """Relations of a Chevalley-Serre presentation with Cartan matrix `cartan`,
    evaluated on candidate images x, y, h inside g. Returns failed relations.
    """
    n = len(cartan)
    failures: List[str] = []
    for i in range(n):
        for j in range(n):
            node_i, node_j = i + 1, j + 1
            if i < j and not g.bracket(h[i], h[j]).is_zero():
                failures.append(f"[H_{node_i},H_{node_j}] != 0")
            expected = h[i] if i == j else g.zero()
            if g.bracket(x[i], y[j]) != expected:
                failures.append(f"[X_{node_i},Y_{node_j}] != {'H_%d' % node_i if i == j else '0'}")
            m = cartan[i][j]
            if g.bracket(h[i], x[j]) != x[j] * m:
                failures.append(f"[H_{node_i},X_{node_j}] != {m} X_{node_j}")
            if g.bracket(h[i], y[j]) != y[j] * (-m):
                failures.append(f"[H_{node_i},Y_{node_j}] != {-m} Y_{node_j}")
            if i != j:
                power = 1 - cartan[j][i]
                if not _ad_power(g, x[i], x[j], power).is_zero():
                    failures.append(f"(ad X_{node_i})^{power} X_{node_j} != 0")
                if not _ad_power(g, y[i], y[j], power).is_zero():
                    failures.append(f"(ad Y_{node_i})^{power} Y_{node_j} != 0")
    return failures


@dataclass
class SerreReport:
    algebra: str
    relations_checked: int
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data['passed'] = self.passed
        return data


def verify_serre(g: LieAlgebra) -> SerreReport:
    n = g.rank
    failures = check_generator_relations(
        g,
        g.cartan,
        [g.x(i) for i in range(1, n + 1)],
        [g.y(i) for i in range(1, n + 1)],
        [g.h(i) for i in range(1, n + 1)],
    )
    # six families over ordered pairs, minus the diagonal Serre and [H_i, H_i] cases
    checked = 6 * n * n - 2 * n - n * (n + 1) // 2
    log("verify", f"{g.name} Serre relations: {checked} checked, {len(failures)} failed")
    return SerreReport(g.name, checked, failures)


@dataclass
class JacobiReport:
    algebra: str
    triples_checked: int
    exhaustive: bool
    failures: List[Tuple[str, str, str]] = field(default_factory=list)
    antisymmetry_failures: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and not self.antisymmetry_failures

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data['passed'] = self.passed
        return data


def _nested(g: LieAlgebra, i: int, j: int, k: int, out: Dict[int, int]) -> None:
    """out += [b_i, [b_j, b_k]] on basis indices."""
    for m, c in g.bracket_basis(j, k):
        for p, d in g.bracket_basis(i, m):
            value = out.get(p, 0) + c * d
            if value:
                out[p] = value
            else:
                out.pop(p, None)


def jacobi_defect(g: LieAlgebra, i: int, j: int, k: int) -> Dict[int, int]:
    out: Dict[int, int] = {}
    _nested(g, i, j, k, out)
    _nested(g, j, k, i, out)
    _nested(g, k, i, j, out)
    return out


def check_antisymmetry(g: LieAlgebra) -> List[Tuple[str, str]]:
    failures = []
    for (i, j), terms in g.table.items():
        reverse = dict(g.bracket_basis(j, i))
        if any(reverse.get(k, 0) != -c for k, c in terms) or len(reverse) != len(terms):
            failures.append((g.labels[i], g.labels[j]))
    return sorted(failures)


def check_jacobi(
    g: LieAlgebra,
    samples: Optional[int] = None,
    seed: int = 7,
    exhaustive_max_dim: int = 133,
) -> JacobiReport:
    """Jacobi identity on basis triples.

    Exhaustive over unordered triples when samples is None and the algebra is
    small enough; otherwise `samples` random triples (default 100000).
    """
    exhaustive = samples is None and g.dim <= exhaustive_max_dim
    if exhaustive:
        total = g.dim * (g.dim - 1) * (g.dim - 2) // 6
        triples = combinations(range(g.dim), 3)
    else:
        total = samples if samples is not None else 100000
        rng = random.Random(seed)
        triples = (tuple(rng.sample(range(g.dim), 3)) for _ in range(total))

    failures: List[Tuple[str, str, str]] = []
    for i, j, k in progress(triples, desc=f"Jacobi {g.name}", total=total):
        if jacobi_defect(g, i, j, k):
            failures.append((g.labels[i], g.labels[j], g.labels[k]))
            if len(failures) >= MAX_RECORDED_FAILURES:
                break
    antisymmetry = check_antisymmetry(g)[:MAX_RECORDED_FAILURES]
    mode = "exhaustive" if exhaustive else f"sampled (seed {seed})"
    log("verify", f"{g.name} Jacobi {mode}: {total} triples, {len(failures)} failures")
    return JacobiReport(g.name, total, exhaustive, failures, antisymmetry)


def weight_vector_failures(g: LieAlgebra, elements: Dict[str, AlgebraElement]) -> List[str]:
    """Names of elements that are not eigenvectors of every ad(H_i)."""
    bad = []
    for name, element in elements.items():
        for i in range(1, g.rank + 1):
            image = g.bracket(g.h(i), element)
            if not image.is_zero() and proportionality(image, element) is None:
                bad.append(name)
                break
    return bad
