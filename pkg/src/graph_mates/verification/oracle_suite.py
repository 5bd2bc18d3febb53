"""
Cross-algorithm checks behind the `verify` command.

Each check returns a CheckResult; the suite passes only if every check does.
"""

import logging
import random
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import gcd, prod
from typing import Callable, List, Optional, Sequence

from sympy import Matrix

from ..generators.connected import connected_graph_levels
from ..graphs.graph import Graph
from ..graphs.graph6 import encode_graph6, parse_graph6
from ..invariants.signatures import InvariantKind, graph_signatures
from ..matrices.builders import IntMatrix, MatrixBuilder
from ..matrices.charpoly import char_poly, char_poly_oracle
from ..matrices.kinds import MatrixKind
from ..matrices.smith import SnfResult, snf

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    checked: int
    message: str

    @property
    def status(self) -> str:
        return "✅" if self.ok else "❌"


def _matrices(graphs: Sequence[Graph]):
    for g in graphs:
        builder = MatrixBuilder(g)
        for kind in MatrixKind:
            yield g, kind, builder.build(kind)


def check_char_poly_agreement(graphs: Sequence[Graph]) -> CheckResult:
    """Faddeev-LeVerrier coefficients agree with Bareiss det(tI - M) at t = 0..n."""
    checked = 0
    for g, kind, m in _matrices(graphs):
        p = char_poly(m)
        for t in range(g.order + 1):
            checked += 1
            if p.evaluate(t) != char_poly_oracle(m, t):
                return CheckResult("char poly vs Bareiss", False, checked,
                                   f"{kind.value} of {encode_graph6(g).decode()} differs at t={t}")
    return CheckResult("char poly vs Bareiss", True, checked, f"{checked:,} evaluations agree")


def _chain_ok(s: SnfResult) -> bool:
    return all(f >= 1 for f in s.factors) and all(b % a == 0 for a, b in zip(s.factors, s.factors[1:]))


def check_snf_divisibility(graphs: Sequence[Graph]) -> CheckResult:
    checked = 0
    for g, kind, m in _matrices(graphs):
        checked += 1
        if not _chain_ok(snf(m)):
            return CheckResult("SNF divisibility", False, checked,
                               f"{kind.value} of {encode_graph6(g).decode()} breaks f_i | f_(i+1)")
    return CheckResult("SNF divisibility", True, checked, f"{checked:,} chains valid")


def check_det_consistency(graphs: Sequence[Graph]) -> CheckResult:
    """Product of invariant factors equals |det| for full rank; singular matrices have det 0."""
    checked = 0
    for g, kind, m in _matrices(graphs):
        checked += 1
        s = snf(m)
        det = abs(char_poly(m).coeffs[-1])
        expected = prod(s.factors) if s.rank == m.order else 0
        if det != expected:
            return CheckResult("det consistency", False, checked,
                               f"{kind.value} of {encode_graph6(g).decode()}: |det| {det} vs SNF {expected}")
    return CheckResult("det consistency", True, checked, f"{checked:,} determinants consistent")


def check_permutation_invariance(graphs: Sequence[Graph], samples: int = 100, seed: int = 0) -> CheckResult:
    """Signatures survive random relabelling, over random (graph, permutation, invariant) triples."""
    rng = random.Random(seed)
    kinds = InvariantKind.all()
    for i in range(samples):
        g = rng.choice(graphs)
        permutation = list(range(g.order))
        rng.shuffle(permutation)
        k = rng.choice(kinds)
        before = graph_signatures(g, [k])[k]
        after = graph_signatures(g.relabel(permutation), [k])[k]
        if before != after:
            return CheckResult("permutation invariance", False, i + 1,
                               f"{k.token} of {encode_graph6(g).decode()} changed under {permutation}")
    return CheckResult("permutation invariance", True, samples, f"{samples} random relabellings agree")


def check_graph6_round_trip(graphs: Sequence[Graph]) -> CheckResult:
    for i, g in enumerate(graphs):
        if parse_graph6(encode_graph6(g)) != g:
            return CheckResult("graph6 round trip", False, i + 1, f"{encode_graph6(g).decode()} does not round-trip")
    return CheckResult("graph6 round trip", True, len(graphs), f"{len(graphs):,} graphs round-trip")


def determinantal_factors(m: IntMatrix) -> List[int]:
    """Invariant factors from gcds of k x k minors: f_k = d_k / d_(k-1)."""
    n = m.order
    matrix = Matrix([list(row) for row in m.entries])
    divisors = [1]
    for k in range(1, n + 1):
        minors = (int(matrix.extract(list(rows), list(cols)).det(method='bareiss'))
                  for rows in combinations(range(n), k) for cols in combinations(range(n), k))
        d = reduce(gcd, minors, 0)
        if d == 0:
            break
        divisors.append(d)
    return [divisors[i] // divisors[i - 1] for i in range(1, len(divisors))]


def check_snf_minors(graphs: Sequence[Graph]) -> CheckResult:
    """Elimination SNF agrees with the determinantal-divisor definition."""
    checked = 0
    for g, kind, m in _matrices(graphs):
        checked += 1
        if list(snf(m).factors) != determinantal_factors(m):
            return CheckResult("SNF vs minors", False, checked,
                               f"{kind.value} of {encode_graph6(g).decode()} disagrees with its minors")
    return CheckResult("SNF vs minors", True, checked, f"{checked:,} matrices agree")


def run_oracle_suite(max_order: int = 6, minor_order: int = 4, samples: int = 100, seed: int = 0,
                     on_result: Optional[Callable[[CheckResult], None]] = None) -> List[CheckResult]:
    """
    Run every check over all connected graphs up to max_order.

    Args:
        max_order: largest order of the corpus (at most 8)
        minor_order: largest order for the minors check, which is exponential
        samples: random relabellings for the permutation check
        seed: seed for those relabellings
        on_result: called after each check finishes
    """
    levels = list(connected_graph_levels(max_order))
    corpus = [g for level in levels for g in level]
    small = [g for level in levels[:minor_order] for g in level]
    logger.info(f"Oracle corpus: {len(corpus):,} connected graphs up to n={max_order}")

    checks = [
        lambda: check_char_poly_agreement(corpus),
        lambda: check_snf_divisibility(corpus),
        lambda: check_det_consistency(corpus),
        lambda: check_permutation_invariance(corpus, samples, seed),
        lambda: check_graph6_round_trip(corpus),
        lambda: check_snf_minors(small),
    ]
    results = []
    for check in checks:
        result = check()
        logger.info(f"{result.status} {result.name}: {result.message}")
        results.append(result)
        if on_result:
            on_result(result)
    return results
