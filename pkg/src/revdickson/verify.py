"""Invariant suites driven by ``revdickson verify``.

Each suite checks one family of identities for one q and reports how many
cases it looked at plus the first counterexample, if any.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb
from typing import Callable

from . import power_sums as ps
from .gf_tower import PrimePower, field_pair
from .lucas_binomial import binom_mod_p, digit_identity_lhs, digit_identity_rhs
from .polyring import h_closed, h_rational
from .pp_search import filter_applicable, filter_pass, is_permutation
from .rdp_eval import (
    cube_identity_residual,
    d_eval,
    d_sequence_slow,
    pair_table_for,
    reduce_index,
)

CUBE_EXHAUSTIVE_MAX_Q = 16
CUBE_SAMPLES = 10_000
SLOW_N_MAX = 500


@dataclass
class SuiteResult:
    suite: str
    q: int
    checked: int = 0
    failed: int = 0
    counterexample: tuple | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def check(self, n, lhs, rhs) -> bool:
        self.checked += 1
        if lhs != rhs:
            self.failed += 1
            if self.counterexample is None:
                self.counterexample = (self.q, n, lhs, rhs)
            return False
        return True


def suite_identities(q: int) -> SuiteResult:
    res = SuiteResult("identities", q)
    p = PrimePower.from_q(q).p
    for m in range(min(4 * q, 400)):
        for k in range(m + 1):
            res.check(("lucas", m, k), binom_mod_p(m, k, p), comb(m, k) % p)
    for alpha in range(q):
        for v in range(q):
            res.check(("digit", alpha, v), digit_identity_lhs(q, alpha, v, p), digit_identity_rhs(q, alpha, v, p))
    table = pair_table_for(q)
    ctx = table.ctx_q
    if q <= CUBE_EXHAUSTIVE_MAX_Q:
        grid = ((n, a) for n in range(1, q * q) for a in range(q))
    else:
        rng = random.Random(q)
        grid = ((rng.randrange(1, q * q), rng.randrange(q)) for _ in range(CUBE_SAMPLES))
    for n, a in grid:
        res.check(("cube", n, a), cube_identity_residual(table, n, ctx.element(a)).code, 0)
    return res


def suite_h(q: int) -> SuiteResult:
    res = SuiteResult("h", q)
    pp = PrimePower.from_q(q)
    closed, rational = h_closed(pp.p, pp.e), h_rational(pp.p, pp.e)
    res.check("degree", closed.degree, (q - 1) ** 2)
    for i in range(max(len(closed.coeffs), len(rational.coeffs))):
        res.check(i, closed[i], rational[i])
    return res


def _sum_range(q: int) -> range:
    return range(1, q * q) if q % 2 == 0 else range(1, q * q - 1)


def suite_sums(q: int) -> SuiteResult:
    """Closed forms against brute force; ``checked`` counts values of n."""
    res = SuiteResult("sums", q)
    for n in _sum_range(q):
        pairs = [
            (ps.cube_sum_closed(q, n), ps.power_sum_oracle(q, n, 3)),
            (ps.T_closed(q, n), ps.weighted_sum_oracle(q, n)),
            (ps.sum_d_closed(q, n), ps.power_sum_oracle(q, n, 1)),
        ]
        bad = next(((a, b) for a, b in pairs if a != b), None)
        res.check(n, *(bad or pairs[0]))
    return res


def suite_cases(q: int) -> SuiteResult:
    """Case-split formulas against the general ones, and I/II/III against their definitions."""
    res = SuiteResult("cases", q)
    if q % 2 == 0:
        for n in range(1, q * q - 1):
            res.check(n, ps.T_cases_even(q, n), ps.T_closed_even(q, n))
            res.check(n, ps.T_cases_even_single_binomial(q, n), ps.T_closed_even_single_binomial(q, n))
            if q <= 16:
                res.check(n, ps.T_definition_even(q, n), ps.T_closed_even(q, n))
        return res
    cases: list[tuple[Callable, Callable]] = [(ps.term_I, ps.term_I_cases), (ps.term_II, ps.term_II_cases)]
    if q > 3:
        cases.append((ps.term_III, ps.term_III_cases))
    for n in range(1, q * q - 1):
        u, v = n % q, n // q
        for general, special in cases:
            res.check(n, special(q, u, v), general(q, u, v))
        if q <= 9:
            res.check(n, ps.odd_parts_by_definition(q, n), ps.odd_parts(q, n))
    return res


def suite_filters(q: int) -> SuiteResult:
    res = SuiteResult("filters", q)
    if not filter_applicable(q):
        res.notes.append("filters not applicable at this q")
        return res
    k = q - 1
    for n in range(1, q * q - 1):
        verdict = filter_pass(q, n)
        if is_permutation(q, n):
            res.check(n, verdict.failed, False)
        if (n % q + n // q) % k:
            res.check(n, verdict.value == "pass", ps.cube_sum_closed(q, n) == 0)
    return res


def suite_evaluators(q: int) -> SuiteResult:
    res = SuiteResult("evaluators", q)
    table = pair_table_for(q)
    ctx, _ = field_pair(q)
    Q1 = q * q - 1
    for a in ctx.elements():
        for n, slow in enumerate(d_sequence_slow(ctx, a, SLOW_N_MAX)):
            res.check((n, a.code), d_eval(table, n, a), slow)
        for n in range(1, Q1 + 1):
            dn = d_eval(table, n, a)
            res.check((n, a.code), d_eval(table, n + Q1, a), dn)
            res.check((n, a.code), d_eval(table, reduce_index(n * q, q), a), dn)
        res.check(("endpoint", a.code), d_eval(table, Q1, a), a ** (q - 1) + ctx.one)
    if q % 2:
        # first power sum at n = q^2 - 1 for odd q, outside the main sums grid
        res.check(("first-sum", Q1), ps.sum_d_closed(q, Q1), ps.power_sum_oracle(q, Q1, 1))
    return res


SUITES: dict[str, Callable[[int], SuiteResult]] = {
    "identities": suite_identities,
    "h": suite_h,
    "sums": suite_sums,
    "cases": suite_cases,
    "filters": suite_filters,
    "evaluators": suite_evaluators,
}


def _run_one(args: tuple[str, int]) -> SuiteResult:
    name, q = args
    return SUITES[name](q)


def run_suites(names: list[str], qset: list[int], jobs: int = 1) -> list[SuiteResult]:
    tasks = [(name, q) for name in names for q in qset]
    if jobs <= 1:
        return [_run_one(t) for t in tasks]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_one, tasks))
