"""Exit criteria, one test per criterion.  All comparisons are exact equalities in F_p."""

import random

import pytest

from revdickson import power_sums as ps
from revdickson.cli import main
from revdickson.errors import OutOfWindow
from revdickson.gf_tower import PrimePower
from revdickson.lucas_binomial import digit_identity_lhs, digit_identity_rhs
from revdickson.polyring import h_closed, h_rational
from revdickson.pp_search import Verdict, filter_pass, search_desirable
from revdickson.rdp_eval import (
    cube_identity_residual,
    d_eval,
    d_eval_slow,
    pair_table_for,
    reduce_index,
)

GRID_Q = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27]


def grid(q):
    """n in [1, q^2 - 2], plus q^2 - 1 for even q."""
    return range(1, q * q) if q % 2 == 0 else range(1, q * q - 1)


def mismatches(pairs):
    return [(key, lhs, rhs) for key, lhs, rhs in pairs if lhs != rhs]


@pytest.mark.criterion(1, "cube-sum closed form equals brute force")
def test_cube_sum_closed_form():
    bad = mismatches(((q, n), ps.cube_sum_closed(q, n), ps.power_sum_oracle(q, n, 3))
                     for q in GRID_Q for n in grid(q))
    assert bad == []


@pytest.mark.criterion(2, "weighted-sum closed forms equal brute force")
def test_weighted_sum_closed_form():
    bad = mismatches(((q, n), ps.T_closed(q, n), ps.weighted_sum_oracle(q, n))
                     for q in GRID_Q for n in grid(q))
    assert bad == []


@pytest.mark.criterion(3, "first-power closed form equals brute force, incl. odd-q endpoint -1")
def test_first_power_closed_form():
    bad = mismatches(((q, n), ps.sum_d_closed(q, n), ps.power_sum_oracle(q, n, 1))
                     for q in GRID_Q for n in grid(q))
    assert bad == []
    for q in GRID_Q:
        if q % 2:
            p = PrimePower.from_q(q).p
            n = q * q - 1
            assert ps.sum_d_closed(q, n) == ps.power_sum_oracle(q, n, 1) == p - 1


@pytest.mark.criterion(4, "h(t) closed forms equal the exact quotient, degree (q-1)^2")
@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
def test_h_polynomial(q):
    pp = PrimePower.from_q(q)
    closed, quotient = h_closed(pp.p, pp.e), h_rational(pp.p, pp.e)
    assert closed.coeffs == quotient.coeffs
    assert closed.degree == quotient.degree == (q - 1) ** 2


@pytest.mark.criterion(5, "binomial digit identity holds exhaustively")
@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 64, 81])
def test_binomial_digit_identity(q):
    bad = [(a, v) for a in range(q) for v in range(q) if digit_identity_lhs(q, a, v) != digit_identity_rhs(q, a, v)]
    assert bad == []


@pytest.mark.criterion(6, "cube identity residual vanishes")
@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27])
def test_cube_identity(q):
    table = pair_table_for(q)
    el = table.ctx_q.element
    if q <= 16:
        cases = [(n, a) for n in range(1, q * q) for a in range(q)]
    else:
        rng = random.Random(q)
        cases = [(rng.randrange(1, q * q), rng.randrange(q)) for _ in range(10_000)]
    bad = [(n, a) for n, a in cases if cube_identity_residual(table, n, el(a)).code != 0]
    assert bad == []


@pytest.mark.criterion(7, "case-split formulas agree with the general formulas")
@pytest.mark.parametrize("q", [5, 7, 8, 9, 11, 13, 16])
def test_case_split_formulas(q):
    ns = range(1, q * q - 1)
    if q % 2 == 0:
        pairs = [(n, ps.T_cases_even_single_binomial(q, n), ps.T_closed_even_single_binomial(q, n)) for n in ns]
        pairs += [(n, ps.T_cases_even(q, n), ps.T_closed_even(q, n)) for n in ns]
        edge = ps.T_cases_even
    else:
        pairs = []
        for n in ns:
            u, v = n % q, n // q
            pairs += [(n, ps.term_I_cases(q, u, v), ps.term_I(q, u, v)),
                      (n, ps.term_II_cases(q, u, v), ps.term_II(q, u, v)),
                      (n, ps.term_III_cases(q, u, v), ps.term_III(q, u, v))]
        edge = lambda q, n: ps.term_I_cases(q, n % q, n // q)  # noqa: E731
    assert mismatches(pairs) == []
    with pytest.raises(OutOfWindow):
        edge(q, q * q - 1)


@pytest.mark.criterion(8, "filters never reject a permutation and track the cube sum")
@pytest.mark.parametrize("q", [5, 7, 8, 9, 11, 13, 16, 25, 27])
def test_filter_soundness(q):
    records = search_desirable(q, verify=True)
    rejected = [r.n for r in records if r.is_permutation and r.filter_verdict.failed]
    assert rejected == []
    for r in records:
        if r.filter_verdict is not Verdict.FAIL_UV:
            assert (r.filter_verdict is Verdict.PASS) == (ps.cube_sum_closed(q, r.n) == 0), r.n
        assert r.filter_verdict is filter_pass(q, r.n)


@pytest.mark.criterion(9, "fast evaluator matches the recurrence; periodicity and Frobenius stability")
@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_evaluators(q):
    table = pair_table_for(q)
    ctx = table.ctx_q
    order = q * q - 1
    for a in ctx.elements():
        for n in range(501):
            assert d_eval(table, n, a) == d_eval_slow(ctx, n, a), (n, a)
        for n in range(1, order + 1):
            dn = d_eval(table, n, a)
            assert d_eval(table, n + order, a) == dn
            assert d_eval(table, reduce_index(n * q, q), a) == dn


def _search_bytes(tmp_path, q, jobs, fmt, tag):
    path = tmp_path / f"{q}-{jobs}-{tag}.{fmt}"
    assert main(["search", "--q", str(q), "--format", fmt, "--jobs", str(jobs), "--out", str(path)]) == 0
    return path.read_bytes()


@pytest.mark.criterion(10, "search output is byte-identical across runs and job counts")
@pytest.mark.parametrize("q", [5, 8, 9])
def test_search_determinism(tmp_path, capsys, q):
    for fmt in ("csv", "json"):
        first = _search_bytes(tmp_path, q, 1, fmt, "a")
        assert _search_bytes(tmp_path, q, 1, fmt, "b") == first
        assert _search_bytes(tmp_path, q, 2, fmt, "c") == first
    assert search_desirable(q, jobs=1) == search_desirable(q, jobs=2)
