import pytest

from revdickson import power_sums as ps
from revdickson.errors import OutOfWindow, RangeError, WrongParity


def test_indices():
    assert ps.uv_decompose(22, 5) == ps.IndexPair(2, 4)
    assert ps.uv_decompose(1, 7) == ps.IndexPair(1, 0)
    assert ps.uv_decompose(24, 5) == ps.IndexPair(4, 4)
    assert ps.triple_index(2, 5) == ps.TripleIndex(1, 1)
    assert ps.triple_index(5, 4) == ps.TripleIndex(3, 3)
    assert ps.triple_index(3, 4) == ps.TripleIndex(1, 2)
    with pytest.raises(RangeError):
        ps.uv_decompose(25, 5)


def test_oracle_examples():
    assert ps.power_sum_oracle(3, 2, 3) == 0
    assert ps.power_sum_oracle(4, 3, 3) == 1
    for q in (2, 3, 4, 5, 7, 8, 9):
        assert ps.power_sum_oracle(q, 1, 1) == 0
    assert ps.weighted_sum_oracle(3, 1) == 0
    assert ps.weighted_sum_oracle(4, 3) == 1
    assert ps.weighted_sum_oracle(5, 2) == 0


def test_first_sum_examples():
    for q, p in ((3, 3), (5, 5), (7, 7), (9, 3)):
        assert ps.sum_d_closed(q, q * q - 1) == ps.power_sum_oracle(q, q * q - 1, 1) == p - 1
    assert ps.sum_d_closed(4, 3) == 0
    assert ps.sum_d_closed(4, 11) == 1
    assert ps.sum_d_closed(5, 6) == 0


def test_even_weighted_examples():
    assert ps.T_closed_even(4, 1) == 0
    assert ps.T_closed_even(4, 3) == 1
    assert ps.T_closed_even(8, 2) == 0
    assert ps.T_cases_even(4, 11) == ps.T_closed_even(4, 11) == ps.weighted_sum_oracle(4, 11)


def test_single_binomial_even_form_is_wrong():
    # the one-binomial-per-term even formula drops a Vandermonde term
    for n in (11, 13):
        assert ps.T_closed_even_single_binomial(4, n) != ps.weighted_sum_oracle(4, n)
        assert ps.T_closed_even(4, n) == ps.weighted_sum_oracle(4, n)
    assert ps.T_cases_even_single_binomial(4, 11) == ps.T_closed_even_single_binomial(4, 11)


def test_odd_term_examples():
    assert ps.term_I(5, 2, 4) == 1
    assert ps.term_I(5, 0, 4) == 0
    assert all(ps.term_I(7, u, v) == 0 for u in range(7) for v in range(7) if 0 < u + v < 6)
    assert ps.term_II(5, 2, 0) == 0
    assert ps.term_II(5, 3, 3) == 1
    assert all(ps.term_II(7, 6 - v, v) == 1 for v in range(1, 7))
    assert ps.term_III(5, 2, 0) == 0
    assert ps.term_III(5, 1, 1) == 2


def test_odd_weighted_examples():
    assert ps.T_closed_odd(5, 1) == 0
    assert ps.T_closed_odd(5, 6) == 1 == ps.weighted_sum_oracle(5, 6)
    assert ps.T_closed_odd(5, 2) == 0


def test_cube_examples():
    assert ps.cube_sum_closed(5, 2) == 0
    assert ps.cube_sum_closed(4, 3) == 1
    assert ps.cube_sum_closed(5, 1) == 0
    with pytest.raises(RangeError):
        ps.cube_sum_closed(5, 24)
    assert ps.cube_sum_closed(4, 15) == ps.power_sum_oracle(4, 15, 3)


def test_parity_guards():
    with pytest.raises(WrongParity):
        ps.term_I(4, 1, 1)
    with pytest.raises(OutOfWindow):
        ps.T_cases_even(4, 15)


@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_odd_parts_against_definition(q):
    for n in range(1, q * q - 1):
        assert ps.odd_parts(q, n) == ps.odd_parts_by_definition(q, n)


@pytest.mark.parametrize("q", [2, 4, 8])
def test_even_weighted_against_definition(q):
    for n in range(1, q * q):
        assert ps.T_definition_even(q, n) == ps.T_closed_even(q, n) == ps.weighted_sum_oracle(q, n)
