import pytest
from hypothesis import given, strategies as st

from revdickson.errors import InexactDivision, WrongParity
from revdickson.polyring import (
    PolyFp,
    h_closed,
    h_closed_even,
    h_closed_odd,
    h_rational,
    monomial,
    poly_divmod,
    poly_eval,
    poly_exact_div,
)


def P(p, *coeffs):
    return PolyFp(p, tuple(c % p for c in coeffs))


def test_exact_division_examples():
    assert poly_exact_div(P(5, -1, 0, 1), P(5, -1, 1)) == P(5, 1, 1)
    assert poly_exact_div(P(2, 0, 1, 0, 0, 1), P(2, 1, 0, 0, 1)) == P(2, 0, 1)
    with pytest.raises(InexactDivision):
        poly_exact_div(P(5, 1, 0, 1), P(5, 1, 1))


def test_canonical_form():
    assert P(3, 1, 2, 0, 0) == P(3, 1, 2)
    assert PolyFp(3, ()).is_zero()
    assert PolyFp.from_terms(3, [(2, 1), (2, 2)]).is_zero()
    assert monomial(7, 4, 3)[4] == 3


@given(
    st.sampled_from([2, 3, 5]),
    st.lists(st.integers(0, 4), max_size=8),
    st.lists(st.integers(0, 4), min_size=1, max_size=5),
)
def test_divmod_reconstructs(p, a, b):
    num, den = P(p, *a), P(p, *b)
    if den.is_zero():
        return
    quo, rem = poly_divmod(num, den)
    assert quo * den + rem == num
    assert rem.is_zero() or rem.degree < den.degree


def test_eval():
    assert poly_eval(P(5, 1, 2, 3), 2) == (1 + 4 + 12) % 5


def test_h_small():
    assert h_rational(2, 1) == P(2, 0, 1)
    assert h_closed_even(2, 1) == P(2, 0, 1)
    assert h_rational(3, 1).degree == 4
    assert h_rational(2, 2).degree == 9


@pytest.mark.parametrize("q,p,e", [(2, 2, 1), (3, 3, 1), (4, 2, 2), (5, 5, 1), (7, 7, 1),
                                   (8, 2, 3), (9, 3, 2), (16, 2, 4), (25, 5, 2), (27, 3, 3)])
def test_h_closed_equals_quotient(q, p, e):
    closed = h_closed(p, e)
    assert closed == h_rational(p, e)
    assert closed.degree == (q - 1) ** 2
    if p % 2:
        assert closed.leading() == 1


def test_parity_guard():
    with pytest.raises(WrongParity):
        h_closed_even(3, 1)
    with pytest.raises(WrongParity):
        h_closed_odd(2, 2)
