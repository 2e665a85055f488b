from math import comb

import pytest
from hypothesis import given, strategies as st

from revdickson.errors import RangeError
from revdickson.lucas_binomial import (
    binom_mod_p,
    delta_n,
    digits_base_p,
    inv_pow2_mod_p,
    digit_identity_lhs,
    digit_identity_rhs,
)


def test_digits():
    assert digits_base_p(11, 2) == [1, 1, 0, 1]
    assert digits_base_p(0, 5) == []
    assert digits_base_p(10, 3) == [1, 0, 1]


def test_binom_examples():
    assert binom_mod_p(5, 2, 3) == 1
    assert binom_mod_p(2, 5, 7) == 0
    assert binom_mod_p(10, 4, 3) == 0
    assert binom_mod_p(7, -1, 5) == 0
    assert binom_mod_p(-3, 1, 5) == 0
    assert all(binom_mod_p(m, 0, 7) == 1 for m in range(50))


@given(st.integers(0, 3000), st.integers(0, 3000), st.sampled_from([2, 3, 5, 7, 11, 13]))
def test_binom_matches_factorial(m, k, p):
    assert binom_mod_p(m, k, p) == comb(m, k) % p


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
def test_digit_identity_small(q):
    for alpha in range(q):
        for v in range(q):
            assert digit_identity_lhs(q, alpha, v) == digit_identity_rhs(q, alpha, v)
        assert digit_identity_lhs(q, 0, alpha) == 1


def test_digit_identity_example():
    # C(2, 1) = 2 and -C(2, 1) = -2, both even
    assert digit_identity_lhs(4, 1, 2) == comb(2, 1) % 2 == 0
    assert digit_identity_rhs(4, 1, 2) == 0


def test_delta():
    assert delta_n(3, 4) == 1
    assert delta_n(1, 4) == 0
    assert delta_n(6, 4) == 1
    with pytest.raises(RangeError):
        delta_n(0, 4)


def test_inverse_powers_of_two():
    assert inv_pow2_mod_p(0, 5) == 1
    assert inv_pow2_mod_p(3, 5) == 2
    assert inv_pow2_mod_p(1, 7) == 4
    for p in (3, 5, 7, 11):
        for m in range(20):
            assert inv_pow2_mod_p(m, p) * pow(2, m, p) % p == 1
