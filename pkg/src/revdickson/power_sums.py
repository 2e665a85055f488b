"""Power sums of d_n over GF(q): brute-force oracles and closed forms.

For n = u + v q (0 <= u, v <= q-1) the cube identity
d_n^3 = d_{3n} + 3 a^n d_n turns sum_a d_n(a)^3 into a first power sum at
3n plus three times the weighted sum T(n) = sum_a a^n d_n(a).  Both pieces
have closed forms made of at most a handful of binomial coefficients mod p,
indexed by small integers s, eps, alpha constrained by inequalities of the
shape  s - (u+v)/(q-1) <= eps.  All such bounds are compared after
multiplying through by q-1, so no floating point enters anywhere.

Closed forms return residues in [0, p); oracles return codes of GF(q)
elements.  Both sums lie in the prime subfield, whose codes are 0..p-1, so
the two can be compared directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import OutOfWindow, RangeError, WrongParity
from .gf_tower import PrimePower
from .lucas_binomial import binom_mod_p, delta_n, inv_pow2_mod_p, neg_one_pow
from .rdp_eval import d_values, pair_table_for


@lru_cache(maxsize=None)
def _char(q: int) -> int:
    return PrimePower.from_q(q).p


def _check_n(q: int, n: int, hi: int | None = None) -> None:
    hi = q * q - 1 if hi is None else hi
    if not 1 <= n <= hi:
        raise RangeError(f"n={n} outside [1, {hi}] for q={q}")


def _even(q: int) -> int:
    if q % 2:
        raise WrongParity(f"q={q} is odd; this formula is for even q")
    return 2


def _odd(q: int) -> int:
    if q % 2 == 0:
        raise WrongParity(f"q={q} is even; this formula is for odd q")
    return _char(q)


@dataclass(frozen=True)
class IndexPair:
    u: int
    v: int

    def n(self, q: int) -> int:
        return self.u + self.v * q


@dataclass(frozen=True)
class TripleIndex:
    u_p: int
    v_p: int

    def m(self, q: int) -> int:
        return self.u_p + self.v_p * q


@dataclass(frozen=True)
class OddSumParts:
    I: int
    II: int
    III: int


def uv_decompose(n: int, q: int) -> IndexPair:
    _check_n(q, n)
    return IndexPair(n % q, n // q)


def triple_index(n: int, q: int) -> TripleIndex:
    """(u', v') of the nonzero representative of 3n mod q^2 - 1."""
    _check_n(q, n)
    m = 3 * n % (q * q - 1) or q * q - 1
    return TripleIndex(m % q, m // q)


# -- brute-force oracles --------------------------------------------------------


def power_sum_oracle(q: int, n: int, i: int) -> int:
    """sum_a d_n(a)^i by direct evaluation, as a GF(q) code."""
    _check_n(q, n)
    table = pair_table_for(q)
    ctx = table.ctx_q
    return ctx.sum_arr(ctx.pow_arr(d_values(table, n), i))


def weighted_sum_oracle(q: int, n: int) -> int:
    """sum_a a^n d_n(a) by direct evaluation, as a GF(q) code."""
    _check_n(q, n)
    table = pair_table_for(q)
    ctx = table.ctx_q
    a = np.arange(q, dtype=np.int64)
    return ctx.sum_arr(ctx.mul_arr(ctx.pow_arr(a, n), d_values(table, n)))


# -- integer windows -------------------------------------------------------------
#
# r = (u+v)/(q-1) is never formed; each comparison against it is scaled by q-1.


def _eps_window(q: int, u: int, v: int, s: int) -> list[int]:
    """eps with max{s - r, v-q+1} <= eps < min{s - r + 1, v}."""
    w = u + v
    k = q - 1
    return [
        eps
        for eps in range(v - q + 1, v)
        if eps * k >= s * k - w and eps * k < (s + 1) * k - w
    ]


def _s_window_shifted(q: int, u: int, v: int, lo: int, hi: int) -> list[int]:
    """s with max{lo, v-q+r} < s <= min{hi, v-q+r+1}."""
    w = u + v
    k = q - 1
    return [
        s
        for s in range(lo + 1, hi + 1)
        if s * k > (v - q) * k + w and s * k <= (v - q + 1) * k + w
    ]


# -- first power sum ------------------------------------------------------------


def _first_sum_odd(q: int, p: int, alpha: int, beta: int) -> int:
    return (
        -inv_pow2_mod_p(alpha + beta, p) * binom_mod_p(alpha + beta, q - 1, p)
        + binom_mod_p(2 * (q - 1) - alpha - beta, q - 1 - alpha, p)
    ) % p


def _first_sum_even(q: int, u: int, v: int) -> int:
    if u + v >= q:
        return binom_mod_p(2 * (q - 1) - u - v, q - 1 - u, 2)
    return 0


def sum_d_closed(q: int, n: int) -> int:
    """sum_a d_n(a) in GF(p), for 1 <= n <= q^2 - 1."""
    _check_n(q, n)
    p = _char(q)
    ip = uv_decompose(n, q)
    if p == 2:
        return _first_sum_even(q, ip.u, ip.v)
    if n == q * q - 1:
        return p - 1
    return _first_sum_odd(q, p, ip.u, ip.v)


# -- weighted sum, even q -------------------------------------------------------
#
# For each admissible (s, eps) put A = u+v-(s-eps)(q-1) and
# B = (s-2eps+1)(q-1)-2u-v-eps.  Summing the inner alpha-sum with
# Vandermonde leaves two binomials per (s, eps):
#     C(A, B-(v-eps)) + C(A+v-eps, B)          (mod 2)
# Collapsing the pair to a single C(A, B) is wrong, e.g. at
# (q, n) = (4, 11) and (8, 33); that variant is kept as *_single_binomial
# for comparison only.


def _even_pair(q: int, u: int, v: int, s: int, eps: int) -> int:
    k = q - 1
    A = u + v - (s - eps) * k
    B = (s - 2 * eps + 1) * k - 2 * u - v - eps
    return binom_mod_p(A, B - (v - eps), 2) + binom_mod_p(A + v - eps, B, 2)


def T_closed_even(q: int, n: int) -> int:
    """sum_a a^n d_n(a) in GF(2) for q a power of 2, 1 <= n <= q^2 - 1."""
    _even(q)
    _check_n(q, n)
    u, v = n % q, n // q
    total = delta_n(n, q)
    for s in range(-1, 3):
        for eps in _eps_window(q, u, v, s):
            total += _even_pair(q, u, v, s, eps)
    return total % 2


def T_closed_even_single_binomial(q: int, n: int) -> int:
    """The single-binomial variant; disagrees with the true sum for some n."""
    _even(q)
    _check_n(q, n)
    u, v = n % q, n // q
    k = q - 1
    total = delta_n(n, q)
    for s in range(-1, 3):
        for eps in _eps_window(q, u, v, s):
            total += binom_mod_p(u + v - (s - eps) * k, (s - 2 * eps + 1) * k - 2 * u - v - eps, 2)
    return total % 2


def _even_window_sum(q: int, u: int, v: int) -> int:
    """The (s, eps) sum of T_closed_even with eps pinned by the window of u+v."""
    k = q - 1
    w = u + v
    if 0 < w < k:
        # s - eps = 0
        return sum(_even_pair(q, u, v, s, s) for s in range(-1, min(2, v - 1) + 1)) % 2
    if k <= w < 2 * k:
        # s - eps = 1
        return sum(_even_pair(q, u, v, s, s - 1) for s in range(max(-1, v - q + 2), min(2, v) + 1)) % 2
    raise OutOfWindow(f"u+v={w} outside (0, {2 * k}) for q={q}")


def T_cases_even(q: int, n: int) -> int:
    """T_closed_even split by the window 0 < u+v < q-1 or q-1 <= u+v < 2(q-1)."""
    _even(q)
    _check_n(q, n)
    u, v = n % q, n // q
    w = u + v
    if w == 0 or w >= 2 * (q - 1):
        raise OutOfWindow(f"u+v={w} outside (0, {2 * (q - 1)}) for q={q}")
    return (delta_n(n, q) + _even_window_sum(q, u, v)) % 2


def T_cases_even_single_binomial(q: int, n: int) -> int:
    """Case formulas matching T_closed_even_single_binomial."""
    _even(q)
    _check_n(q, n)
    u, v = n % q, n // q
    k = q - 1
    w = u + v
    if 0 < w < k:
        if v == 0:
            return binom_mod_p(u, 2 * k - 2 * u + 1, 2)
        return (binom_mod_p(w, 2 * k - 2 * u - v + 1, 2) + binom_mod_p(w, k - 2 * u - v, 2)) % 2
    if k <= w < 2 * k:
        d = delta_n(n, q)
        if v == 0:
            return 1
        if v <= q - 2:
            return (d + binom_mod_p(w - k, 3 * k - 2 * u - v + 1, 2) + binom_mod_p(w - k, 2 * k - 2 * u - v, 2)) % 2
        return (d + binom_mod_p(u, k - 2 * u, 2)) % 2
    raise OutOfWindow(f"u+v={w} outside (0, {2 * k}) for q={q}")


def even_filter_lhs(q: int, n: int, single_binomial: bool = False) -> int:
    """Left side of the even-q necessary condition, valid when q-1 does not divide u+v."""
    _even(q)
    _check_n(q, n)
    u, v = n % q, n // q
    k = q - 1
    w = u + v
    if w % k == 0:
        raise OutOfWindow(f"u+v={w} is a multiple of q-1")
    if not single_binomial:
        return _even_window_sum(q, u, v)
    if w < k:
        return sum(binom_mod_p(w, (1 - s) * k - 2 * u - v - s, 2) for s in range(-1, min(0, v - 1) + 1)) % 2
    return sum(
        binom_mod_p(w - k, (3 - s) * k - 2 * u - v - s + 1, 2) for s in range(max(0, v - q + 2), min(1, v) + 1)
    ) % 2


def T_definition_even(q: int, n: int) -> int:
    """The weighted sum as the raw constrained sum over (alpha, beta, j, k)."""
    _even(q)
    _check_n(q, n)
    k1 = q - 1
    total = delta_n(n, q)
    for alpha in range(q - 1):
        for beta in range(q - 1 - alpha):
            b1 = binom_mod_p(alpha + beta, alpha, 2)
            if not b1:
                continue
            for k in range(1, q):
                # exponent condition fixes j
                j = q * k1 + k - (alpha + beta * q) - n
                if 0 <= j <= q - 1 - k and (2 * k - j - alpha - beta) % k1 == 0:
                    total += b1 * binom_mod_p(q - 1 - k, j, 2)
    return total % 2


# -- weighted sum, odd q: the three binomial sums ------------------------------


def term_I(q: int, u: int, v: int) -> int:
    p = _odd(q)
    k = q - 1
    w = u + v
    total = 0
    for s in _s_window_shifted(q, u, v, -1, 3):
        total += binom_mod_p(w - (s - v + q - 1) * k, (s - 2 * v + 2 * q) * k - 2 * w, p)
    return total % p


def term_II(q: int, u: int, v: int) -> int:
    p = _odd(q)
    k = q - 1
    w = u + v
    total = 0
    for s in range(3):
        for alpha in range(1, q):
            # max{0, v-s+r} < alpha <= min{q-1, v-s+r+1}
            if alpha * k > (v - s) * k + w and alpha * k <= (v - s + 1) * k + w:
                total += binom_mod_p(w - (s + alpha - v - 1) * k, (s + 2 * alpha - 2 * v) * k - 2 * w, p)
    return total % p


def term_III(q: int, u: int, v: int) -> int:
    p = _odd(q)
    k = q - 1
    w = u + v
    total = 0
    for s in range(-1, 2):
        for eps in _eps_window(q, u, v, s):
            total += neg_one_pow(v + eps, p) * binom_mod_p(
                u + 2 * v - (s - eps) * k - eps, (s - 2 * eps + 1) * k - 2 * u - v - eps, p
            )
    for s in _s_window_shifted(q, u, v, -2, 1):
        total -= binom_mod_p(w - (s - v + q - 1) * k, (s - 2 * v + 2 * q) * k - 2 * w, p)
    return total % p


def odd_parts(q: int, n: int) -> OddSumParts:
    _check_n(q, n, q * q - 2)
    u, v = n % q, n // q
    return OddSumParts(term_I(q, u, v), term_II(q, u, v), term_III(q, u, v))


def odd_parts_by_definition(q: int, n: int) -> OddSumParts:
    """I, II, III evaluated straight from their defining sums over (alpha, beta, k, j)."""
    p = _odd(q)
    _check_n(q, n)
    k1 = q - 1
    base = q * k1
    I = 0
    for k in range(1, q):
        j = base + k - n
        if 0 <= j <= q - 1 - k and (2 * k - j) % k1 == 0:
            I += neg_one_pow(j, p) * binom_mod_p(q - 1 - k, j, p)
    II = III = 0
    for beta in range(q - 1):
        for alpha in range(q - beta):
            ab = alpha + beta
            if ab == 0:
                continue
            c2 = pow(2, ab, p) * binom_mod_p(2 * k1 - ab, k1, p)
            c3 = binom_mod_p(ab, alpha, p)
            if not (c2 or c3):
                continue
            for k in range(1, q):
                j = base + k - (alpha + beta * q) - n
                if 0 <= j <= q - 1 - k and (2 * k - j - ab) % k1 == 0:
                    t = neg_one_pow(j, p) * binom_mod_p(q - 1 - k, j, p)
                    II += c2 * t
                    III += c3 * t
    return OddSumParts(I % p, II % p, III % p)


def T_closed_odd(q: int, n: int) -> int:
    """sum_a a^n d_n(a) in GF(p) for odd q and 1 <= n <= q^2 - 2."""
    p = _odd(q)
    _check_n(q, n, q * q - 2)
    parts = odd_parts(q, n)
    return (-delta_n(n, q) - parts.I - parts.II + parts.III) % p


def T_closed(q: int, n: int) -> int:
    return T_closed_even(q, n) if q % 2 == 0 else T_closed_odd(q, n)


# -- specialised case formulas for I, II, III ----------------------------------


def term_I_cases(q: int, u: int, v: int) -> int:
    p = _odd(q)
    k = q - 1
    w = u + v
    if 0 < w < k:
        return 0
    if k <= w < 2 * k:
        if v >= q - 2:
            return binom_mod_p(w - k, (q + 2 - v) * k - 2 * w, p)
        return 0
    raise OutOfWindow(f"u+v={w} outside (0, {2 * k})")


def term_II_cases(q: int, u: int, v: int) -> int:
    p = _odd(q)
    k = q - 1
    w = u + v
    if 0 < w < k:
        if v == 0:
            return binom_mod_p(u, 2 * k - 2 * u, p)
        return (binom_mod_p(w, 2 * k - 2 * w, p) + binom_mod_p(w, k - 2 * w, p)) % p
    if w == k:
        return 0 if v == 0 else 1
    if k < w < 2 * k:
        if v <= q - 3:
            return (binom_mod_p(w - k, 4 * k - 2 * w, p) + binom_mod_p(w - k, 3 * k - 2 * w, p)) % p
        if v == q - 2:
            return binom_mod_p(u - 1, q + 1 - 2 * u, p)
        return 0
    raise OutOfWindow(f"u+v={w} outside (0, {2 * k})")


def term_III_cases(q: int, u: int, v: int) -> int:
    """Case-split III, stated for q > 3."""
    p = _odd(q)
    if q <= 3:
        raise OutOfWindow("case formulas for III need q > 3")
    k = q - 1
    w = u + v
    sgn = lambda e: neg_one_pow(e, p)  # noqa: E731
    if 0 < w < k:
        if v == 0:
            return -binom_mod_p(u + 1, 2 * k - 2 * u + 1, p) % p
        return (
            sgn(v + 1) * binom_mod_p(u + 2 * v + 1, 2 * k - 2 * u - v + 1, p)
            + sgn(v) * binom_mod_p(u + 2 * v, k - 2 * u - v, p)
        ) % p
    if k <= w < 2 * k:
        if v == 0:
            return 0
        if v <= q - 3:
            return (
                sgn(v) * binom_mod_p(u + 2 * v - q + 3, 4 * k - 2 * u - v + 2, p)
                + sgn(v + 1) * binom_mod_p(u + 2 * v - q + 2, 3 * k - 2 * u - v + 1, p)
                + sgn(v) * binom_mod_p(u + 2 * v - q + 1, 2 * k - 2 * u - v, p)
            ) % p
        if v == q - 2:
            return (
                binom_mod_p(u + q - 2, 2 * q - 2 * u, p)
                - binom_mod_p(u + q - 3, q - 2 * u, p)
                - binom_mod_p(u - 1, 2 * q - 2 * u, p)
            ) % p
        return (binom_mod_p(u + q - 1, q - 2 * u - 1, p) - binom_mod_p(u, q - 2 * u - 1, p)) % p
    raise OutOfWindow(f"u+v={w} outside (0, {2 * k})")


# -- cube sum -------------------------------------------------------------------


def first_sum_at_triple(q: int, n: int) -> int:
    """sum_a d_{3n}(a), written through the (u', v') digits of 3n."""
    tp = triple_index(n, q)
    p = _char(q)
    if p == 2:
        return _first_sum_even(q, tp.u_p, tp.v_p)
    if tp.m(q) == q * q - 1:
        return p - 1
    return _first_sum_odd(q, p, tp.u_p, tp.v_p)


def cube_sum_closed(q: int, n: int) -> int:
    """sum_a d_n(a)^3 in GF(p).

    Even q: any 1 <= n <= q^2 - 1.  Odd q: 1 <= n <= q^2 - 2; the endpoint
    n = q^2 - 1 has no closed form here and raises RangeError.
    """
    p = _char(q)
    if p == 2:
        _check_n(q, n)
        return (T_closed_even(q, n) + first_sum_at_triple(q, n)) % 2
    _check_n(q, n, q * q - 2)
    return (3 * T_closed_odd(q, n) + first_sum_at_triple(q, n)) % p
