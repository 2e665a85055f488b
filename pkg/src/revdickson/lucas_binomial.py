"""Scalar toolkit over GF(p): Lucas binomials, sign and 2-power helpers.

Every closed-form power-sum formula in this package is a short signed sum
of binomial coefficients read modulo p.  ``binom_mod_p`` is deliberately
total: indices outside 0 <= k <= m give 0, which is how out-of-range
terms in those sums are meant to vanish.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .errors import EvenCharacteristic, NegativeInput, RangeError


def _char_of(q: int) -> int:
    d = 2
    while q % d:
        d += 1
    return d


def digits_base_p(m: int, p: int) -> list[int]:
    """Little-endian base-p digits of m; [] for m = 0."""
    if m < 0:
        raise NegativeInput(f"digits of negative integer {m}")
    out = []
    while m:
        m, r = divmod(m, p)
        out.append(r)
    return out


@lru_cache(maxsize=1 << 20)
def binom_mod_p(m: int, k: int, p: int) -> int:
    """C(m, k) mod p by Lucas' theorem; 0 when k < 0, k > m or m < 0."""
    if m < 0 or k < 0 or k > m:
        return 0
    res = 1
    while k:
        m, mi = divmod(m, p)
        k, ki = divmod(k, p)
        if ki > mi:
            return 0
        res = res * comb(mi, ki) % p
    return res


def neg_one_pow(k: int, p: int) -> int:
    """(-1)^k as a residue in [0, p); every sign is +1 when p = 2."""
    return 1 if k % 2 == 0 else p - 1


def digit_identity_lhs(q: int, alpha: int, v: int, p: int | None = None) -> int:
    """C(q-1+alpha-v, alpha) mod p for 0 <= alpha, v <= q-1."""
    if p is None:
        p = _char_of(q)
    if not (0 <= alpha <= q - 1 and 0 <= v <= q - 1):
        raise RangeError(f"alpha={alpha}, v={v} outside [0, {q - 1}]")
    return binom_mod_p(q - 1 + alpha - v, alpha, p)


def digit_identity_rhs(q: int, alpha: int, v: int, p: int | None = None) -> int:
    """(-1)^alpha * C(v, alpha) mod p, the other side of the digit identity."""
    if p is None:
        p = _char_of(q)
    if not (0 <= alpha <= q - 1 and 0 <= v <= q - 1):
        raise RangeError(f"alpha={alpha}, v={v} outside [0, {q - 1}]")
    return neg_one_pow(alpha, p) * binom_mod_p(v, alpha, p) % p


def delta_n(n: int, q: int) -> int:
    """1 if (q-1) divides n, else 0."""
    if n < 1:
        raise RangeError(f"n={n} must be >= 1")
    return 1 if n % (q - 1) == 0 else 0


def inv_pow2_mod_p(m: int, p: int) -> int:
    """2^(-m) mod p for odd p."""
    if p == 2:
        raise EvenCharacteristic("2 is not invertible in characteristic 2")
    if m < 0:
        raise NegativeInput(f"exponent {m} must be >= 0")
    return pow(pow(2, p - 2, p), m, p)
