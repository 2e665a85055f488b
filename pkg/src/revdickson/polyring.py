"""Dense univariate polynomials over GF(p) and the auxiliary series h(t).

Polynomials are little-endian coefficient tuples with no trailing zeros;
the zero polynomial is the empty tuple.  Multiplication and division are
schoolbook, O(d1 * d2), which is fine up to degree (q-1)^2 at q <= 512.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import FieldDivisionByZero, InexactDivision, WrongParity
from .lucas_binomial import binom_mod_p


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class PolyFp:
    p: int
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        canon = _trim([c % self.p for c in self.coeffs])
        object.__setattr__(self, "coeffs", canon)

    @classmethod
    def from_terms(cls, p: int, terms: dict[int, int] | Iterable[tuple[int, int]]) -> PolyFp:
        """Build from (exponent, coefficient) pairs; repeated exponents accumulate."""
        items = terms.items() if isinstance(terms, dict) else terms
        out: dict[int, int] = {}
        for k, c in items:
            out[k] = (out.get(k, 0) + c) % p
        if not out:
            return cls(p)
        dense = [0] * (max(out) + 1)
        for k, c in out.items():
            dense[k] = c
        return cls(p, tuple(dense))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: PolyFp) -> PolyFp:
        return poly_add(self, other)

    def __sub__(self, other: PolyFp) -> PolyFp:
        return poly_sub(self, other)

    def __mul__(self, other: PolyFp) -> PolyFp:
        return poly_mul(self, other)

    def __repr__(self):
        if not self.coeffs:
            return f"PolyFp({self.p}, 0)"
        terms = [f"{c}*t^{k}" for k, c in enumerate(self.coeffs) if c]
        return f"PolyFp({self.p}, {' + '.join(terms)})"


def _check_same_p(a: PolyFp, b: PolyFp) -> int:
    if a.p != b.p:
        raise ValueError(f"characteristic mismatch: {a.p} vs {b.p}")
    return a.p


def poly_add(a: PolyFp, b: PolyFp) -> PolyFp:
    p = _check_same_p(a, b)
    n = max(len(a.coeffs), len(b.coeffs))
    return PolyFp(p, tuple((a[k] + b[k]) % p for k in range(n)))


def poly_sub(a: PolyFp, b: PolyFp) -> PolyFp:
    p = _check_same_p(a, b)
    n = max(len(a.coeffs), len(b.coeffs))
    return PolyFp(p, tuple((a[k] - b[k]) % p for k in range(n)))


def poly_mul(a: PolyFp, b: PolyFp) -> PolyFp:
    p = _check_same_p(a, b)
    if a.is_zero() or b.is_zero():
        return PolyFp(p)
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    # skip zero coefficients: the numerators here are very sparse
    bnz = [(j, c) for j, c in enumerate(b.coeffs) if c]
    for i, ca in enumerate(a.coeffs):
        if ca:
            for j, cb in bnz:
                out[i + j] += ca * cb
    return PolyFp(p, tuple(out))


def poly_divmod(num: PolyFp, den: PolyFp) -> tuple[PolyFp, PolyFp]:
    p = _check_same_p(num, den)
    if den.is_zero():
        raise FieldDivisionByZero("polynomial division by zero")
    rem = list(num.coeffs)
    dd = den.degree
    if len(rem) - 1 < dd:
        return PolyFp(p), num
    inv_lead = pow(den.leading(), p - 2, p)
    dnz = [(j, c) for j, c in enumerate(den.coeffs[:-1]) if c]
    quot = [0] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k] % p
        if not c:
            continue
        c = c * inv_lead % p
        quot[k - dd] = c
        rem[k] = 0
        base = k - dd
        for j, dc in dnz:
            rem[base + j] = (rem[base + j] - c * dc) % p
    return PolyFp(p, tuple(quot)), PolyFp(p, tuple(rem[:dd]))


def poly_exact_div(num: PolyFp, den: PolyFp) -> PolyFp:
    """Quotient num/den, raising InexactDivision unless the remainder vanishes."""
    quot, rem = poly_divmod(num, den)
    if not rem.is_zero():
        raise InexactDivision(f"nonzero remainder {rem!r}")
    return quot


def poly_eval(a: PolyFp, x: int) -> int:
    acc = 0
    for c in reversed(a.coeffs):
        acc = (acc * x + c) % a.p
    return acc


def monomial(p: int, k: int, c: int = 1) -> PolyFp:
    return PolyFp.from_terms(p, {k: c})


def h_rational(p: int, e: int) -> PolyFp:
    """h(t) as the exact quotient (t-2)(t^(q^2-1)-1) / ((t^(q-1)-1)(t^q-t^(q-1)-1))."""
    q = p**e
    num = poly_mul(
        PolyFp.from_terms(p, {1: 1, 0: -2}),
        PolyFp.from_terms(p, {q * q - 1: 1, 0: -1}),
    )
    den = poly_mul(
        PolyFp.from_terms(p, {q - 1: 1, 0: -1}),
        PolyFp.from_terms(p, [(q, 1), (q - 1, -1), (0, -1)]),
    )
    h = poly_exact_div(num, den)
    if h.degree != (q - 1) ** 2:
        raise InexactDivision(f"h has degree {h.degree}, expected {(q - 1) ** 2}")
    return h


def h_closed_even(p: int, e: int) -> PolyFp:
    if p != 2:
        raise WrongParity("closed form for even q needs p = 2")
    q = p**e
    top = (q - 1) ** 2
    terms = []
    for alpha in range(q - 1):
        for beta in range(q - 1 - alpha):
            terms.append((top - (alpha + beta * q), binom_mod_p(alpha + beta, alpha, 2)))
    return PolyFp.from_terms(2, terms)


def h_closed_odd(p: int, e: int) -> PolyFp:
    if p == 2:
        raise WrongParity("closed form for odd q needs p odd")
    q = p**e
    top = (q - 1) ** 2
    terms = [(top, 1)]
    for beta in range(q - 1):
        for alpha in range(q - beta):
            s = alpha + beta
            if s == 0:
                continue
            c = pow(2, s, p) * binom_mod_p(2 * (q - 1) - s, q - 1, p) - binom_mod_p(s, alpha, p)
            terms.append((top - (alpha + beta * q), c))
    return PolyFp.from_terms(p, terms)


def h_closed(p: int, e: int) -> PolyFp:
    return h_closed_even(p, e) if p == 2 else h_closed_odd(p, e)
