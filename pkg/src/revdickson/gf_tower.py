"""Finite fields GF(p), GF(p^e) and the quadratic extension GF(q^2).

A field is a FieldCtx: coefficient field ``base`` (None for the residues
mod p) together with a monic irreducible ``modulus`` over it.  Elements
travel as integer codes sum(c_i * base_order**i) where c_i are the codes
of their coefficients.  Because q = p^e, a code of GF(q^2) built over
GF(q) is simply the concatenation of prime digits, so addition is always
digit-wise mod p at every level of the tower.

Multiplication goes through log/exp tables built lazily from a reference
polynomial multiplication; the vectorised ``*_arr`` helpers use the same
tables on numpy arrays of codes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

import numpy as np

from .errors import BoundExceeded, ContextMismatch, FieldDivisionByZero, NonPrime
from .polyring import PolyFp, poly_divmod

DEFAULT_BOUND = 512


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class PrimePower:
    p: int
    e: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise NonPrime(f"{self.p} is not prime")
        if self.e < 1:
            raise ValueError(f"exponent e={self.e} must be >= 1")

    @property
    def q(self) -> int:
        return self.p**self.e

    @classmethod
    def from_q(cls, q: int) -> PrimePower:
        """Factor q as p^e, raising NonPrime if q is not a prime power."""
        if q < 2:
            raise NonPrime(f"{q} is not a prime power")
        p = _prime_factors(q)[0]
        e, r = 0, q
        while r % p == 0:
            r //= p
            e += 1
        if r != 1:
            raise NonPrime(f"{q} is not a prime power")
        return cls(p, e)


class FieldCtx:
    """GF(base_order ** degree) realised as base[T]/(modulus)."""

    def __init__(self, p: int, modulus: Sequence[int], base: FieldCtx | None = None):
        self.p = p
        self.base = base
        self.modulus = tuple(modulus)
        if self.modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        self.degree = len(self.modulus) - 1
        self.base_order = p if base is None else base.order
        self.order = self.base_order**self.degree
        e = self.degree * (1 if base is None else base.pp.e)
        self.pp = PrimePower(p, e)

    # -- identity -----------------------------------------------------------

    @property
    def key(self) -> tuple:
        return (self.p, self.modulus, None if self.base is None else self.base.key)

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        over = f"GF({self.p})" if self.base is None else f"GF({self.base.order})"
        return f"FieldCtx(GF({self.order}) = {over}[T]/{self.modulus})"

    @property
    def q(self) -> int:
        return self.order

    # -- coefficient-field primitives -----------------------------------------

    def _b_add(self, a: int, b: int) -> int:
        return (a + b) % self.p if self.base is None else self.base.add(a, b)

    def _b_sub(self, a: int, b: int) -> int:
        return (a - b) % self.p if self.base is None else self.base.sub(a, b)

    def _b_mul(self, a: int, b: int) -> int:
        return a * b % self.p if self.base is None else self.base.mul(a, b)

    def _b_inv(self, a: int) -> int:
        if self.base is None:
            if a % self.p == 0:
                raise FieldDivisionByZero("inverse of 0")
            return pow(a, self.p - 2, self.p)
        return self.base.inv(a)

    def coeffs_of(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.degree):
            code, r = divmod(code, self.base_order)
            out.append(r)
        return tuple(out)

    def code_of(self, coeffs: Sequence[int]) -> int:
        code = 0
        for c in reversed(coeffs):
            code = code * self.base_order + c
        return code

    # -- scalar arithmetic on codes -----------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        res, pw = 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            res += (da + db) % p * pw
            pw *= p
        return res

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        res, pw = 0, 1
        while a:
            a, da = divmod(a, p)
            res += (-da) % p * pw
            pw *= p
        return res

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul_reference(self, a: int, b: int) -> int:
        """Schoolbook product of coefficient vectors reduced by the modulus."""
        d = self.degree
        ca, cb = self.coeffs_of(a), self.coeffs_of(b)
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    if y:
                        prod[i + j] = self._b_add(prod[i + j], self._b_mul(x, y))
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for j in range(d):
                    if self.modulus[j]:
                        prod[k - d + j] = self._b_sub(prod[k - d + j], self._b_mul(c, self.modulus[j]))
        return self.code_of(prod[:d])

    def _pow_reference(self, a: int, n: int) -> int:
        res = 1
        while n:
            if n & 1:
                res = self.mul_reference(res, a)
            a = self.mul_reference(a, a)
            n >>= 1
        return res

    @cached_property
    def _tables(self) -> tuple[list[int], list[int]]:
        Q = self.order
        if Q == 2:
            return [1], [0, 0]
        factors = _prime_factors(Q - 1)
        for g in range(2, Q):
            if all(self._pow_reference(g, (Q - 1) // r) != 1 for r in factors):
                break
        else:  # pragma: no cover - every finite field has a generator
            raise ArithmeticError("no primitive element found; modulus not irreducible?")
        exp = [1] * (Q - 1)
        for i in range(1, Q - 1):
            exp[i] = self.mul_reference(exp[i - 1], g)
        log = [0] * Q
        for i, x in enumerate(exp):
            log[x] = i
        if len(set(exp)) != Q - 1:
            raise ArithmeticError("multiplicative group is not cyclic of order q-1")
        return exp, log

    @cached_property
    def _np_tables(self) -> tuple[np.ndarray, np.ndarray]:
        exp, log = self._tables
        return np.asarray(exp, dtype=np.int64), np.asarray(log, dtype=np.int64)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        exp, log = self._tables
        return exp[(log[a] + log[b]) % (self.order - 1)]

    def pow(self, a: int, n: int) -> int:
        """a^n by square-and-multiply; 0^0 = 1."""
        if n < 0:
            return self.pow(self.inv(a), -n)
        res = 1
        while n:
            if n & 1:
                res = self.mul(res, a)
            a = self.mul(a, a)
            n >>= 1
        return res

    def inv(self, a: int) -> int:
        """Inverse via the extended Euclidean algorithm on coefficient vectors."""
        if a == 0:
            raise FieldDivisionByZero("inverse of 0")
        if self.degree == 1:
            return self._b_inv(a)
        # invariant: s * a == r (mod modulus)
        r0, r1 = list(self.modulus), list(self.coeffs_of(a))
        s0, s1 = [0], [1]
        _strip(r1)
        while len(r1) > 1:
            quo, rem = self._poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, self._poly_sub(s0, self._poly_mul(quo, s1))
        if not r1:
            raise ArithmeticError("modulus is not irreducible")
        c = self._b_inv(r1[0])
        res = [self._b_mul(c, x) for x in s1] + [0] * self.degree
        return self.code_of(res[: self.degree])

    def _poly_mul(self, a: list[int], b: list[int]) -> list[int]:
        if not a or not b:
            return []
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = self._b_add(out[i + j], self._b_mul(x, y))
        return _strip(out)

    def _poly_sub(self, a: list[int], b: list[int]) -> list[int]:
        n = max(len(a), len(b))
        a = a + [0] * (n - len(a))
        b = b + [0] * (n - len(b))
        return _strip([self._b_sub(x, y) for x, y in zip(a, b)])

    def _poly_divmod(self, a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
        rem = list(a)
        db = len(b) - 1
        inv_lead = self._b_inv(b[-1])
        quo = [0] * max(len(a) - db, 1)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c:
                c = self._b_mul(c, inv_lead)
                quo[k - db] = c
                for j in range(db + 1):
                    rem[k - db + j] = self._b_sub(rem[k - db + j], self._b_mul(c, b[j]))
        return _strip(quo), _strip(rem[:db])

    # -- vectorised arithmetic on numpy arrays of codes ---------------------

    @cached_property
    def _ndigits(self) -> int:
        return self.pp.e

    def add_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        p = self.p
        if p == 2:
            return np.bitwise_xor(a, b)
        res = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        pw = 1
        for _ in range(self._ndigits):
            res += ((a // pw) % p + (b // pw) % p) % p * pw
            pw *= p
        return res

    def neg_arr(self, a: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        p = self.p
        if p == 2:
            return a.copy()
        res = np.zeros_like(a)
        pw = 1
        for _ in range(self._ndigits):
            res += (-((a // pw) % p)) % p * pw
            pw *= p
        return res

    def sub_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.add_arr(a, self.neg_arr(b))

    def mul_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        exp, log = self._np_tables
        out = exp[(log[a] + log[b]) % (self.order - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def pow_arr(self, a: np.ndarray, n: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if n == 0:
            return np.ones_like(a)
        exp, log = self._np_tables
        out = exp[(log[a] * (n % (self.order - 1))) % (self.order - 1)]
        return np.where(a == 0, 0, out)

    def sum_arr(self, a: np.ndarray) -> int:
        """Field sum of all codes in a."""
        a = np.asarray(a, dtype=np.int64)
        p = self.p
        res, pw = 0, 1
        for _ in range(self._ndigits):
            res += int(((a // pw) % p).sum() % p) * pw
            pw *= p
        return res

    # -- elements -----------------------------------------------------------

    def element(self, code: int) -> FieldElement:
        if not 0 <= code < self.order:
            raise ValueError(f"code {code} outside [0, {self.order})")
        return FieldElement(self, self.coeffs_of(code))

    def from_coeffs(self, coeffs: Sequence[int]) -> FieldElement:
        return FieldElement(self, tuple(coeffs))

    @property
    def zero(self) -> FieldElement:
        return self.element(0)

    @property
    def one(self) -> FieldElement:
        return self.element(1)

    def scalar(self, k: int) -> FieldElement:
        """Image of the integer k in the prime subfield."""
        return self.element(k % self.p)

    def elements(self) -> Iterator[FieldElement]:
        for c in range(self.order):
            yield self.element(c)


def _strip(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


@dataclass(frozen=True, eq=False)
class FieldElement:
    ctx: FieldCtx
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.ctx.degree:
            raise ValueError(f"expected {self.ctx.degree} coefficients, got {len(self.coeffs)}")
        if any(not 0 <= c < self.ctx.base_order for c in self.coeffs):
            raise ValueError(f"coefficients {self.coeffs} not reduced")

    @property
    def code(self) -> int:
        return self.ctx.code_of(self.coeffs)

    def _check(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement) or other.ctx != self.ctx:
            raise ContextMismatch(f"{other!r} is not an element of {self.ctx!r}")

    def __eq__(self, other):
        return isinstance(other, FieldElement) and self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx.key, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return self.ctx.element(self.ctx.add(self.code, other.code))

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return self.ctx.element(self.ctx.sub(self.code, other.code))

    def __neg__(self) -> FieldElement:
        return self.ctx.element(self.ctx.neg(self.code))

    def __mul__(self, other: FieldElement) -> FieldElement:
        return field_mul(self.ctx, self, other)

    def __truediv__(self, other: FieldElement) -> FieldElement:
        return field_mul(self.ctx, self, field_inv(self.ctx, other))

    def __pow__(self, n: int) -> FieldElement:
        return field_pow(self.ctx, self, n)

    def __repr__(self):
        return f"GF({self.ctx.order})<{self.code}>"


# -- construction -------------------------------------------------------------


def _monic_candidates(order: int, degree: int) -> Iterator[tuple[int, ...]]:
    # itertools.product varies the last slot fastest, so tuples come out in
    # lexicographic order of (c_0, c_1, ..., c_{d-1}): low degree compared first
    for low in itertools.product(range(order), repeat=degree):
        yield low + (1,)


def is_irreducible_fp(coeffs: Sequence[int], p: int) -> bool:
    """Irreducibility over GF(p) by root search and trial division."""
    f = PolyFp(p, tuple(coeffs))
    d = f.degree
    if d < 1:
        return False
    if d == 1:
        return True
    if f[0] == 0:
        return False
    for k in range(1, d // 2 + 1):
        for g in _monic_candidates(p, k):
            if poly_divmod(f, PolyFp(p, g))[1].is_zero():
                return False
    return True


def smallest_irreducible_fp(p: int, e: int) -> tuple[int, ...]:
    if e == 1:
        return (0, 1)
    for cand in _monic_candidates(p, e):
        if is_irreducible_fp(cand, p):
            return cand
    raise ArithmeticError(f"no irreducible polynomial of degree {e} over GF({p})")  # pragma: no cover


def _spot_check(ctx: FieldCtx) -> None:
    step = max(1, (ctx.order - 1) // 7)
    for x in range(1, ctx.order, step):
        if ctx._pow_reference(x, ctx.order - 1) != 1:
            raise ArithmeticError(f"x^(q-1) != 1 for x={x} in {ctx!r}")


@lru_cache(maxsize=None)
def make_field_ctx(p: int, e: int, bound: int = DEFAULT_BOUND) -> FieldCtx:
    """GF(p^e) over GF(p) with the lexicographically smallest monic irreducible modulus."""
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if e < 1:
        raise ValueError(f"exponent e={e} must be >= 1")
    if p**e > bound:
        raise BoundExceeded(f"q = {p}^{e} = {p**e} exceeds bound {bound}")
    ctx = FieldCtx(p, smallest_irreducible_fp(p, e))
    _spot_check(ctx)
    return ctx


@lru_cache(maxsize=None)
def make_quadratic_extension(ctx_q: FieldCtx) -> FieldCtx:
    """GF(q^2) as GF(q)[T]/(T^2 + c1 T + c0), (c0, c1) lexicographically smallest."""
    q = ctx_q.order
    for c0, c1, _ in _monic_candidates(q, 2):
        # monic quadratic is irreducible iff it has no root in GF(q)
        if all(ctx_q.add(ctx_q.add(ctx_q.mul(x, x), ctx_q.mul(c1, x)), c0) != 0 for x in range(q)):
            ctx = FieldCtx(ctx_q.p, (c0, c1, 1), base=ctx_q)
            _spot_check(ctx)
            return ctx
    raise ArithmeticError("no irreducible quadratic found")  # pragma: no cover


@lru_cache(maxsize=None)
def field_pair(q: int, bound: int = DEFAULT_BOUND) -> tuple[FieldCtx, FieldCtx]:
    pp = PrimePower.from_q(q)
    ctx_q = make_field_ctx(pp.p, pp.e, bound)
    return ctx_q, make_quadratic_extension(ctx_q)


# -- element-level operations -------------------------------------------------


def _require(ctx: FieldCtx, *elems: FieldElement) -> None:
    for a in elems:
        if not isinstance(a, FieldElement) or a.ctx != ctx:
            raise ContextMismatch(f"{a!r} is not an element of {ctx!r}")


def field_add(ctx: FieldCtx, a: FieldElement, b: FieldElement) -> FieldElement:
    _require(ctx, a, b)
    return ctx.element(ctx.add(a.code, b.code))


def field_mul(ctx: FieldCtx, a: FieldElement, b: FieldElement) -> FieldElement:
    _require(ctx, a, b)
    return ctx.element(ctx.mul(a.code, b.code))


def field_inv(ctx: FieldCtx, a: FieldElement) -> FieldElement:
    _require(ctx, a)
    return ctx.element(ctx.inv(a.code))


def field_pow(ctx: FieldCtx, a: FieldElement, n: int) -> FieldElement:
    _require(ctx, a)
    if n < 0:
        raise ValueError("negative exponent; use field_inv first")
    return ctx.element(ctx.pow(a.code, n))


def enumerate_elements(ctx: FieldCtx) -> list[FieldElement]:
    return list(ctx.elements())


def lift_to_quadratic(ctx_q: FieldCtx, ctx_q2: FieldCtx, a: FieldElement) -> FieldElement:
    if ctx_q2.base != ctx_q or ctx_q2.degree != 2:
        raise ContextMismatch(f"{ctx_q2!r} is not a quadratic extension of {ctx_q!r}")
    _require(ctx_q, a)
    return ctx_q2.from_coeffs((a.code, 0))
