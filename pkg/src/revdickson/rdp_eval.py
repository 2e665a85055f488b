"""Point evaluation of the reversed Dickson polynomial d_n(a) = D_n(1, a).

Every a in GF(q) can be written a = x(1 - x) with x in GF(q^2), because
x^2 - x + a splits there.  Then d_n(a) = x^n + (1 - x)^n, which costs
O(log n) multiplications instead of the O(n) three-term recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .errors import ContextMismatch, RangeError, ResultNotInBaseField
from .gf_tower import FieldCtx, FieldElement, field_pair


@dataclass(frozen=True, eq=False)
class PairTable:
    """For each a in GF(q) (indexed by code) one root x of x(1 - x) = a."""

    ctx_q: FieldCtx
    ctx_q2: FieldCtx
    roots: np.ndarray
    cofactors: np.ndarray  # 1 - x for each root

    @property
    def q(self) -> int:
        return self.ctx_q.order

    def __len__(self):
        return len(self.roots)

    def root(self, a: FieldElement) -> FieldElement:
        if a.ctx != self.ctx_q:
            raise ContextMismatch(f"{a!r} is not in {self.ctx_q!r}")
        return self.ctx_q2.element(int(self.roots[a.code]))


def build_pair_table(ctx_q: FieldCtx, ctx_q2: FieldCtx) -> PairTable:
    if ctx_q2.base != ctx_q or ctx_q2.degree != 2:
        raise ContextMismatch(f"{ctx_q2!r} is not a quadratic extension of {ctx_q!r}")
    xs = np.arange(ctx_q2.order, dtype=np.int64)
    one_minus = ctx_q2.sub_arr(np.ones_like(xs), xs)
    a = ctx_q2.mul_arr(xs, one_minus)
    # only x with x(1-x) in the base field are roots for some a in GF(q)
    a = np.where(a < ctx_q.order, a, ctx_q.order)
    # np.unique returns the first index of each value: first root in code order
    vals, first = np.unique(a, return_index=True)
    if len(vals) < ctx_q.order or vals[ctx_q.order - 1] != ctx_q.order - 1:
        raise ArithmeticError("x(1-x) does not cover GF(q)")
    first = first[: ctx_q.order]
    return PairTable(ctx_q, ctx_q2, xs[first], one_minus[first])


@lru_cache(maxsize=None)
def pair_table_for(q: int) -> PairTable:
    return build_pair_table(*field_pair(q))


def d_eval(table: PairTable, n: int, a: FieldElement) -> FieldElement:
    """d_n(a) via x^n + (1 - x)^n in GF(q^2)."""
    if n < 0:
        raise RangeError(f"n={n} must be >= 0")
    ctx_q, ctx_q2 = table.ctx_q, table.ctx_q2
    if a.ctx != ctx_q:
        raise ContextMismatch(f"{a!r} is not in {ctx_q!r}")
    if n == 0:
        return ctx_q.scalar(2)
    x = int(table.roots[a.code])
    y = int(table.cofactors[a.code])
    val = ctx_q2.add(ctx_q2.pow(x, n), ctx_q2.pow(y, n))
    if val >= ctx_q.order:
        raise ResultNotInBaseField(f"d_{n}({a.code}) = {val} not in GF({ctx_q.order})")
    return ctx_q.element(val)


def d_values(table: PairTable, n: int) -> np.ndarray:
    """Codes of d_n(a) for all a in GF(q), indexed by the code of a."""
    if n < 0:
        raise RangeError(f"n={n} must be >= 0")
    if n == 0:
        return np.full(table.q, 2 % table.ctx_q.p, dtype=np.int64)
    c2 = table.ctx_q2
    vals = c2.add_arr(c2.pow_arr(table.roots, n), c2.pow_arr(table.cofactors, n))
    if vals.max() >= table.q:
        raise ResultNotInBaseField(f"d_{n} left GF({table.q})")
    return vals


def d_sequence_slow(ctx_q: FieldCtx, a: FieldElement, n_max: int) -> Iterator[FieldElement]:
    """d_0(a), d_1(a), ..., d_{n_max}(a) by d_n = d_{n-1} - a d_{n-2}."""
    if a.ctx != ctx_q:
        raise ContextMismatch(f"{a!r} is not in {ctx_q!r}")
    prev, cur = ctx_q.scalar(2).code, 1
    yield ctx_q.element(prev)
    if n_max >= 1:
        yield ctx_q.element(cur)
    for _ in range(n_max - 1):
        prev, cur = cur, ctx_q.sub(cur, ctx_q.mul(a.code, prev))
        yield ctx_q.element(cur)


def d_eval_slow(ctx_q: FieldCtx, n: int, a: FieldElement) -> FieldElement:
    if n < 0:
        raise RangeError(f"n={n} must be >= 0")
    for val in d_sequence_slow(ctx_q, a, n):
        pass
    return val


def reduce_index(n: int, q: int) -> int:
    """Representative of n in [1, q^2 - 1]; d_n is (q^2 - 1)-periodic for n >= 1."""
    if n < 1:
        raise RangeError(f"n={n} must be >= 1")
    return (n - 1) % (q * q - 1) + 1


def cube_identity_residual(table: PairTable, n: int, a: FieldElement) -> FieldElement:
    """d_n(a)^3 - d_{3n}(a) - 3 a^n d_n(a); identically zero."""
    if n < 1:
        raise RangeError(f"n={n} must be >= 1")
    ctx = table.ctx_q
    dn = d_eval(table, n, a)
    d3n = d_eval(table, reduce_index(3 * n, table.q), a)
    return dn**3 - d3n - ctx.scalar(3) * a**n * dn
