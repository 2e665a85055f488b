"""Search for desirable pairs (q, n): d_n permutes GF(q).

Each n in [1, q^2 - 2] gets a tri-state verdict from the cube-sum
necessary conditions and, unless the filter already rules it out, a
brute-force occupancy check.  In verify mode brute force runs on every n
so that a filter rejecting a true permutation shows up in the records.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from math import gcd

import numpy as np

from .errors import RangeError
from .power_sums import (
    cube_sum_closed,
    even_filter_lhs,
    first_sum_at_triple,
    odd_parts,
    triple_index,
)
from .gf_tower import PrimePower
from .rdp_eval import d_values, pair_table_for


class Verdict(str, enum.Enum):
    PASS = "pass"
    FAIL_UV = "fail_uv"
    FAIL_IDENTITY = "fail_identity"
    NOT_APPLICABLE = "not_applicable"

    @property
    def failed(self) -> bool:
        return self in (Verdict.FAIL_UV, Verdict.FAIL_IDENTITY)

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SearchRecord:
    q: int
    n: int
    u: int
    v: int
    u_p: int
    v_p: int
    cube_sum: int
    filter_verdict: Verdict
    is_permutation: bool

    def as_row(self) -> dict:
        row = asdict(self)
        row["filter_verdict"] = self.filter_verdict.value
        return row


def is_permutation(q: int, n: int) -> bool:
    if not 1 <= n <= q * q - 1:
        raise RangeError(f"n={n} outside [1, {q * q - 1}]")
    vals = d_values(pair_table_for(q), n)
    return len(np.unique(vals)) == q


def filter_applicable(q: int) -> bool:
    return q > 4 if q % 2 == 0 else q > 3


def filter_pass(q: int, n: int, single_binomial: bool = False) -> Verdict:
    """Necessary condition for (q, n) to be desirable, from sum_a d_n(a)^3 = 0.

    ``single_binomial`` swaps in the collapsed even-q sum, which rejects
    some true permutations; it exists only to demonstrate that.
    """
    if not 1 <= n <= q * q - 1:
        raise RangeError(f"n={n} outside [1, {q * q - 1}]")
    if not filter_applicable(q):
        return Verdict.NOT_APPLICABLE
    u, v = n % q, n // q
    w = u + v
    k = q - 1
    rhs = first_sum_at_triple(q, n)
    if q % 2 == 0:
        if w % k == 0:
            return Verdict.FAIL_UV
        lhs = even_filter_lhs(q, n, single_binomial=single_binomial)
    else:
        if w == k:
            return Verdict.FAIL_UV
        if n == q * q - 1:
            # d_{q^2-1}(a) = a^(q-1) + 1 takes two values only
            return Verdict.FAIL_IDENTITY
        p = PrimePower.from_q(q).p
        parts = odd_parts(q, n)
        lhs = 3 * (parts.I + parts.II - parts.III) % p
    return Verdict.PASS if lhs == rhs else Verdict.FAIL_IDENTITY


def make_record(q: int, n: int, use_filter: bool = True, verify: bool = False) -> SearchRecord:
    u, v = n % q, n // q
    tp = triple_index(n, q)
    verdict = filter_pass(q, n)
    if use_filter and verdict.failed and not verify:
        perm = False
    else:
        perm = is_permutation(q, n)
    return SearchRecord(q, n, u, v, tp.u_p, tp.v_p, cube_sum_closed(q, n), verdict, perm)


def _records_chunk(args: tuple[int, list[int], bool, bool]) -> list[SearchRecord]:
    q, ns, use_filter, verify = args
    return [make_record(q, n, use_filter, verify) for n in ns]


def search_desirable(q: int, use_filter: bool = True, verify: bool = False, jobs: int = 1) -> list[SearchRecord]:
    """Records for n = 1 .. q^2 - 2, ordered by n.

    With ``use_filter`` brute force is skipped where the filter fails and
    is_permutation is then reported False (the filter is a necessary
    condition).  ``verify`` forces brute force everywhere.
    """
    PrimePower.from_q(q)
    ns = list(range(1, q * q - 1))
    if jobs <= 1:
        return _records_chunk((q, ns, use_filter, verify))
    size = max(1, len(ns) // (4 * jobs))
    chunks = [(q, ns[i : i + size], use_filter, verify) for i in range(0, len(ns), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves submission order, so the merge is by n
        return [rec for part in pool.map(_records_chunk, chunks) for rec in part]


def summarize(records: list[SearchRecord]) -> dict:
    if not records:
        return {"total": 0, "filter_pass": 0, "desirable": 0, "desirable_n": [], "unsound": []}
    q = records[0].q
    desirable = [r for r in records if r.is_permutation]
    return {
        "total": len(records),
        "filter_pass": sum(r.filter_verdict is Verdict.PASS for r in records),
        "filter_fail": sum(r.filter_verdict.failed for r in records),
        "desirable": len(desirable),
        "desirable_n": [r.n for r in desirable],
        "gcd_n_q2m1": {str(r.n): gcd(r.n, q * q - 1) for r in desirable},
        "unsound": [r.n for r in desirable if r.filter_verdict.failed],
    }
