"""Command line interface.

Exit codes: 0 success, 1 verification mismatch or counterexample, 2 usage error.
Field elements are printed as integer codes, residues as 0..p-1.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import __version__
from . import power_sums as ps
from .errors import RevDicksonError
from .gf_tower import DEFAULT_BOUND, PrimePower, field_pair
from .pp_search import search_desirable, summarize
from .rdp_eval import d_eval, d_values, pair_table_for
from .verify import SUITES, run_suites

SEARCH_COLUMNS = ["q", "n", "u", "v", "u_prime", "v_prime", "cube_sum", "filter_verdict", "is_permutation"]
SUM_COLUMNS = ["q", "n", "u", "v", "u_prime", "v_prime", "closed", "oracle", "match"]
EVAL_COLUMNS = ["a", "value"]
VERIFY_COLUMNS = ["suite", "q", "checked", "failed", "status"]

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- report I/O ------------------------------------------------------------------


def _csv_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render(records: list[dict], columns: list[str], meta: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"meta": meta, "records": records}, indent=2, sort_keys=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for rec in records:
            writer.writerow([_csv_value(rec[c]) for c in columns])
        return buf.getvalue()
    widths = {c: max([len(c)] + [len(_csv_value(r[c])) for r in records]) for c in columns}
    lines = ["  ".join(c.rjust(widths[c]) for c in columns)]
    for rec in records:
        lines.append("  ".join(_csv_value(rec[c]).rjust(widths[c]) for c in columns))
    return "\n".join(lines) + "\n"


def _parse_cell(s: str):
    if s == "true":
        return True
    if s == "false":
        return False
    try:
        return int(s)
    except ValueError:
        return s


def parse_report(text: str) -> dict:
    """Parse a JSON or CSV report produced by this tool into {"meta", "records"}."""
    if text.lstrip().startswith("{"):
        return json.loads(text)
    rows = list(csv.DictReader(io.StringIO(text)))
    return {"meta": {}, "records": [{k: _parse_cell(v) for k, v in row.items()} for row in rows]}


def read_report(path: str | Path) -> dict:
    return parse_report(Path(path).read_text())


def emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# -- argument helpers --------------------------------------------------------


def resolve_q(args) -> PrimePower:
    if args.q is None and (args.p is None or args.e is None):
        raise UsageError("give --q, or both --p and --e")
    try:
        pp = PrimePower(args.p, args.e) if args.p is not None and args.e is not None else None
        if args.q is not None:
            from_q = PrimePower.from_q(args.q)
            if pp is not None and pp != from_q:
                raise UsageError(f"--q {args.q} inconsistent with --p {args.p} --e {args.e}")
            pp = from_q
    except RevDicksonError as exc:
        raise UsageError(str(exc)) from exc
    if pp.q > DEFAULT_BOUND:
        raise UsageError(f"q = {pp.q} exceeds bound {DEFAULT_BOUND}")
    return pp


def parse_qset(text: str) -> list[int]:
    try:
        qs = [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --qset {text!r}") from exc
    if not qs:
        raise UsageError("--qset is empty")
    for q in qs:
        try:
            PrimePower.from_q(q)
        except RevDicksonError as exc:
            raise UsageError(str(exc)) from exc
        if q > DEFAULT_BOUND:
            raise UsageError(f"q = {q} exceeds bound {DEFAULT_BOUND}")
    return qs


def _meta(command: str, config: dict) -> dict:
    return {"version": __version__, "command": command, "config": config}


# -- commands ----------------------------------------------------------------


def run_eval(args) -> int:
    pp = resolve_q(args)
    q = pp.q
    if args.n is None or args.n < 0:
        raise UsageError("eval needs --n >= 0")
    table = pair_table_for(q)
    if args.a is not None:
        if not 0 <= args.a < q:
            raise UsageError(f"--a must be an element code in [0, {q})")
        records = [{"a": args.a, "value": d_eval(table, args.n, table.ctx_q.element(args.a)).code}]
    else:
        records = [{"a": a, "value": int(v)} for a, v in enumerate(d_values(table, args.n))]
    fmt = args.format or "text"
    if fmt == "text" and args.a is not None:
        text = f"{records[0]['value']}\n"
    else:
        text = render(records, EVAL_COLUMNS, _meta("eval", {"q": q, "n": args.n, "a": args.a}), fmt)
    emit(text, args.out)
    return EXIT_OK


def _closed_sum(q: int, n: int, power: int) -> int:
    if power == 1:
        return ps.sum_d_closed(q, n)
    if power == 3:
        if q % 2 and n == q * q - 1:
            raise UsageError(f"n = q^2-1 = {n} is outside closed-form range for odd q; use --method oracle")
        return ps.cube_sum_closed(q, n)
    raise UsageError(f"no closed form for power {power}; use --method oracle")


def run_sum(args) -> int:
    pp = resolve_q(args)
    q, n, power = pp.q, args.n, args.power
    if n is None or not 1 <= n <= q * q - 1:
        raise UsageError(f"sum needs 1 <= --n <= {q * q - 1}")
    if power not in (1, 2, 3):
        raise UsageError("--power must be 1, 2 or 3")
    ip, tp = ps.uv_decompose(n, q), ps.triple_index(n, q)
    closed = _closed_sum(q, n, power) if args.method in ("closed", "both") else None
    oracle = ps.power_sum_oracle(q, n, power) if args.method in ("oracle", "both") else None
    match = closed == oracle if args.method == "both" else None
    rec = {"q": q, "n": n, "u": ip.u, "v": ip.v, "u_prime": tp.u_p, "v_prime": tp.v_p,
           "closed": closed, "oracle": oracle, "match": match}
    config = {"q": q, "n": n, "power": power, "method": args.method}
    fmt = args.format or "json"
    if fmt == "json":
        text = json.dumps({"meta": _meta("sum", config), "records": [rec]}, indent=2) + "\n"
    else:
        shown = {k: ("" if v is None else v) for k, v in rec.items()}
        text = render([shown], SUM_COLUMNS, {}, fmt)
    emit(text, args.out)
    return EXIT_MISMATCH if match is False else EXIT_OK


def run_verify(args) -> int:
    qs = parse_qset(args.qset)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = run_suites(names, qs, jobs=args.jobs)
    records = [
        {"suite": r.suite, "q": r.q, "checked": r.checked, "failed": r.failed,
         "status": "pass" if r.ok else "fail"}
        for r in results
    ]
    fmt = args.format or "text"
    meta = _meta("verify", {"qset": qs, "suite": args.suite})
    meta["summary"] = {"checked": sum(r.checked for r in results), "failed": sum(r.failed for r in results)}
    if fmt == "text":
        lines = [f"{r['suite']:<11} q={r['q']:<4} checked={r['checked']:<7} failed={r['failed']:<4} {r['status'].upper()}"
                 for r in records]
        lines.append(f"total checked={meta['summary']['checked']} failed={meta['summary']['failed']}")
        text = "\n".join(lines) + "\n"
    else:
        text = render(records, VERIFY_COLUMNS, meta, fmt)
    emit(text, args.out)
    bad = [r for r in results if not r.ok]
    if bad:
        q, n, lhs, rhs = bad[0].counterexample
        print(f"counterexample [{bad[0].suite}]: (q, n, lhs, rhs) = ({q}, {n}, {lhs}, {rhs})", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def run_search(args) -> int:
    pp = resolve_q(args)
    q = pp.q
    use_filter = args.filters == "on"
    records = search_desirable(q, use_filter=use_filter, verify=args.verify, jobs=args.jobs)
    summary = summarize(records)
    rows = []
    for r in records:
        row = r.as_row()
        row["u_prime"], row["v_prime"] = row.pop("u_p"), row.pop("v_p")
        rows.append({c: row[c] for c in SEARCH_COLUMNS})
    meta = _meta("search", {"q": q, "filters": args.filters, "verify": args.verify})
    meta["summary"] = summary
    fmt = args.format or "csv"
    emit(render(rows, SEARCH_COLUMNS, meta, fmt), args.out)
    # stderr keeps piped stdout a clean report
    line = (f"summary: q={q} total={summary['total']} filter_pass={summary['filter_pass']} "
            f"desirable={summary['desirable']} n={summary['desirable_n']}")
    print(line, file=sys.stdout if args.out else sys.stderr)
    return EXIT_MISMATCH if summary["unsound"] else EXIT_OK


def run_field_info(args) -> int:
    pp = resolve_q(args)
    ctx_q, ctx_q2 = field_pair(pp.q)
    info = {
        "p": pp.p, "e": pp.e, "q": pp.q,
        "modulus": list(ctx_q.modulus),
        "quadratic_modulus": list(ctx_q2.modulus),
    }
    fmt = args.format or "text"
    if fmt == "json":
        text = json.dumps({"meta": _meta("field-info", {"q": pp.q}), "records": [info]}, indent=2) + "\n"
    elif fmt == "csv":
        text = "p,e,q,modulus,quadratic_modulus\n" + ",".join(
            [str(pp.p), str(pp.e), str(pp.q), " ".join(map(str, ctx_q.modulus)), " ".join(map(str, ctx_q2.modulus))]
        ) + "\n"
    else:
        text = (f"GF({pp.q}) = GF({pp.p})[T]/({_poly_str(ctx_q.modulus)})\n"
                f"GF({pp.q}^2) = GF({pp.q})[T]/({_poly_str(ctx_q2.modulus)})  [coefficients as codes]\n")
    emit(text, args.out)
    return EXIT_OK


def _poly_str(coeffs) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else ("T" if k == 1 else f"T^{k}")
        terms.append(str(c) if not mono else (mono if c == 1 else f"{c}*{mono}"))
    return " + ".join(terms)


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="revdickson", description="Reversed Dickson polynomial power sums over GF(q).")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_default=None):
        p.add_argument("--format", choices=["csv", "json", "text"], default=fmt_default)
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--jobs", type=int, default=1)

    def field_args(p):
        p.add_argument("--q", type=int)
        p.add_argument("--p", type=int)
        p.add_argument("--e", type=int)

    p_eval = sub.add_parser("eval", help="values d_n(a)")
    field_args(p_eval)
    p_eval.add_argument("--n", type=int)
    p_eval.add_argument("--a", type=int, help="element code; all of GF(q) if omitted")
    common(p_eval)
    p_eval.set_defaults(func=run_eval)

    p_sum = sub.add_parser("sum", help="power sum of d_n over GF(q)")
    field_args(p_sum)
    p_sum.add_argument("--n", type=int)
    p_sum.add_argument("--power", type=int, default=3)
    p_sum.add_argument("--method", choices=["closed", "oracle", "both"], default="both")
    common(p_sum)
    p_sum.set_defaults(func=run_sum)

    p_ver = sub.add_parser("verify", help="run invariant suites")
    p_ver.add_argument("--qset", required=True, help="comma-separated prime powers")
    p_ver.add_argument("--suite", choices=["all", *SUITES], default="all")
    common(p_ver)
    p_ver.set_defaults(func=run_verify)

    p_search = sub.add_parser("search", help="search desirable n for one q")
    field_args(p_search)
    p_search.add_argument("--filters", choices=["on", "off"], default="on")
    p_search.add_argument("--verify", action="store_true", help="brute-force every n, even filtered ones")
    common(p_search)
    p_search.set_defaults(func=run_search)

    p_info = sub.add_parser("field-info", help="field moduli in use")
    field_args(p_info)
    common(p_info)
    p_info.set_defaults(func=run_field_info)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    return EXIT_USAGE  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
