"""Batch command-line interface.

Commands: count, verify, pairs, trace, series.  Output formats: table
(human-readable; partitions in parenthesized exponent notation so printed
chains can be diffed verbatim), tsv (header row, LF endings), json (UTF-8,
stable key order).

Exit codes: 0 success / all identity rows pass; 1 at least one identity row
failed; 2 usage or domain errors.
"""

import argparse
import json
import sys

from . import counting, maps, series
from .partition import DomainError, ParseError, format_partition, parse_partition

__all__ = ["main", "entrypoint", "build_parser"]


def _paren(p) -> str:
    lit = format_partition(p)
    return lit if lit == "()" else f"({lit})"


def _bool(flag: bool) -> str:
    return "true" if flag else "false"


def _print_tsv(headers, rows) -> None:
    print("\t".join(headers))
    for row in rows:
        print("\t".join(str(cell) for cell in row))


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regpart",
        description="Exact counting, identity verification, and constructive maps "
                    "for regular partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    fmt_kwargs = dict(choices=("table", "tsv", "json"), default="table",
                      help="output format (default: table)")

    p_count = sub.add_parser("count", help="counting table for one statistic")
    p_count.add_argument("--stat", required=True, choices=counting.STAT_NAMES)
    p_count.add_argument("--ell", type=int)
    p_count.add_argument("--r", type=int)
    p_count.add_argument("--n", type=int, help="single n")
    p_count.add_argument("--max-n", type=int, dest="max_n", help="table for n = 0..max-n")
    p_count.add_argument("--method", choices=counting.METHOD_NAMES, default="enum")
    p_count.add_argument("--format", **fmt_kwargs)

    p_verify = sub.add_parser("verify", help="verify one identity over a range of n")
    p_verify.add_argument("--theorem", required=True,
                          choices=("t1", "t2", "t3", "euler", "hickerson", "parity"))
    p_verify.add_argument("--ell", type=int)
    p_verify.add_argument("--r", type=int)
    p_verify.add_argument("--max-n", type=int, dest="max_n", default=40)
    p_verify.add_argument("--format", **fmt_kwargs)

    p_pairs = sub.add_parser("pairs", help="involution pairs and fixed points of one n")
    p_pairs.add_argument("--ell", type=int, required=True)
    p_pairs.add_argument("--n", type=int, required=True)
    p_pairs.add_argument("--format", **fmt_kwargs)

    p_trace = sub.add_parser("trace", help="apply one constructive map and show the steps")
    p_trace.add_argument("--map", required=True, dest="map_name",
                         choices=("psi", "sigma", "sigma-inv", "glaisher", "glaisher-inv"))
    p_trace.add_argument("--ell", type=int)
    p_trace.add_argument("--r", type=int)
    p_trace.add_argument("--partition", required=True)
    p_trace.add_argument("--format", **fmt_kwargs)

    p_series = sub.add_parser("series", help="dump generating-function coefficients")
    p_series.add_argument("--kind", required=True, choices=series.GF_KINDS)
    p_series.add_argument("--ell", type=int)
    p_series.add_argument("--r", type=int)
    p_series.add_argument("--max-n", type=int, dest="max_n", required=True,
                          help="truncation order")
    p_series.add_argument("--format", **fmt_kwargs)

    return parser


def _require(value, flag: str, context: str):
    if value is None:
        raise ValueError(f"{context} needs {flag}")
    return value


def _cmd_count(args) -> int:
    if (args.n is None) == (args.max_n is None):
        raise ValueError("count needs exactly one of --n or --max-n")
    if args.n is not None:
        value = counting.count(args.stat, args.n, ell=args.ell, r=args.r,
                               method=args.method)
        rows = [(args.n, value)]
    else:
        values = counting.count_range(args.stat, args.max_n, ell=args.ell,
                                      r=args.r, method=args.method)
        rows = list(enumerate(values))
    param = args.ell if args.stat in ("b", "be", "bo", "d", "c") else args.r
    label = f"{args.stat}_{param}(n)"
    if args.format == "table":
        width = max(len(str(rows[-1][0])), 1)
        print(f"{'n':>{width}}  {label}")
        for n, value in rows:
            print(f"{n:>{width}}  {value}")
    elif args.format == "tsv":
        _print_tsv(("n", "value"), rows)
    else:
        _print_json({
            "command": "count",
            "stat": args.stat,
            "ell": args.ell,
            "r": args.r,
            "method": args.method,
            "rows": [{"n": n, "value": value} for n, value in rows],
        })
    return 0


def _cmd_verify(args) -> int:
    tag = args.theorem
    if tag == "parity":
        report = counting.verify_parity(_require(args.ell, "--ell", "parity"), args.max_n)
    elif tag in ("t1", "t2"):
        report = counting.verify_identity(tag, _require(args.ell, "--ell", tag), args.max_n)
    elif tag == "t3":
        report = counting.verify_identity(tag, _require(args.r, "--r", "t3"), args.max_n)
    else:
        report = counting.verify_identity(tag, max_n=args.max_n)
    if args.format == "table":
        width = max(len(str(report.max_n)), 1)
        print(f"{'n':>{width}}  {'lhs':>6}  {'rhs':>6}  ok")
        for row in report.rows:
            print(f"{row.n:>{width}}  {row.lhs:>6}  {row.rhs:>6}  {_bool(row.ok)}")
        verdict = "PASS" if report.all_pass else "FAIL"
        good = sum(1 for row in report.rows if row.ok)
        print(f"result: {verdict} ({good}/{len(report.rows)} rows)")
    elif args.format == "tsv":
        _print_tsv(("n", "lhs", "rhs", "pass"),
                   [(row.n, row.lhs, row.rhs, _bool(row.ok)) for row in report.rows])
    else:
        _print_json({
            "command": "verify",
            "theorem": report.tag,
            "param": report.param,
            "max_n": report.max_n,
            "rows": [{"n": row.n, "lhs": row.lhs, "rhs": row.rhs, "pass": row.ok}
                     for row in report.rows],
            "summary": {
                "all_pass": report.all_pass,
                "rows": len(report.rows),
                "failed": len(report.failures),
            },
        })
    return 0 if report.all_pass else 1


def _cmd_pairs(args) -> int:
    table = counting.pair_table(args.ell, args.n)
    if args.format == "table":
        for left, right in table.pairs:
            print(f"{_paren(left)} <-> {_paren(right)}")
        for fp in table.fixed_points:
            print(f"fixed: {_paren(fp)}")
        print(f"pairs: {len(table.pairs)}, fixed points: {len(table.fixed_points)}")
    elif args.format == "tsv":
        rows = [("pair", format_partition(a), format_partition(b)) for a, b in table.pairs]
        rows += [("fixed", format_partition(fp), "") for fp in table.fixed_points]
        _print_tsv(("kind", "first", "second"), rows)
    else:
        _print_json({
            "command": "pairs",
            "ell": table.ell,
            "n": table.n,
            "pairs": [[format_partition(a), format_partition(b)] for a, b in table.pairs],
            "fixed_points": [format_partition(fp) for fp in table.fixed_points],
        })
    return 0


def _trace_dispatch(args):
    p = parse_partition(args.partition)
    name = args.map_name
    if name == "psi":
        result, case = maps.psi(p, _require(args.ell, "--ell", "psi"))
        return p, None, result, case
    if name == "sigma":
        _, trace = maps.sigma(p, _require(args.ell, "--ell", "sigma"))
    elif name == "sigma-inv":
        _, trace = maps.sigma_inv(p, _require(args.ell, "--ell", "sigma-inv"))
    elif name == "glaisher":
        _, trace = maps.glaisher_phi(p, _require(args.r, "--r", "glaisher"))
    else:
        _, trace = maps.glaisher_phi_inv(p, _require(args.r, "--r", "glaisher-inv"))
    return p, trace, trace.final, None


def _cmd_trace(args) -> int:
    initial, trace, final, case = _trace_dispatch(args)
    if args.format == "table":
        if case is not None:
            print(case.value)
            print(f"{_paren(initial)} -> {_paren(final)}")
        else:
            print(" -> ".join(_paren(q) for q in trace.chain()))
    elif args.format == "tsv":
        if case is not None:
            _print_tsv(("case", "initial", "final"),
                       [(case.value, format_partition(initial), format_partition(final))])
        else:
            rows = [(i + 1, step.action.value, ",".join(str(v) for v in step.parts),
                     format_partition(step.result))
                    for i, step in enumerate(trace.steps)]
            _print_tsv(("step", "action", "parts", "result"), rows)
    else:
        obj = {
            "command": "trace",
            "map": args.map_name,
            "ell": args.ell,
            "r": args.r,
            "initial": format_partition(initial),
        }
        if case is not None:
            obj["case"] = case.value
        else:
            obj["steps"] = [{
                "action": step.action.value,
                "parts": list(step.parts),
                "result": format_partition(step.result),
            } for step in trace.steps]
        obj["final"] = format_partition(final)
        _print_json(obj)
    return 0


def _cmd_series(args) -> int:
    ts = series.gf(args.kind, args.max_n, ell=args.ell, r=args.r)
    rows = list(enumerate(ts.coeffs))
    if args.format == "table":
        for n, coeff in rows:
            print(f"{n}\t{coeff}")
    elif args.format == "tsv":
        _print_tsv(("n", "coefficient"), rows)
    else:
        _print_json({
            "command": "series",
            "kind": args.kind,
            "ell": args.ell,
            "r": args.r,
            "order": ts.order,
            "coefficients": list(ts.coeffs),
        })
    return 0


_HANDLERS = {
    "count": _cmd_count,
    "verify": _cmd_verify,
    "pairs": _cmd_pairs,
    "trace": _cmd_trace,
    "series": _cmd_series,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits: 0 for --help, 2 for usage errors
        code = exc.code
        return 0 if code in (0, None) else int(code)
    try:
        return _HANDLERS[args.command](args)
    except (DomainError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
