"""Command-line front end.

Exit codes: 0 all verified, 1 counterexample found, 2 usage or parse error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import comb

from .errors import ParseError, ResourceLimitError
from .exact import parse_poly_list
from .shlie import StructureTable, structure_constants_kN, witt_table
from .verify import SUITES, SuiteParams, run_suite, wronskian_cross_checked

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

DEFAULT_MAX_TUPLES = 200_000


def _dump_json(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def render_table(table: StructureTable, fmt: str) -> str:
    if fmt == "json":
        return _dump_json(table.to_dict())
    rows = table.rows()
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["algebra", "N", "args", "result", "coeff"])
        for r in rows:
            result = "" if r["result"] is None else r["result"]
            writer.writerow([table.algebra, table.n, " ".join(map(str, r["args"])), result, r["coeff"]])
        return buf.getvalue()
    lines = []
    for r in rows:
        args = ", ".join(f"a({i})" for i in r["args"])
        rhs = "0" if r["coeff"] == "0" else f"{r['coeff']}*a({r['result']})"
        lines.append(f"[{args}] = {rhs}")
    return "\n".join(lines) + "\n"


def cmd_wronskian(args) -> int:
    try:
        polys = parse_poly_list(args.polys)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not polys:
        print("need at least one polynomial", file=sys.stderr)
        return EXIT_USAGE
    if len(polys) > args.max_arity:
        print(f"{len(polys)} arguments exceeds --max-arity {args.max_arity}", file=sys.stderr)
        return EXIT_RESOURCE
    w, verified = wronskian_cross_checked(polys)
    if (args.format or "text") == "json":
        text = _dump_json(
            {
                "operation": "wronskian",
                "inputs": [str(p) for p in polys],
                "output": str(w),
                "verified": verified,
            }
        )
    else:
        text = f"{w}\n"
    _emit(text, args.out)
    return EXIT_OK if verified else EXIT_FAIL


def cmd_tables(args) -> int:
    if args.N < 1:
        print("N must be positive", file=sys.stderr)
        return EXIT_USAGE
    if args.N > args.max_arity:
        print(f"N={args.N} exceeds --max-arity {args.max_arity}", file=sys.stderr)
        return EXIT_RESOURCE
    if args.algebra == "kN":
        table = structure_constants_kN(args.N)
    else:
        lo, hi = args.range
        if lo > hi:
            print("empty index range", file=sys.stderr)
            return EXIT_USAGE
        count = comb(hi - lo + 1, args.N)
        if count > args.max_tuples:
            print(f"{count} tuples exceeds --max-tuples {args.max_tuples}", file=sys.stderr)
            return EXIT_RESOURCE
        table = witt_table(args.N, lo, hi)
    _emit(render_table(table, args.format or "json"), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    params = SuiteParams(
        seed=args.seed,
        degree_bound=args.degree_bound,
        max_arity=args.max_arity,
        samples=args.samples,
        k=args.k,
        l=args.l,
    )
    try:
        report = run_suite(args.suite, params)
    except ResourceLimitError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    data = report.to_dict()
    if (args.format or "json") == "json":
        text = _dump_json(data)
    else:
        status = "PASS" if report.passed else "FAIL"
        text = f"{status} {report.name}: {report.checks} checks, {len(report.failures)} failures\n"
        for key, part in data.get("summary", {}).items():
            mark = "PASS" if part["passed"] else "FAIL"
            text += f"  {mark} {key}: {part['checks']} checks\n"
    _emit(text, args.out)
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--degree-bound", type=int, default=None)
    common.add_argument("--max-arity", type=int, default=8)
    common.add_argument("--max-tuples", type=int, default=DEFAULT_MAX_TUPLES)
    common.add_argument("--out", metavar="FILE", default=None)

    parser = argparse.ArgumentParser(
        prog="wronskian-brackets",
        description="Wronskian N-ary brackets: tables, identity checks, single computations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wronskian", parents=[common], help="Wronskian of a list of polynomials")
    p.add_argument("polys", help='comma-separated polynomials, e.g. "1, x, x^2/2"')
    p.set_defaults(func=cmd_wronskian)

    p = sub.add_parser("tables", parents=[common], help="structure constant tables")
    p.add_argument("algebra", choices=["kN", "witt"])
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--range", type=int, nargs=2, metavar=("LO", "HI"), default=(-5, 5))
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", parents=[common], help="run an identity-verification suite")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
