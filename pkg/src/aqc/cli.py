"""Command line front end.

Exit codes: 0 success, 1 a verification or route-agreement failure,
2 bad usage (argparse errors and invalid parameter values).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import counts, oracle, permanent, verify
from .errors import ConsistencyError, EnumerationLimitError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _lengths(text: str) -> tuple[int, ...]:
    try:
        return counts.validate_lengths(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _plain_table(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    cells = [[str(c) for c in header]] + [[str(c) for c in r] for r in rows]
    ncol = max(len(r) for r in cells)
    widths = [max(len(r[i]) for r in cells if i < len(r)) for i in range(ncol)]
    return "\n".join(" ".join(c.rjust(widths[i]) for i, c in enumerate(r)) for r in cells)


def _csv(rows: Sequence[Sequence[object]], header=("n", "k", "value")) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def cmd_triangle(args) -> int:
    table = counts.count_table(args.n, args.q)
    rows = [list(r) for r in table.rows]
    if args.k is not None:
        rows = [[table[n, args.k]] for n in range(args.n + 1)]
    if args.format == "json":
        print(json.dumps({"q": args.q, "rows": rows}))
    elif args.format == "csv":
        print(_csv([(n, k if args.k is None else args.k, v)
                    for n, row in enumerate(rows) for k, v in enumerate(row)]))
    else:
        width = max(len(r) for r in rows)
        header = ["n"] + ([f"k={args.k}"] if args.k is not None
                          else [f"k={k}" for k in range(width)])
        print(_plain_table(header, [[n] + row for n, row in enumerate(rows)]))
    return EXIT_OK


def cmd_free(args) -> int:
    formula = [counts.count_free(n, args.q) for n in range(args.n + 1)]
    if args.method == "formula":
        values = formula
    else:
        values = counts.free_sequence(args.n, args.q)
        if args.method == "both" and values != formula:
            bad = next(i for i, (a, b) in enumerate(zip(values, formula)) if a != b)
            print(f"routes disagree at n={bad}: recurrence {values[bad]}, formula {formula[bad]}",
                  file=sys.stderr)
            return EXIT_FAIL
    if args.format == "json":
        print(json.dumps({"q": args.q, "method": args.method, "values": values}))
    elif args.format == "csv":
        print(_csv([(n, 0, v) for n, v in enumerate(values)]))
    else:
        print(",".join(map(str, values)))
    return EXIT_OK


def cmd_multi(args) -> int:
    dist = counts.multi_distribution(args.n, args.lengths)
    if args.check_oracle:
        want = oracle.oracle_multi(args.n, args.lengths)
        if want != dist:
            bad = sorted(set(want) | set(dist))
            bad = [ks for ks in bad if want.get(ks, 0) != dist.get(ks, 0)]
            print(f"formula and enumeration disagree at ks={bad[0]}: "
                  f"{dist.get(bad[0], 0)} vs {want.get(bad[0], 0)}", file=sys.stderr)
            return EXIT_FAIL
    items = sorted(dist.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    if args.format == "json":
        print(json.dumps({"n": args.n, "lengths": list(args.lengths),
                          "terms": [{"ks": list(ks), "value": v} for ks, v in items]}))
    elif args.format == "csv":
        print(_csv([(args.n, " ".join(map(str, ks)), v) for ks, v in items]))
    else:
        header = [f"k{q}" for q in args.lengths] + ["value"]
        print(_plain_table(header, [list(ks) + [v] for ks, v in items]))
    if args.check_oracle and args.format == "plain":
        print("oracle: agree")
    return EXIT_OK


def cmd_permpoly(args) -> int:
    if args.lengths is not None:
        p = permanent.multi_generating_polynomial(args.n, args.lengths)
        order = [permanent.family_name(q) for q in args.lengths]
        names = order
    elif args.q is not None:
        p = permanent.generating_polynomial(args.n, args.q)
        order = names = ["x"]
    else:
        p = permanent.rencontres_polynomial(args.n)
        order = names = ["x"]
    if args.format == "json":
        terms = [{"ks": list(ks), "value": v}
                 for ks, v in sorted(permanent.distribution_from_poly(p, names).items())]
        print(json.dumps({"n": args.n, "variables": names, "terms": terms}))
    elif args.format == "csv":
        dist = permanent.distribution_from_poly(p, names)
        print(_csv([(args.n, " ".join(map(str, ks)), v) for ks, v in sorted(dist.items())]))
    else:
        print(p.to_str(order))
    return EXIT_OK


def cmd_verify(args) -> int:
    results = verify.run_scope(args.scope, n_max=args.n_max, q_max=args.q_max, order=args.order)
    for r in results:
        print(r.line())
    failed = sum(not r.ok for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aqc", description="Counts of permutations by adjacent q-cycles.")
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = dict(choices=("plain", "csv", "json"), default="plain")

    p = sub.add_parser("triangle", help="rows n = 0..N of a(n, k) for one q")
    p.add_argument("--q", type=_positive, required=True)
    p.add_argument("--n", type=_nonneg, required=True, help="last row")
    p.add_argument("--k", type=_nonneg, help="only this column")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("free", help="b_0..b_N, permutations with no adjacent q-cycle")
    p.add_argument("--q", type=_positive, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--method", choices=("formula", "recurrence", "both"), default="formula")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_free)

    p = sub.add_parser("multi", help="joint distribution for several cycle lengths")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--lengths", type=_lengths, required=True, metavar="a,b,c")
    p.add_argument("--check-oracle", action="store_true",
                   help="also enumerate S_n and compare key by key")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_multi)

    p = sub.add_parser("permpoly", help="generating polynomial from a marked-matrix permanent")
    p.add_argument("--n", type=_nonneg, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--q", type=_positive)
    group.add_argument("--lengths", type=_lengths, metavar="a,b,c")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_permpoly)

    p = sub.add_parser("verify", help="run cross-route consistency checks")
    p.add_argument("--scope", choices=verify.SCOPES + ("all",), default="all")
    p.add_argument("--n-max", type=_nonneg)
    p.add_argument("--q-max", type=_positive)
    p.add_argument("--order", type=_nonneg)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConsistencyError as exc:
        print(f"aqc {args.command}: consistency failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ValueError, EnumerationLimitError) as exc:
        print(f"aqc {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
