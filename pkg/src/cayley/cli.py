"""Command-line front end: ``table``, ``verify`` and ``series`` subcommands.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage or domain error.
Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections.abc import Sequence

from . import suites
from .errors import DomainError, InvariantViolation
from .recurrence import TreeCountTable, tree_count_closed
from .series import (
    RESIDUALS,
    FormalSeries,
    lagrange_invert,
    max_abs_coefficient,
    series_exp,
    tree_egf,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FORMATS = ("plain", "csv", "json")


class UsageError(Exception):
    pass


def render(rows: list[dict], fmt: str) -> str:
    """Render rows (dicts sharing keys) as an aligned table, csv, or json."""
    if fmt == "json":
        return json.dumps({"results": rows}, indent=2)
    cols = list(rows[0]) if rows else []
    cells = [[_cell(r[c]) for c in cols] for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        w.writerows(cells)
        return buf.getvalue().rstrip("\n")
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines)


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def cmd_table(max_n: int, fmt: str, table: TreeCountTable | None = None) -> tuple[int, str]:
    if max_n < 1:
        raise UsageError("--max must be >= 1")
    if table is None:
        table = TreeCountTable(max_n)
    elif max_n not in table:
        table.extend(max_n)
    rows, ok = [], True
    for n in range(1, max_n + 1):
        rec, closed = table[n], tree_count_closed(n)
        match = rec == closed
        ok &= match
        rows.append({"n": n, "recurrence": str(rec), "closed_form": str(closed),
                     "match": "ok" if match else "MISMATCH"})
    return (EXIT_OK if ok else EXIT_FAIL), render(rows, fmt)


def cmd_verify(suite: str, bound: int | None, fmt: str,
               table: TreeCountTable | None = None) -> tuple[int, str]:
    if suite not in suites.SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(suites.SUITES)}")
    if bound is None:
        bound = suites.DEFAULT_BOUNDS[suite]
    if bound < 1:
        raise UsageError("bound must be >= 1")
    try:
        reports = suites.SUITES[suite](bound, table)
    except DomainError as e:
        raise UsageError(str(e)) from e
    rows = [r.as_dict() for r in reports]
    for r in reports:
        if not r.passed:
            f = r.first_failure
            print(f"FAIL {r.identity}: first failure at index {f.index}: {f.lhs} != {f.rhs}",
                  file=sys.stderr)
    ok = all(r.passed for r in reports)
    return (EXIT_OK if ok else EXIT_FAIL), render(rows, fmt)


def cmd_series(order: int, what: str, fmt: str,
               table: TreeCountTable | None = None) -> tuple[int, str]:
    if not 1 <= order <= suites.SERIES_MAX_ORDER:
        raise UsageError(f"--order must be in 1..{suites.SERIES_MAX_ORDER}")
    if table is None:
        table = TreeCountTable(order)
    elif order not in table:
        table.extend(order)
    if what == "residuals":
        egf = tree_egf(order, table)
        rows = []
        for name, fn in RESIDUALS.items():
            res = fn(egf, table)
            m = max_abs_coefficient(res)
            rows.append({"residual": name, "order": res.order,
                         "max_abs_coefficient": str(m), "zero": m == 0})
        ok = all(r["zero"] for r in rows)
        return (EXIT_OK if ok else EXIT_FAIL), render(rows, fmt)
    if what == "egf":
        s = tree_egf(order, table)
    elif what == "lagrange":
        s = lagrange_invert(series_exp(FormalSeries.variable(order)), order)
    else:
        raise UsageError(f"unknown --what {what!r}")
    rows = [{"power": n, "coefficient": str(s[n])} for n in range(1, order + 1)]
    return EXIT_OK, render(rows, fmt)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayley-trees",
        description="Count labeled trees exactly and verify the identities behind n^(n-2).",
    )
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=FORMATS, default="plain",
                     help="output format (default: plain)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[fmt], help="T_n by recurrence next to n^(n-2)")
    p.add_argument("--max", type=int, required=True, dest="max_n")

    p = sub.add_parser("verify", parents=[fmt], help="run a verification suite")
    p.add_argument("suite", choices=list(suites.SUITES))
    g = p.add_mutually_exclusive_group()
    g.add_argument("--max", type=int, dest="bound", help="largest n checked")
    g.add_argument("--order", type=int, dest="bound", help="series order (series suite)")

    p = sub.add_parser("series", parents=[fmt], help="print series coefficients")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--what", choices=("egf", "lagrange", "residuals"), default="egf")
    return parser


def main(argv: Sequence[str] | None = None, table: TreeCountTable | None = None) -> int:
    """Entry point.  ``table`` substitutes precomputed T_n values (used by tests)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "table":
            code, out = cmd_table(args.max_n, args.format, table)
        elif args.command == "verify":
            code, out = cmd_verify(args.suite, args.bound, args.format, table)
        else:
            code, out = cmd_series(args.order, args.what, args.format, table)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as e:
        print(f"invariant violated: {e}", file=sys.stderr)
        return EXIT_FAIL
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
