"""Command-line interface.

Subcommands: ``entry`` (one value by any method, or all of them), ``row``
and ``column`` (sequences from the recurrence table), ``series`` (raw
coefficients of the named generating functions F, C, B, L<j>) and ``check``
(the one-shot cross-method verification report).

Values go to stdout as exact decimal strings, diagnostics go to stderr.
Exit codes: 0 all good, 1 mathematical disagreement or failed check,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from .checks import run_all
from .closedforms import entry_convolved, entry_triple_sum
from .paths import DEFAULT_CAP, count_by_height
from .rhombus import build_table
from .series import catalan_gf, column_gf, fibonacci_gf, motzkin2_gf

METHODS = ("recurrence", "triple_sum", "convolved", "series", "oracle", "all")
FORMATS = ("plain", "json", "csv")

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _emit_sequence(values: list[int], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(values)
    if fmt == "csv":
        return "\n".join(str(v) for v in values)
    return ",".join(str(v) for v in values)


def _entry_one(i: int, j: int, method: str, order: int, oracle_cap: int) -> int:
    if method == "recurrence":
        return build_table(i).entry(i, j)
    if method == "triple_sum":
        return entry_triple_sum(i, j)
    if method == "convolved":
        return entry_convolved(i, j)
    if method == "series":
        if i >= order:
            raise UsageError(
                f"series method keeps {order} coefficients, cannot read index {i}; "
                f"raise --order to at least {i + 1}"
            )
        return column_gf(abs(j), order).integer_coefficients()[i]
    if method == "oracle":
        if i > oracle_cap:
            raise UsageError(
                f"the exhaustive oracle is capped at length {oracle_cap}, got {i}; "
                "raise --oracle-cap knowingly (cost grows exponentially)"
            )
        return count_by_height(i, cap=oracle_cap).get(j, 0)
    raise UsageError(f"unknown method {method!r}")


def _cmd_entry(args: argparse.Namespace) -> int:
    i, j = args.i, args.j
    if i < 0:
        raise UsageError(f"row index must be >= 0, got {i}")
    if args.method != "all":
        value = _entry_one(i, j, args.method, args.order, args.oracle_cap)
        print(value if args.format != "json" else json.dumps(value))
        return EXIT_OK

    values: dict[str, int] = {}
    for method in ("recurrence", "triple_sum", "convolved", "series", "oracle"):
        if method == "series" and i >= args.order:
            print(f"skipping series method (index {i} >= order {args.order})", file=sys.stderr)
            continue
        if method == "oracle" and i > args.oracle_cap:
            print(f"skipping oracle method (length {i} > cap {args.oracle_cap})", file=sys.stderr)
            continue
        values[method] = _entry_one(i, j, method, args.order, args.oracle_cap)

    if args.format == "json":
        print(json.dumps(list(values.values())))
    else:
        print("\n".join(str(v) for v in values.values()))
    if len(set(values.values())) != 1:
        print(
            f"methods disagree at (i={i}, j={j}): "
            + ", ".join(f"{k}={v}" for k, v in values.items()),
            file=sys.stderr,
        )
        return EXIT_DISAGREEMENT
    return EXIT_OK


def _cmd_row(args: argparse.Namespace) -> int:
    if args.i < 0:
        raise UsageError(f"row index must be >= 0, got {args.i}")
    print(_emit_sequence(build_table(args.i).row(args.i), args.format))
    return EXIT_OK


def _cmd_column(args: argparse.Namespace) -> int:
    if args.terms < 1:
        raise UsageError(f"--terms must be >= 1, got {args.terms}")
    depth = abs(args.j) + args.terms - 1
    values = build_table(depth).column(args.j)
    print(_emit_sequence(values, args.format))
    return EXIT_OK


def _cmd_series(args: argparse.Namespace) -> int:
    name = args.name
    if name == "F":
        s = fibonacci_gf(args.order)
    elif name == "C":
        s = catalan_gf(args.order)
    elif name == "B":
        s = motzkin2_gf(args.order)
    else:
        match = re.fullmatch(r"L(-?\d+)", name)
        if not match:
            raise UsageError(f"unknown series {name!r}; expected F, C, B or L<j>")
        s = column_gf(abs(int(match.group(1))), args.order)
    print(_emit_sequence(s.integer_coefficients(), args.format))
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    if args.max_i < 1 or args.order < 1:
        raise UsageError("--max-i and --order must be positive")
    if args.max_oracle_n < 0:
        raise UsageError(f"--max-oracle-n must be >= 0, got {args.max_oracle_n}")
    results = run_all(
        max_i=args.max_i,
        max_oracle_n=args.max_oracle_n,
        series_order=args.order,
        oracle_cap=args.oracle_cap,
    )
    # each suite's lines are assembled before printing, so the report can
    # never interleave even if suites are one day run concurrently
    for res in results:
        line = f"{res.status:7s} {res.name}"
        if res.detail:
            line += f": {res.detail}"
        print(line)
    failed = [r for r in results if not r.skipped and not r.passed]
    return EXIT_DISAGREEMENT if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pascal-rhombus",
        description="Pascal rhombus entries by five independent exact methods.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=FORMATS, default="plain")

    p_entry = sub.add_parser("entry", help="one entry r[i][j]")
    p_entry.add_argument("i", type=int)
    p_entry.add_argument("j", type=int)
    p_entry.add_argument("--method", choices=METHODS, default="recurrence")
    p_entry.add_argument("--order", type=int, default=30,
                         help="series truncation order for the series method")
    p_entry.add_argument("--oracle-cap", type=int, default=DEFAULT_CAP,
                         help="refuse exhaustive enumeration beyond this length")
    add_format(p_entry)
    p_entry.set_defaults(func=_cmd_entry)

    p_row = sub.add_parser("row", help="one full row of the table")
    p_row.add_argument("i", type=int)
    add_format(p_row)
    p_row.set_defaults(func=_cmd_row)

    p_col = sub.add_parser("column", help="a column of the table, top down")
    p_col.add_argument("j", type=int)
    p_col.add_argument("--terms", type=int, default=10)
    add_format(p_col)
    p_col.set_defaults(func=_cmd_column)

    p_series = sub.add_parser("series", help="coefficients of F, C, B or L<j>")
    p_series.add_argument("name")
    p_series.add_argument("--order", type=int, default=30)
    add_format(p_series)
    p_series.set_defaults(func=_cmd_series)

    p_check = sub.add_parser("check", help="run the full consistency check")
    p_check.add_argument("--max-i", type=int, default=40)
    p_check.add_argument("--max-oracle-n", type=int, default=12)
    p_check.add_argument("--order", type=int, default=30)
    p_check.add_argument("--oracle-cap", type=int, default=DEFAULT_CAP)
    p_check.set_defaults(func=_cmd_check)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
