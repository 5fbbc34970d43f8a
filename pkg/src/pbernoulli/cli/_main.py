import argparse
import json
import logging
from collections.abc import Sequence
from functools import partial
from typing import Optional

from pbernoulli._constants import EXIT_CODES, ROUTE_KEYS, SELECTOR_KEYS
from pbernoulli._settings import settings
from pbernoulli.bernoulli import (
    PBTable,
    egf_closed_form,
    pbernoulli_egf_route,
    pbernoulli_explicit,
    pbernoulli_table,
    pbernoulli_value,
    pbernoulli_via_stirling1,
)
from pbernoulli.harness import run_suite
from pbernoulli.numerics import factorial, render_rational
from pbernoulli.triangles import get_triangle

from ._render import render_records, render_reports, render_table

logger = logging.getLogger(__name__)

FORMATS = ("plain", "json", "csv")
TRIANGLES = {"stirling2": "stirling2", "stirling1": "stirling1_unsigned"}


def _route_table(nmax: int, pmax: int, method: str, order: int) -> PBTable:
    if nmax < 0 or pmax < 0:
        raise ValueError(f"nmax and pmax must be natural, got nmax={nmax}, pmax={pmax}.")
    if method == ROUTE_KEYS.RECURRENCE:
        return pbernoulli_table(nmax, pmax)
    if method == ROUTE_KEYS.EXPLICIT:
        value = pbernoulli_explicit
    elif method == ROUTE_KEYS.STIRLING1:
        value = pbernoulli_via_stirling1
    else:
        value = partial(pbernoulli_egf_route, order=order)

    cells = tuple(tuple(value(n, p) for p in range(pmax + 1)) for n in range(nmax + 1))
    return PBTable(nmax, pmax, cells)


def cmd_value(args: argparse.Namespace) -> int:
    """Print ``B(n, p)`` by the chosen route."""
    value = render_rational(pbernoulli_value(args.n, args.p, args.method, args.order))
    if args.format == "plain":
        print(value)
    else:
        record = {"n": args.n, "p": args.p, "method": args.method, "value": value}
        print(render_records([record], list(record), args.format))
    return EXIT_CODES.SUCCESS


def cmd_table(args: argparse.Namespace) -> int:
    """Print the ``B(n, p)`` rectangle, or a Stirling triangle with ``--triangle``."""
    if args.triangle is not None:
        frame = get_triangle(TRIANGLES[args.triangle]).to_frame(args.nmax)
        records = [
            {"n": int(n), "k": int(k), "value": str(value)}
            for n, k, value in frame.itertuples(index=False)
        ]
        print(render_records(records, ["n", "k", "value"], args.format))
        return EXIT_CODES.SUCCESS
    table = _route_table(args.nmax, args.pmax, args.method, args.order)
    print(render_table(table, args.format))
    return EXIT_CODES.SUCCESS


def cmd_series(args: argparse.Namespace) -> int:
    """Print the closed-form generating function next to ``B(n, p) / n!``."""
    series = egf_closed_form(args.p, args.order)
    records = []
    for n in range(min(series.val, 0), args.order):
        expected = 0 if n < 0 else pbernoulli_explicit(n, args.p) / factorial(n)
        records.append(
            {
                "n": n,
                "coefficient": render_rational(series[n]),
                "explicit": render_rational(expected),
                "match": series[n] == expected,
            }
        )
    matched = all(record["match"] for record in records)
    if args.format == "json":
        payload = {"p": args.p, "order": args.order, "match": matched, "coefficients": records}
        print(json.dumps(payload, indent=2))
    else:
        print(render_records(records, ["n", "coefficient", "explicit", "match"], args.format))
    if not matched:
        logger.warning(f"closed form and explicit sum disagree for p={args.p}")
    return EXIT_CODES.SUCCESS if matched else EXIT_CODES.FALSIFIED


def cmd_verify(args: argparse.Namespace) -> int:
    """Run the verification suite; exit 1 when any cell fails."""
    table = pbernoulli_table(args.nmax, args.pmax)
    if args.corrupt_cell is not None:
        n, p = args.corrupt_cell
        table = table.with_cell(n, p, table[n, p] + 1)
        logger.warning(f"recurrence table cell (n={n}, p={p}) corrupted by +1")
    reports = run_suite(args.selector, args.nmax, args.pmax, args.order, table)
    print(render_reports(reports, args.format))
    failed = [report.identity for report in reports if not report.all_pass]
    if failed:
        logger.warning(f"falsified: {', '.join(failed)}")
        return EXIT_CODES.FALSIFIED
    return EXIT_CODES.SUCCESS


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with the ``value``, ``table``, ``series`` and ``verify`` subcommands."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="plain", help="Output format.")
    common.add_argument(
        "--order",
        type=int,
        default=None,
        help="Truncation order of generating-function series (default: settings.series_order).",
    )
    common.add_argument("--jobs", type=int, default=1, help="Worker threads for verification.")
    loudness = common.add_mutually_exclusive_group()
    loudness.add_argument("-v", "--verbose", action="store_true", help="Log debug messages.")
    loudness.add_argument("-q", "--quiet", action="store_true", help="Log warnings only.")

    parser = argparse.ArgumentParser(
        prog="pbernoulli",
        description="Exact p-Bernoulli numbers, tables, generating functions and identity checks.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    value = commands.add_parser("value", parents=[common], help="A single B(n, p).")
    value.add_argument("--n", type=int, required=True)
    value.add_argument("--p", type=int, required=True)
    value.add_argument("--method", choices=list(ROUTE_KEYS), default=ROUTE_KEYS.EXPLICIT)
    value.set_defaults(func=cmd_value)

    table = commands.add_parser("table", parents=[common], help="The B(n, p) rectangle.")
    table.add_argument("--nmax", type=int, default=20)
    table.add_argument("--pmax", type=int, default=6)
    table.add_argument("--method", choices=list(ROUTE_KEYS), default=ROUTE_KEYS.EXPLICIT)
    table.add_argument(
        "--triangle",
        choices=list(TRIANGLES),
        default=None,
        help="Dump rows 0..nmax of a Stirling triangle instead.",
    )
    table.set_defaults(func=cmd_table)

    series = commands.add_parser(
        "series", parents=[common], help="Coefficients of the closed-form generating function."
    )
    series.add_argument("--p", type=int, required=True)
    series.set_defaults(func=cmd_series)

    verify = commands.add_parser("verify", parents=[common], help="Run identity checks.")
    verify.add_argument(
        "selector", nargs="?", default=SELECTOR_KEYS.ALL, choices=list(SELECTOR_KEYS)
    )
    verify.add_argument("--nmax", type=int, default=20)
    verify.add_argument("--pmax", type=int, default=6)
    verify.add_argument(
        "--corrupt-cell",
        nargs=2,
        type=int,
        metavar=("N", "P"),
        default=None,
        help=argparse.SUPPRESS,
    )
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point of the ``pbernoulli`` command.

    Returns
    -------
    0 on success, 1 when an identity is falsified. Usage errors exit with status 2.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        settings.verbosity = logging.DEBUG
    elif args.quiet:
        settings.verbosity = logging.WARNING
    if args.order is None:
        args.order = settings.series_order
    try:
        settings.n_jobs = args.jobs
        return args.func(args)
    except ValueError as err:
        parser.error(str(err))
