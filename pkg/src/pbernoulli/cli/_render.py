import json
from collections.abc import Sequence
from typing import Any

import pandas as pd
from tabulate import tabulate

from pbernoulli._constants import REPORT_KEYS
from pbernoulli._types import OutputFormat
from pbernoulli.bernoulli import PBTable
from pbernoulli.harness import Report
from pbernoulli.numerics import render_rational

_CSV_FIXED = (REPORT_KEYS.IDENTITY, REPORT_KEYS.LHS, REPORT_KEYS.RHS, REPORT_KEYS.PASS)


def _text(value: Any) -> Any:
    if isinstance(value, bool):
        return "true" if value else "false"
    return value


def render_records(
    records: Sequence[dict[str, Any]], columns: Sequence[str], fmt: OutputFormat
) -> str:
    """Render flat records as a github table, CSV with a header row, or a JSON array.

    Values are written as given; callers pass rationals already in canonical text.
    """
    if fmt == "json":
        return json.dumps(list(records), indent=2)
    if fmt == "csv":
        frame = pd.DataFrame.from_records(
            [{column: _text(record[column]) for column in columns} for record in records],
            columns=list(columns),
        )
        return frame.to_csv(index=False).rstrip("\n")
    rows = [[_text(record[column]) for column in columns] for record in records]
    return tabulate(rows, headers=list(columns), tablefmt="github", disable_numparse=True)


def render_table(table: PBTable, fmt: OutputFormat) -> str:
    """CSV and JSON use one ``n, p, value`` record per cell; plain shows the grid."""
    if fmt == "plain":
        headers = ["n", *(f"p={p}" for p in range(table.pmax + 1))]
        rows = [[n, *map(render_rational, table.row(n))] for n in range(table.nmax + 1)]
        return tabulate(rows, headers=headers, tablefmt="github", disable_numparse=True)
    records = [
        {"n": n, "p": p, "value": render_rational(value)} for n, p, value in table.items()
    ]
    return render_records(records, ["n", "p", "value"], fmt)


def _render_report_plain(report: Report) -> list[str]:
    lines = [report.summary()]
    for cell in report.cells:
        lines.append(f"  {'PASS' if cell.passed else 'FAIL'} {cell.describe()}")
    lines.extend(f"  note: {note}" for note in report.notes)
    return lines


def render_reports(reports: Sequence[Report], fmt: OutputFormat) -> str:
    """Render verification reports.

    plain: a summary line per report followed by one line per cell and its notes.
    json: an array of report objects. csv: one row per cell with a column per parameter.
    """
    if fmt == "json":
        return json.dumps([report.to_dict() for report in reports], indent=2)
    if fmt == "csv":
        frames = [report.to_frame().astype(str) for report in reports if report.cells]
        if not frames:
            return ",".join(_CSV_FIXED)
        frame = pd.concat(frames, ignore_index=True, sort=False)
        params = [column for column in frame.columns if column not in _CSV_FIXED]
        frame[REPORT_KEYS.PASS] = frame[REPORT_KEYS.PASS].str.lower()
        frame = frame[[_CSV_FIXED[0], *params, *_CSV_FIXED[1:]]]
        return frame.to_csv(index=False).rstrip("\n")
    return "\n".join(line for report in reports for line in _render_report_plain(report))
