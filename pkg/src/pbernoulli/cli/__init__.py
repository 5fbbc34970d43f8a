from ._main import build_parser, cmd_series, cmd_table, cmd_value, cmd_verify, main
from ._render import render_records, render_reports, render_table

__all__ = [
    "main",
    "build_parser",
    "cmd_value",
    "cmd_table",
    "cmd_series",
    "cmd_verify",
    "render_records",
    "render_reports",
    "render_table",
]
