from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

import pandas as pd

from pbernoulli._constants import REPORT_KEYS
from pbernoulli._types import Scalar
from pbernoulli.numerics import as_rational, render_rational


@dataclass(frozen=True)
class Cell:
    """One verified instance of an identity.

    Parameters
    ----------
    params
        Parameter values locating the instance, e.g. ``{"p": 1, "n": 3}``.
    lhs
        Left side in canonical rational text.
    rhs
        Right side in canonical rational text.
    passed
        Whether both sides are equal as exact rationals.
    """

    params: dict[str, Any]
    lhs: str
    rhs: str
    passed: bool

    def describe(self) -> str:
        """``"p=1, n=3: lhs = rhs"`` (``!=`` for a failing cell)."""
        where = ", ".join(f"{key}={value}" for key, value in self.params.items())
        relation = "=" if self.passed else "!="
        return f"{where}: {self.lhs} {relation} {self.rhs}"

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready mapping with keys ``params, lhs, rhs, pass``."""
        return {
            REPORT_KEYS.PARAMS: dict(self.params),
            REPORT_KEYS.LHS: self.lhs,
            REPORT_KEYS.RHS: self.rhs,
            REPORT_KEYS.PASS: self.passed,
        }


def compare(params: dict[str, Any], lhs: Scalar, rhs: Scalar) -> Cell:
    """Build a :class:`Cell` by exact comparison of two rationals."""
    lhs = as_rational(lhs)
    rhs = as_rational(rhs)
    return Cell(dict(params), render_rational(lhs), render_rational(rhs), lhs == rhs)


@dataclass
class Report:
    """Pass/fail record of one identity over a parameter rectangle.

    Parameters
    ----------
    identity
        Name tag of the identity, see `pbernoulli.IDENTITY_KEYS`.
    cells
        Cells in parameter order.
    notes
        Free-text remarks (readings adopted, cells evaluated outside the asserted range).
    """

    identity: str
    cells: list[Cell] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        """True iff every cell passes."""
        return all(cell.passed for cell in self.cells)

    @property
    def failures(self) -> list[Cell]:
        """Failing cells in parameter order."""
        return [cell for cell in self.cells if not cell.passed]

    def summary(self) -> str:
        """One line: ``identity: PASS (k/m cells)``."""
        status = "PASS" if self.all_pass else "FAIL"
        n_pass = len(self.cells) - len(self.failures)
        return f"{self.identity}: {status} ({n_pass}/{len(self.cells)} cells)"

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready mapping; ``notes`` is present only when non-empty."""
        out = {
            REPORT_KEYS.IDENTITY: self.identity,
            REPORT_KEYS.ALL_PASS: self.all_pass,
            REPORT_KEYS.CELLS: [cell.to_dict() for cell in self.cells],
        }
        if self.notes:
            out[REPORT_KEYS.NOTES] = list(self.notes)
        return out

    def to_json(self, indent: int = 2) -> str:
        """:meth:`to_dict` serialized with :func:`json.dumps`."""
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Report:
        """Inverse of :meth:`to_dict`."""
        cells = [
            Cell(
                dict(cell[REPORT_KEYS.PARAMS]),
                cell[REPORT_KEYS.LHS],
                cell[REPORT_KEYS.RHS],
                bool(cell[REPORT_KEYS.PASS]),
            )
            for cell in data[REPORT_KEYS.CELLS]
        ]
        return cls(data[REPORT_KEYS.IDENTITY], cells, list(data.get(REPORT_KEYS.NOTES, [])))

    def to_frame(self) -> pd.DataFrame:
        """One row per cell: ``identity``, one column per parameter, ``lhs``, ``rhs``, ``pass``."""
        records = [
            {
                REPORT_KEYS.IDENTITY: self.identity,
                **cell.params,
                REPORT_KEYS.LHS: cell.lhs,
                REPORT_KEYS.RHS: cell.rhs,
                REPORT_KEYS.PASS: cell.passed,
            }
            for cell in self.cells
        ]
        return pd.DataFrame.from_records(records)
