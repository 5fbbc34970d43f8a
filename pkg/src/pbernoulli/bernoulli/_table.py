from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction

import pandas as pd

from pbernoulli._types import Rational, Scalar
from pbernoulli.numerics import as_rational, render_rational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PBTable:
    """Rectangle of p-Bernoulli numbers ``B(n, p)`` for ``0 <= n <= nmax``, ``0 <= p <= pmax``.

    ``cells[n][p]`` holds ``B(n, p)``. Row ``n = 0`` is all ones and column ``p = 0``
    holds the Bernoulli numbers with ``B_1 = -1/2``.

    Parameters
    ----------
    nmax
        Largest index ``n``.
    pmax
        Largest order ``p``.
    cells
        ``nmax + 1`` rows of ``pmax + 1`` fractions each.
    """

    nmax: int
    pmax: int
    cells: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.cells) != self.nmax + 1 or any(
            len(row) != self.pmax + 1 for row in self.cells
        ):
            raise ValueError(
                f"cells must form a {self.nmax + 1} x {self.pmax + 1} rectangle."
            )

    def get(self, n: int, p: int) -> Rational:
        """``B(n, p)``.

        Raises
        ------
        ValueError
            If ``(n, p)`` lies outside the rectangle.
        """
        if not (0 <= n <= self.nmax and 0 <= p <= self.pmax):
            raise ValueError(
                f"cell ({n}, {p}) is outside the {self.nmax} x {self.pmax} table."
            )
        return self.cells[n][p]

    def __getitem__(self, key: tuple[int, int]) -> Rational:
        n, p = key
        return self.get(n, p)

    def row(self, n: int) -> tuple[Fraction, ...]:
        """``B(n, 0), ..., B(n, pmax)``."""
        return self.cells[n]

    def column(self, p: int) -> tuple[Fraction, ...]:
        """``B(0, p), ..., B(nmax, p)``."""
        return tuple(row[p] for row in self.cells)

    def items(self) -> Iterator[tuple[int, int, Fraction]]:
        """``(n, p, B(n, p))`` in row-major order."""
        for n, row in enumerate(self.cells):
            for p, value in enumerate(row):
                yield n, p, value

    def with_cell(self, n: int, p: int, value: Scalar) -> PBTable:
        """Copy of the table with cell ``(n, p)`` replaced by ``value``."""
        self.get(n, p)
        cells = [list(row) for row in self.cells]
        cells[n][p] = as_rational(value)
        return PBTable(self.nmax, self.pmax, tuple(tuple(row) for row in cells))

    def to_frame(self) -> pd.DataFrame:
        """Long-format frame with columns ``n, p, value`` (values rendered as text)."""
        records = [
            {"n": n, "p": p, "value": render_rational(value)} for n, p, value in self.items()
        ]
        return pd.DataFrame.from_records(records, columns=["n", "p", "value"])


def pbernoulli_table(nmax: int, pmax: int) -> PBTable:
    """Fill the ``B(n, p)`` rectangle from the matrix recurrence.

    ``B(n + 1, p) = p B(n, p) - (p + 1)**2 / (p + 2) B(n, p + 1)``, seeded by
    ``B(0, p) = 1``.

    Cell ``(n + 1, p)`` needs ``(n, p + 1)``, so row ``n`` must reach column
    ``pmax + nmax - n``. The builder fills that trapezoid row by row (each row one
    column shorter than the previous) and returns the requested rectangle; the
    extra columns never leave this function.

    Parameters
    ----------
    nmax
        Largest index ``n`` (inclusive).
    pmax
        Largest order ``p`` (inclusive).
    """
    if nmax < 0 or pmax < 0:
        raise ValueError(f"nmax and pmax must be natural, got nmax={nmax}, pmax={pmax}.")
    width = pmax + nmax
    row = [Fraction(1)] * (width + 1)
    rows = [tuple(row[: pmax + 1])]
    for n in range(nmax):
        row = [
            p * row[p] - Fraction((p + 1) ** 2, p + 2) * row[p + 1]
            for p in range(width - n)
        ]
        rows.append(tuple(row[: pmax + 1]))
    logger.debug(f"recurrence table {nmax} x {pmax} built through column {width}")
    return PBTable(nmax, pmax, tuple(rows))
