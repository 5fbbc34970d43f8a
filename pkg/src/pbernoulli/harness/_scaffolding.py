from collections.abc import Sequence
from fractions import Fraction
from typing import Optional

from pbernoulli._constants import IDENTITY_KEYS
from pbernoulli._settings import settings
from pbernoulli._types import Scalar
from pbernoulli.bernoulli import (
    PBTable,
    bernoulli,
    pbernoulli_explicit,
    pbernoulli_table,
    pbernoulli_via_stirling1,
)
from pbernoulli.numerics import as_rational, binomial, factorial, render_rational
from pbernoulli.series import em1_pow, ls_inv, ls_one
from pbernoulli.triangles import geometric_poly, stirling2
from pbernoulli.utils import harness_dsp

from ._report import Cell, Report, compare
from ._runner import build_report

GEOMETRIC_SAMPLES = (Fraction(1), Fraction(-1), Fraction(1, 2))


def _rectangle(nmax: int, pmax: int) -> list[dict[str, int]]:
    return [{"n": n, "p": p} for n in range(nmax + 1) for p in range(pmax + 1)]


@harness_dsp.dedent
def verify_routes(nmax: int, pmax: int, table: Optional[PBTable] = None) -> list[Report]:
    """Compare every route against the explicit sum on the full rectangle.

    Parameters
    ----------
    %(param_nmax)s
    %(param_pmax)s
    %(param_table)s
        Defaults to a fresh recurrence table.

    Returns
    -------
    Two reports: explicit vs recurrence table, and explicit vs the Stirling-first-kind route.
    """
    if table is None:
        table = pbernoulli_table(nmax, pmax)

    def recurrence_cell(n: int, p: int) -> Cell:
        return compare({"n": n, "p": p}, pbernoulli_explicit(n, p), table.get(n, p))

    def stirling1_cell(n: int, p: int) -> Cell:
        return compare({"n": n, "p": p}, pbernoulli_explicit(n, p), pbernoulli_via_stirling1(n, p))

    params = _rectangle(nmax, pmax)
    return [
        build_report(IDENTITY_KEYS.RECURRENCE_ROUTE, recurrence_cell, params),
        build_report(IDENTITY_KEYS.STIRLING1_ROUTE, stirling1_cell, params),
    ]


def verify_recurrence(table: PBTable) -> Report:
    """Check ``B(n + 1, p) = p B(n, p) - (p + 1)**2 / (p + 2) B(n, p + 1)`` inside ``table``.

    Every cell ``(n, p)`` with ``n < table.nmax`` and ``p < table.pmax`` has both
    neighbours in the table and yields one report cell.
    """

    def cell(n: int, p: int) -> Cell:
        rhs = p * table[n, p] - Fraction((p + 1) ** 2, p + 2) * table[n, p + 1]
        return compare({"n": n, "p": p}, table[n + 1, p], rhs)

    params = _rectangle(table.nmax - 1, table.pmax - 1) if table.nmax and table.pmax else []
    return build_report(IDENTITY_KEYS.RECURRENCE_LAW, cell, params)


@harness_dsp.dedent
def verify_stirling2_egf(kmax: int = 8, order: Optional[int] = None) -> Report:
    """``(exp(t) - 1)**k / k!`` generates the Stirling numbers ``{n, k}``.

    Parameters
    ----------
    kmax
        Largest power ``k`` checked.
    %(param_order)s
    """
    order = settings.series_order if order is None else order
    if order <= kmax:
        raise ValueError(f"verify_stirling2_egf needs order > kmax = {kmax}, got {order}.")

    def cell(k: int, n: int) -> Cell:
        lhs = factorial(n) * em1_pow(k, order)[n] / factorial(k)
        return compare({"k": k, "n": n}, lhs, stirling2(n, k))

    params = [{"k": k, "n": n} for k in range(kmax + 1) for n in range(order)]
    return build_report(IDENTITY_KEYS.STIRLING2_EGF, cell, params)


def verify_geometric_egf(nmax: int = 20, samples: Sequence[Scalar] = GEOMETRIC_SAMPLES) -> Report:
    """``1 / (1 - x (exp(t) - 1))`` generates the geometric polynomials ``w_n(x)``.

    The series inverse is taken at each rational ``x`` in ``samples`` and
    ``n! [t**n]`` is compared with the direct evaluation of ``w_n(x)`` for ``n <= nmax``.
    """
    order = nmax + 1
    series = {}
    for x in samples:
        x = as_rational(x)
        series[render_rational(x)] = (x, ls_inv(ls_one(order) - x * em1_pow(1, order)))

    def cell(x: str, n: int) -> Cell:
        x0, inverse = series[x]
        return compare({"x": x, "n": n}, factorial(n) * inverse[n], geometric_poly(n)(x0))

    params = [{"x": x, "n": n} for x in series for n in range(order)]
    return build_report(IDENTITY_KEYS.GEOMETRIC_EGF, cell, params)


def verify_bernoulli(nmax: int = 24) -> Report:
    """Bernoulli oracle: ``sum_{k=0..n} C(n + 1, k) B_k = 0``; ``B_n = 0`` for odd ``n >= 3``."""

    def cell(law: str, n: int) -> Cell:
        if law == "recurrence":
            lhs = sum((binomial(n + 1, k) * bernoulli(k) for k in range(n + 1)), Fraction(0))
        else:
            lhs = bernoulli(n)
        return compare({"law": law, "n": n}, lhs, 0)

    params = [{"law": "recurrence", "n": n} for n in range(1, nmax + 1)]
    params += [{"law": "odd", "n": n} for n in range(3, nmax + 1, 2)]
    return build_report(IDENTITY_KEYS.BERNOULLI_ORACLE, cell, params)
