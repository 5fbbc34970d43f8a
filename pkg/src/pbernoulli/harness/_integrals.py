import logging
from fractions import Fraction
from typing import Optional

from pbernoulli._constants import IDENTITY_KEYS
from pbernoulli._settings import settings
from pbernoulli._types import Scalar
from pbernoulli.bernoulli import (
    geometric_integral_closed_form,
    geometric_integral_gf,
    iterated_integral,
    pbernoulli_explicit,
)
from pbernoulli.numerics import as_rational, factorial, render_rational
from pbernoulli.utils import harness_dsp

from ._report import Cell, Report, compare
from ._runner import build_report

logger = logging.getLogger(__name__)

EQ12_MIN_P = 1
EQ12_MAX_P = 5


def _integral_rhs(n: int, p: int) -> Fraction:
    return (-1) ** p * pbernoulli_explicit(n, p) / factorial(p + 1)


@harness_dsp.dedent
def verify_proposition(nmax: int, pmax: int) -> Report:
    """Iterated integral of the geometric polynomial against ``B(n, p)``.

    For ``p <= pmax`` and ``p < n <= nmax`` the ``(p + 1)``-fold integral of ``w_n``
    (``p`` integrals from 0, the outer one over ``[-1, 0]``) must equal
    ``(-1)**p B(n, p) / (p + 1)!``; at ``p = 0`` this is ``integral_{-1}^0 w_n = B_n``.

    The cells with ``n <= p`` are evaluated as well and summarized in the report
    notes, but they are not part of the asserted rectangle.

    Parameters
    ----------
    %(param_nmax)s
    %(param_pmax)s

    Returns
    -------
    %(returns_report)s
    """

    def cell(p: int, n: int) -> Cell:
        return compare({"p": p, "n": n}, iterated_integral(n, p), _integral_rhs(n, p))

    params = [{"p": p, "n": n} for p in range(pmax + 1) for n in range(p + 1, nmax + 1)]
    outside = [(n, p) for p in range(pmax + 1) for n in range(min(p, nmax) + 1)]
    agreeing = [
        (n, p) for n, p in outside if iterated_integral(n, p, strict=False) == _integral_rhs(n, p)
    ]
    if len(agreeing) == len(outside):
        note = f"n <= p cells: equality also holds at all {len(outside)} cells (not asserted)"
    else:
        missing = ", ".join(f"(n={n}, p={p})" for n, p in outside if (n, p) not in agreeing)
        note = (
            f"n <= p cells: equality holds at {len(agreeing)} of {len(outside)} cells "
            f"(not asserted); differs at {missing}"
        )
    logger.debug(note)
    return build_report(IDENTITY_KEYS.PROPOSITION, cell, params, notes=[note])


@harness_dsp.dedent
def verify_eq12(p: int, order: Optional[int] = None, sample: Scalar = Fraction(1, 2)) -> Report:
    """Antiderivatives of the geometric generating function against their closed form.

    The left side is ``sum_n [p-fold antiderivative of w_n](x) t**n / n!`` built by exact
    polynomial integration; the right side is assembled from the series logarithm of
    ``1 - x (exp(t) - 1)`` and Laurent arithmetic. Both are taken at ``x = sample`` and
    compared coefficient by coefficient for ``-p <= n < order`` (the right side may have
    a pole of order ``p`` before cancellation).

    The report notes state the generating-function reading of the left side and whether
    the bracket printed with ``+ H_{p-1}`` would also have agreed.

    Parameters
    ----------
    p
        Number of antiderivatives, ``1 <= p <= 5``.
    %(param_order)s
    sample
        Rational evaluation point ``x``.

    Returns
    -------
    %(returns_report)s

    Raises
    ------
    ValueError
        If ``p`` is outside ``[1, 5]``.
    """
    order = settings.series_order if order is None else order
    if not EQ12_MIN_P <= p <= EQ12_MAX_P:
        raise ValueError(
            f"verify_eq12 takes {EQ12_MIN_P} <= p <= {EQ12_MAX_P}, got p={p}."
        )
    sample = as_rational(sample)
    label = render_rational(sample)
    lhs_series = geometric_integral_gf(p, sample, order)
    rhs_series = geometric_integral_closed_form(p, sample, order)
    printed = geometric_integral_closed_form(p, sample, order, bracket_sign=1)

    def cell(n: int) -> Cell:
        return compare({"p": p, "sample": label, "n": n}, lhs_series[n], rhs_series[n])

    exponents = range(-p, order)
    n_printed = sum(1 for n in exponents if printed[n] != lhs_series[n])
    if n_printed:
        printed_note = f"bracket read as printed (+ H_{p - 1}) disagrees at {n_printed} cells"
    else:
        printed_note = f"bracket read as printed (+ H_{p - 1}) also agrees here"
    notes = [
        "left side read as the generating function sum_n [p-fold antiderivative of w_n](x) "
        "t^n/n! of 1/(1 - x(e^t - 1)); the per-n statement is not asserted",
        "bracket taken as [H_{p-1}(1 - x(e^t - 1))^(p-1) - H_{p-1}]",
        printed_note,
    ]
    return build_report(IDENTITY_KEYS.EQ12, cell, [{"n": n} for n in exponents], notes=notes)
