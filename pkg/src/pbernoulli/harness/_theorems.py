from fractions import Fraction
from typing import Optional

from pbernoulli._constants import IDENTITY_KEYS
from pbernoulli._settings import settings
from pbernoulli.bernoulli import (
    PBTable,
    bernoulli,
    displayed_egf,
    egf_closed_form,
    pbernoulli_explicit,
)
from pbernoulli.numerics import binomial, factorial, harmonic
from pbernoulli.triangles import stirling1_unsigned, stirling2
from pbernoulli.utils import harness_dsp

from ._report import Cell, Report, compare
from ._runner import build_report


def _lower_triangle(nmax: int, pmax: int) -> list[dict[str, int]]:
    """``{"p": p, "n": n}`` for ``p <= pmax``, ``p < n <= nmax``, ordered by ``p`` then ``n``."""
    return [{"p": p, "n": n} for p in range(pmax + 1) for n in range(p + 1, nmax + 1)]


def _theorem2_rhs(n: int, p: int) -> Fraction:
    # 0**0 == 1 carries the p = 0 boundary
    head = Fraction(p) ** (n - 1) * (n - p * harmonic(p)) / factorial(p)
    tail = sum(
        (Fraction(stirling2(n, p - j)) * harmonic(j) / factorial(j) for j in range(1, p + 1)),
        Fraction(0),
    )
    return head + tail


@harness_dsp.dedent
def verify_theorem1(pmax: int, order: Optional[int] = None) -> Report:
    """Check the closed-form generating function against the explicit sum.

    For every ``p <= pmax`` the principal part of :func:`~pbernoulli.bernoulli.egf_closed_form`
    must cancel, and ``[t**n]`` must equal ``B(n, p) / n!`` for ``0 <= n < order``. The
    principal part is checked as cells ``n = -(p + 1), ..., -1`` with right side 0.

    Parameters
    ----------
    %(param_pmax)s
    %(param_order)s

    Returns
    -------
    %(returns_report)s

    Raises
    ------
    ValueError
        If ``order <= pmax + 2``.
    """
    order = settings.series_order if order is None else order
    if order <= pmax + 2:
        raise ValueError(f"verify_theorem1 needs order > pmax + 2 = {pmax + 2}, got {order}.")

    def cell(p: int, n: int) -> Cell:
        lhs = egf_closed_form(p, order)[n]
        rhs = 0 if n < 0 else pbernoulli_explicit(n, p) / factorial(n)
        return compare({"p": p, "n": n}, lhs, rhs)

    params = [{"p": p, "n": n} for p in range(pmax + 1) for n in range(-(p + 1), order)]
    return build_report(IDENTITY_KEYS.THEOREM1, cell, params)


@harness_dsp.dedent
def verify_displayed_egf(order: int = 20) -> Report:
    """Match the two hand-written generating functions (``p = 1, 2``) with the general one.

    Parameters
    ----------
    %(param_order)s
    """

    def cell(p: int, n: int) -> Cell:
        lhs = displayed_egf(p, order)[n]
        rhs = egf_closed_form(p, order)[n]
        return compare({"p": p, "n": n}, lhs, rhs)

    params = [{"p": p, "n": n} for p in (1, 2) for n in range(-(p + 1), order)]
    return build_report(IDENTITY_KEYS.DISPLAYED_EGF, cell, params)


@harness_dsp.dedent
def verify_theorem2(nmax: int, pmax: int, table: Optional[PBTable] = None) -> Report:
    """Check the Stirling-weighted convolution of ``B(n, p)`` against its harmonic closed form.

    ``sum_{k=p+1..n} C(n, k) {k, p+1} B(n - k, p)
    = p**(n-1) (n - p H_p) / p! + sum_{j=1..p} {n, p - j} H_j / j!``
    for ``p <= pmax``, ``p < n <= nmax``.

    Parameters
    ----------
    %(param_nmax)s
    %(param_pmax)s
    %(param_table)s

    Returns
    -------
    %(returns_report)s
    """
    value = pbernoulli_explicit if table is None else table.get

    def cell(p: int, n: int) -> Cell:
        lhs = sum(
            (
                binomial(n, k) * stirling2(k, p + 1) * value(n - k, p)
                for k in range(p + 1, n + 1)
            ),
            Fraction(0),
        )
        return compare({"p": p, "n": n}, lhs, _theorem2_rhs(n, p))

    return build_report(IDENTITY_KEYS.THEOREM2, cell, _lower_triangle(nmax, pmax))


@harness_dsp.dedent
def verify_corollary1(nmax: int, pmax: int) -> Report:
    """The convolution of :func:`verify_theorem2` expanded over classical Bernoulli numbers.

    ``sum_k sum_j C(n, k) {k, p+1} [p, j] (-1)**j B_{n+j-k}
    = p**(n-1) (n - p H_p) / (p + 1) + p! / (p + 1) sum_{j=1..p} {n, p - j} H_j / j!``

    Parameters
    ----------
    %(param_nmax)s
    %(param_pmax)s

    Returns
    -------
    %(returns_report)s
    """

    def cell(p: int, n: int) -> Cell:
        lhs = Fraction(0)
        for k in range(p + 1, n + 1):
            weight = binomial(n, k) * stirling2(k, p + 1)
            for j in range(p + 1):
                term = weight * stirling1_unsigned(p, j) * bernoulli(n + j - k)
                lhs += -term if j % 2 else term
        head = Fraction(p) ** (n - 1) * (n - p * harmonic(p)) / (p + 1)
        tail = sum(
            (Fraction(stirling2(n, p - j)) * harmonic(j) / factorial(j) for j in range(1, p + 1)),
            Fraction(0),
        )
        rhs = head + Fraction(factorial(p), p + 1) * tail
        return compare({"p": p, "n": n}, lhs, rhs)

    return build_report(IDENTITY_KEYS.COROLLARY1, cell, _lower_triangle(nmax, pmax))


@harness_dsp.dedent
def verify_special_sums(nmax: int) -> Report:
    """The ``p = 1`` and ``p = 2`` instances written over Bernoulli numbers.

    * first: ``sum_{k=2..n} C(n, k) {k, 2} B_{n+1-k} = -(n - 1) / 2`` for ``2 <= n <= nmax``
    * second: ``sum_{k=3..n} C(n, k) {k, 3} (B_{n+2-k} - B_{n+1-k}) = (2**(n-1) (n - 3) + 2) / 3``
      for ``3 <= n <= nmax``

    Parameters
    ----------
    %(param_nmax)s

    Raises
    ------
    ValueError
        If ``nmax < 3``.
    """
    if nmax < 3:
        raise ValueError(f"verify_special_sums needs nmax >= 3, got {nmax}.")

    def cell(case: str, n: int) -> Cell:
        if case == "first":
            lhs = Fraction(0)
            for k in range(2, n + 1):
                lhs += binomial(n, k) * stirling2(k, 2) * bernoulli(n + 1 - k)
            rhs = Fraction(-(n - 1), 2)
        else:
            lhs = Fraction(0)
            for k in range(3, n + 1):
                difference = bernoulli(n + 2 - k) - bernoulli(n + 1 - k)
                lhs += binomial(n, k) * stirling2(k, 3) * difference
            rhs = Fraction(2 ** (n - 1) * (n - 3) + 2, 3)
        return compare({"case": case, "n": n}, lhs, rhs)

    params = [{"case": "first", "n": n} for n in range(2, nmax + 1)]
    params += [{"case": "second", "n": n} for n in range(3, nmax + 1)]
    return build_report(IDENTITY_KEYS.SPECIAL_SUMS, cell, params)


@harness_dsp.dedent
def verify_corollary2(pmax: int) -> Report:
    """Finite harmonic sum evaluated in closed form.

    ``sum_{j=1..p} {p+1, p-j} H_j / j! = (p! - (p+1) p**p + p**(p+1) H_p) / p!`` for
    ``1 <= p <= pmax``; the right side has hundreds of bits already at ``p = 30``.

    Parameters
    ----------
    %(param_pmax)s

    Raises
    ------
    ValueError
        If ``pmax < 1``.
    """
    if pmax < 1:
        raise ValueError(f"verify_corollary2 needs pmax >= 1, got {pmax}.")

    def cell(p: int) -> Cell:
        lhs = sum(
            (
                Fraction(stirling2(p + 1, p - j)) * harmonic(j) / factorial(j)
                for j in range(1, p + 1)
            ),
            Fraction(0),
        )
        rhs = (factorial(p) - (p + 1) * p**p + p ** (p + 1) * harmonic(p)) / factorial(p)
        return compare({"p": p}, lhs, rhs)

    return build_report(IDENTITY_KEYS.COROLLARY2, cell, [{"p": p} for p in range(1, pmax + 1)])
