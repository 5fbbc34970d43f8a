from fractions import Fraction
from functools import lru_cache
from typing import Optional

from pbernoulli._constants import ROUTE_KEYS
from pbernoulli._settings import settings
from pbernoulli._types import Rational, RouteName
from pbernoulli.numerics import binomial, factorial
from pbernoulli.triangles import stirling1_unsigned, stirling2

from ._egf import egf_closed_form
from ._table import pbernoulli_table


def _check_natural(name: str, value: int):
    if value < 0:
        raise ValueError(f"{name} must be a natural number, got {value}.")


@lru_cache(maxsize=None)
def pbernoulli_explicit(n: int, p: int) -> Rational:
    """p-Bernoulli number ``B(n, p)`` from the explicit finite sum.

    ``B(n, p) = sum_{k=0..n} (-1)**k {n, k} k! / C(k + p + 1, k)``

    This is the reference route; every other route is verified against it.

    Parameters
    ----------
    n
        Index, ``n >= 0``.
    p
        Order, ``p >= -1`` (the sum is valid down to ``p = -1``).

    Raises
    ------
    ValueError
        If ``n < 0`` or ``p < -1``.

    Examples
    --------
    >>> pbernoulli_explicit(1, 1)
    Fraction(-1, 3)
    """
    _check_natural("n", n)
    if p < -1:
        raise ValueError(f"the explicit formula holds for p >= -1, got p={p}.")
    total = Fraction(0)
    for k in range(n + 1):
        term = Fraction(stirling2(n, k) * factorial(k), binomial(k + p + 1, k))
        total += -term if k % 2 else term
    return total


def bernoulli(n: int) -> Rational:
    """Bernoulli number ``B_n`` with the convention ``B_1 = -1/2``.

    This is ``B(n, 0)``; the explicit sum at ``p = 0`` forces the ``-1/2`` sign.
    """
    return pbernoulli_explicit(n, 0)


@lru_cache(maxsize=None)
def pbernoulli_via_stirling1(n: int, p: int) -> Rational:
    """``B(n, p)`` from Bernoulli numbers and Stirling numbers of the first kind.

    ``B(n, p) = (p + 1) / p! * sum_{j=0..p} (-1)**j [p, j] B_{n+j}``
    """
    _check_natural("n", n)
    _check_natural("p", p)
    total = Fraction(0)
    for j in range(p + 1):
        term = stirling1_unsigned(p, j) * bernoulli(n + j)
        total += -term if j % 2 else term
    return Fraction(p + 1, factorial(p)) * total


def pbernoulli_egf_route(n: int, p: int, order: Optional[int] = None) -> Rational:
    """``B(n, p)`` read off the closed-form generating function as ``n! [t**n]``.

    The series order is raised to ``n + 1`` (and ``p + 3``) when needed.
    """
    _check_natural("n", n)
    _check_natural("p", p)
    order = max(settings.series_order if order is None else order, n + 1, p + 3)
    return factorial(n) * egf_closed_form(p, order)[n]


def pbernoulli_value(
    n: int, p: int, method: RouteName = "explicit", order: Optional[int] = None
) -> Rational:
    """``B(n, p)`` by the named route.

    Parameters
    ----------
    n
        Index, ``n >= 0``.
    p
        Order; ``p >= -1`` for ``"explicit"``, ``p >= 0`` otherwise.
    method
        One of ``"explicit"``, ``"recurrence"``, ``"stirling1"``, ``"egf"``.
    order
        Series order for the ``"egf"`` route; ignored by the others.
    """
    if method == ROUTE_KEYS.EXPLICIT:
        return pbernoulli_explicit(n, p)
    if method == ROUTE_KEYS.RECURRENCE:
        _check_natural("n", n)
        _check_natural("p", p)
        return pbernoulli_table(n, p).get(n, p)
    if method == ROUTE_KEYS.STIRLING1:
        return pbernoulli_via_stirling1(n, p)
    if method == ROUTE_KEYS.EGF:
        return pbernoulli_egf_route(n, p, order)
    raise ValueError(f"unknown route {method!r}; expected one of {list(ROUTE_KEYS)}.")
