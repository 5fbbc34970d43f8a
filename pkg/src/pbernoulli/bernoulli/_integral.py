import logging
from fractions import Fraction
from typing import Optional

from pbernoulli._settings import settings
from pbernoulli._types import Rational, Scalar
from pbernoulli.numerics import as_rational, factorial, harmonic
from pbernoulli.series import (
    LaurentSeries,
    Polynomial,
    em1_pow,
    ls_inv,
    ls_log_unit,
    ls_one,
    ls_pow,
    ls_truncate,
    ls_zero,
    poly_eval,
    poly_integrate,
)
from pbernoulli.triangles import geometric_poly

logger = logging.getLogger(__name__)


def iterated_antiderivative(P: Polynomial, times: int) -> Polynomial:
    """Apply the zero-constant antiderivative ``times`` times.

    The result is ``integral_0^x integral_0^{x_times} ... P(x_1) dx_1 ... dx_times``.
    """
    if times < 0:
        raise ValueError(f"times must be natural, got {times}.")
    for _ in range(times):
        P = poly_integrate(P)
    return P


def iterated_integral(n: int, p: int, strict: bool = True) -> Rational:
    """Integrate ``w_n`` ``p + 1`` times: ``p`` inner integrals from 0, one outer over ``[-1, 0]``.

    For ``n > p >= 0`` the value equals ``(-1)**p B(n, p) / (p + 1)!``; at ``p = 0`` it is
    ``integral_{-1}^0 w_n(x) dx = B_n``.

    Parameters
    ----------
    n
        Index of the geometric polynomial.
    p
        Number of inner integrations.
    strict
        Enforce ``n > p``. Pass `False` to evaluate outside the stated range.

    Raises
    ------
    ValueError
        If ``strict`` and ``n <= p``, or either argument is negative.
    """
    if n < 0 or p < 0:
        raise ValueError(f"n and p must be natural, got n={n}, p={p}.")
    if strict and not n > p:
        raise ValueError(f"the integral identity is stated for n > p, got n={n}, p={p}.")
    F = iterated_antiderivative(geometric_poly(n), p + 1)
    return poly_eval(F, 0) - poly_eval(F, -1)


def geometric_integral_gf(m: int, x0: Scalar, order: Optional[int] = None) -> LaurentSeries:
    """``sum_n [m-fold antiderivative of w_n](x0) t**n / n!`` known modulo ``t**order``.

    Each coefficient comes from exact polynomial integration of ``w_n``; no series
    logarithm is involved.
    """
    order = settings.series_order if order is None else order
    x0 = as_rational(x0)
    coeffs = tuple(
        poly_eval(iterated_antiderivative(geometric_poly(n), m), x0) / factorial(n)
        for n in range(order)
    )
    return LaurentSeries(0, coeffs, order)


def geometric_integral_closed_form(
    m: int,
    x0: Scalar,
    order: Optional[int] = None,
    bracket_sign: int = -1,
) -> LaurentSeries:
    """Closed form of the ``m``-fold antiderivative of ``1 / (1 - x (exp(t) - 1))`` at ``x = x0``.

    With ``E = exp(t) - 1`` and ``u = x0 E``, the series is

    ``(-1)**m / (E**m (m-1)!) (1 - u)**(m-1) log(1 - u)
    - (-1)**m / (E**m (m-1)!) [H_{m-1} (1 - u)**(m-1) - H_{m-1}]
    + sum_{k=1..m-2} (-1)**(m-k) H_{m-1-k} x0**k / (E**(m-k) (m-1-k)! k!)``.

    The bracket must carry a minus sign for the expression to vanish at ``x0 = 0``;
    ``bracket_sign=+1`` reproduces the printed variant with ``+ H_{m-1}`` so that the
    two readings can be compared.

    Parameters
    ----------
    m
        Number of antiderivatives, ``m >= 1``.
    x0
        Rational evaluation point.
    order
        Truncation order of the result.
    bracket_sign
        Sign in front of the second ``H_{m-1}`` inside the bracket.
    """
    order = settings.series_order if order is None else order
    if m < 1:
        raise ValueError(f"the closed form needs m >= 1 antiderivatives, got {m}.")
    if bracket_sign not in (-1, 1):
        raise ValueError(f"bracket_sign must be -1 or +1, got {bracket_sign}.")
    x0 = as_rational(x0)
    working = order + 2 * m
    logger.debug(f"closed form for {m} antiderivatives at x={x0}, working order {working}")

    one_minus_u = ls_one(working) - x0 * em1_pow(1, working)
    power = ls_pow(one_minus_u, m - 1)
    inv_em = ls_inv(em1_pow(m, working))
    c = Fraction((-1) ** m, factorial(m - 1))
    h = harmonic(m - 1)

    log_term = c * power * ls_log_unit(one_minus_u) * inv_em
    bracket = h * power + bracket_sign * h
    harmonic_term = -c * bracket * inv_em
    tail = ls_zero(working)
    for k in range(1, m - 1):
        weight = Fraction((-1) ** (m - k), factorial(m - 1 - k) * factorial(k))
        tail = tail + weight * harmonic(m - 1 - k) * x0**k * ls_inv(em1_pow(m - k, working))
    return ls_truncate(log_term + harmonic_term + tail, order)
