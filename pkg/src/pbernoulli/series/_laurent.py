from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from pbernoulli._settings import settings
from pbernoulli._types import Rational, Scalar
from pbernoulli.numerics import as_rational, factorial, render_rational
from pbernoulli.utils import series_dsp

from ._polynomial import Polynomial


@dataclass(frozen=True)
class LaurentSeries:
    """Truncated Laurent series in ``t`` over the rationals.

    The series is ``sum(coeffs[i] * t**(val + i))`` and is known modulo
    ``t**order``: every exponent below ``order`` is represented (missing ones are
    zero), nothing at or above ``order`` is.

    The representation is canonical. Coefficients at exponents ``>= order`` are
    dropped, leading zeros are absorbed into ``val`` so that ``coeffs[0] != 0``
    (tight valuation), and trailing zeros are trimmed. The zero series has empty
    ``coeffs`` and ``val == order``: its valuation is at least everything known.

    Parameters
    ----------
    val
        Exponent of ``coeffs[0]``; may be negative.
    coeffs
        Integers or fractions in ascending powers of ``t``.
    order
        Truncation order.
    """

    val: int
    coeffs: tuple[Fraction, ...]
    order: int

    def __post_init__(self):
        coeffs = [as_rational(c) for c in self.coeffs[: max(self.order - self.val, 0)]]
        val = self.val
        lead = 0
        while lead < len(coeffs) and coeffs[lead] == 0:
            lead += 1
        coeffs = coeffs[lead:]
        val += lead
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            val = self.order
        object.__setattr__(self, "val", val)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def is_zero(self) -> bool:
        """Whether every known coefficient vanishes."""
        return not self.coeffs

    @property
    def principal_part_vanishes(self) -> bool:
        """True when no negative power of ``t`` survives."""
        return self.val >= 0

    def __getitem__(self, n: int) -> Rational:
        return ls_coefficient(self, n)

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            other = ls_monomial(other, 0, self.order)
        return ls_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> LaurentSeries:
        return ls_scale(self, -1)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, LaurentSeries):
            return ls_mul(self, other)
        return ls_scale(self, other)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return ls_render(self)


def ls_zero(order: int) -> LaurentSeries:
    """The zero series known modulo ``t**order``."""
    return LaurentSeries(order, (), order)


def ls_monomial(c: Scalar, k: int, order: int) -> LaurentSeries:
    """``c * t**k`` known modulo ``t**order``."""
    return LaurentSeries(k, (c,), order)


def ls_one(order: int) -> LaurentSeries:
    """The constant series 1 known modulo ``t**order``."""
    return ls_monomial(1, 0, order)


def ls_from_polynomial(P: Polynomial, order: int) -> LaurentSeries:
    """Reinterpret a polynomial in ``t`` as a series known modulo ``t**order``."""
    return LaurentSeries(0, P.coeffs, order)


def ls_coefficient(A: LaurentSeries, n: int) -> Rational:
    """Coefficient of ``t**n``.

    Raises
    ------
    ValueError
        If ``n`` is at or above the truncation order, where the coefficient is unknown.
    """
    if n >= A.order:
        raise ValueError(f"coefficient of t^{n} is unknown: series is known modulo t^{A.order}.")
    i = n - A.val
    if 0 <= i < len(A.coeffs):
        return A.coeffs[i]
    return Fraction(0)


def ls_truncate(A: LaurentSeries, order: int) -> LaurentSeries:
    """Forget every coefficient at exponent ``>= order``.

    Raises
    ------
    ValueError
        If ``order`` exceeds the known order of ``A``.
    """
    if order > A.order:
        raise ValueError(f"cannot raise the truncation order from {A.order} to {order}.")
    return LaurentSeries(A.val, A.coeffs, order)


@series_dsp.dedent
def ls_add(A: LaurentSeries, B: LaurentSeries) -> LaurentSeries:
    """Sum of two series.

    Parameters
    ----------
    %(param_series)s
    %(param_series_b)s

    Returns
    -------
    The sum known modulo ``t**min(A.order, B.order)``; valuations are aligned by
    zero padding and re-tightened when leading terms cancel.
    """
    order = min(A.order, B.order)
    lo = min(A.val, B.val)
    if lo >= order:
        return ls_zero(order)
    return LaurentSeries(
        lo, tuple(ls_coefficient(A, n) + ls_coefficient(B, n) for n in range(lo, order)), order
    )


def ls_scale(A: LaurentSeries, c: Scalar) -> LaurentSeries:
    """``c * A`` for a rational scalar ``c``."""
    c = as_rational(c)
    return LaurentSeries(A.val, tuple(c * a for a in A.coeffs), A.order)


def ls_neg(A: LaurentSeries) -> LaurentSeries:
    """``-A``."""
    return ls_scale(A, -1)


def ls_sub(A: LaurentSeries, B: LaurentSeries) -> LaurentSeries:
    """``A - B``."""
    return ls_add(A, ls_neg(B))


@series_dsp.dedent
def ls_mul(A: LaurentSeries, B: LaurentSeries) -> LaurentSeries:
    """Cauchy product.

    Parameters
    ----------
    %(param_series)s
    %(param_series_b)s

    Returns
    -------
    The product, known modulo ``t**min(A.order + B.val, B.order + A.val)``.
    """
    order = min(A.order + B.val, B.order + A.val)
    if A.is_zero() or B.is_zero():
        return ls_zero(order)
    val = A.val + B.val
    n_terms = order - val
    out = [Fraction(0)] * max(n_terms, 0)
    for i, a in enumerate(A.coeffs[:n_terms]):
        for j, b in enumerate(B.coeffs[: n_terms - i]):
            out[i + j] += a * b
    return LaurentSeries(val, tuple(out), order)


def ls_pow(A: LaurentSeries, k: int) -> LaurentSeries:
    """Natural power ``A**k`` by repeated :func:`ls_mul`; ``A**0`` is 1 modulo ``t**A.order``."""
    if k < 0:
        raise ValueError(f"ls_pow takes a natural exponent, got {k}.")
    result = ls_one(A.order)
    for _ in range(k):
        result = ls_mul(result, A)
    return result


def ls_inv(A: LaurentSeries) -> LaurentSeries:
    """Multiplicative inverse.

    Writes ``A = t**v * u`` with ``u(0) != 0``, inverts the unit part by the linear
    recurrence ``b_0 = 1/u_0``, ``b_n = -(u_1 b_{n-1} + ... + u_n b_0) / u_0``, and
    returns ``t**(-v) * b``. The unit part is known to ``A.order - v`` terms, so the
    inverse is known modulo ``t**(A.order - 2v)``.

    Raises
    ------
    ZeroDivisionError
        If ``A`` is the zero series.
    """
    if A.is_zero():
        raise ZeroDivisionError("the zero series has no inverse.")
    v = A.val
    u = A.coeffs
    n_terms = A.order - v
    u0_inv = 1 / u[0]
    b = [u0_inv]
    for n in range(1, n_terms):
        acc = Fraction(0)
        for i in range(1, min(n, len(u) - 1) + 1):
            acc += u[i] * b[n - i]
        b.append(-acc * u0_inv)
    return LaurentSeries(-v, tuple(b), A.order - 2 * v)


def ls_derivative(A: LaurentSeries) -> LaurentSeries:
    """Termwise ``d/dt``; known modulo ``t**(A.order - 1)``."""
    return LaurentSeries(
        A.val - 1, tuple((A.val + i) * c for i, c in enumerate(A.coeffs)), A.order - 1
    )


def ls_integrate(A: LaurentSeries) -> LaurentSeries:
    """Termwise antiderivative with zero constant term; known modulo ``t**(A.order + 1)``.

    Raises
    ------
    ValueError
        If ``A`` has a nonzero ``t**-1`` coefficient (its antiderivative is not a
        Laurent series).
    """
    if A.order > -1 and ls_coefficient(A, -1) != 0:
        raise ValueError("cannot integrate a series with a nonzero t^-1 coefficient.")
    return LaurentSeries(
        A.val + 1,
        tuple(c / (A.val + i + 1) if c else c for i, c in enumerate(A.coeffs)),
        A.order + 1,
    )


def ls_exp_linear(c: Scalar, order: Optional[int] = None) -> LaurentSeries:
    """Series of ``exp(c t)``: the coefficient of ``t**n`` is ``c**n / n!`` for ``n < order``."""
    order = settings.series_order if order is None else order
    if order < 1:
        raise ValueError(f"order must be at least 1, got {order}.")
    c = as_rational(c)
    return LaurentSeries(0, tuple(c**n / factorial(n) for n in range(order)), order)


def ls_log_unit(A: LaurentSeries) -> LaurentSeries:
    """Logarithm of a series with constant term 1, with zero constant term.

    Computed as the antiderivative of ``A' / A``; the derivative loses one order and
    the antiderivative regains it, so the result is known modulo ``t**A.order``.

    Raises
    ------
    ValueError
        If ``A`` has a pole or its constant term is not 1.
    """
    if A.is_zero() or A.val != 0 or A.coeffs[0] != 1:
        raise ValueError("ls_log_unit needs valuation 0 and constant term 1.")
    return ls_integrate(ls_mul(ls_derivative(A), ls_inv(A)))


def em1_pow(k: int, order: Optional[int] = None) -> LaurentSeries:
    """``(exp(t) - 1)**k`` known modulo ``t**order``.

    The valuation is ``k`` and the coefficient of ``t**n`` equals ``k! S(n, k) / n!``
    with ``S`` the Stirling numbers of the second kind.

    Raises
    ------
    ValueError
        If ``order <= k``.
    """
    order = settings.series_order if order is None else order
    if order <= k:
        raise ValueError(f"em1_pow({k}) needs order > {k}, got {order}.")
    em1 = ls_exp_linear(1, order) - 1
    return ls_truncate(ls_pow(em1, k), order)


def ls_render(A: LaurentSeries) -> str:
    """``[(exponent,"num/den"), ...] (mod t^order)``, zero coefficients omitted."""
    pairs = ",".join(
        f'({A.val + i},"{render_rational(c)}")' for i, c in enumerate(A.coeffs) if c != 0
    )
    return f"[{pairs}] (mod t^{A.order})"
