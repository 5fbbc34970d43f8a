import logging
from functools import lru_cache
from typing import Optional

from pbernoulli._settings import settings
from pbernoulli.numerics import binomial, harmonic
from pbernoulli.series import (
    LaurentSeries,
    Polynomial,
    em1_pow,
    ls_exp_linear,
    ls_from_polynomial,
    ls_inv,
    ls_monomial,
    ls_truncate,
)

logger = logging.getLogger(__name__)


def egf_closed_form(p: int, order: Optional[int] = None) -> LaurentSeries:
    """Closed-form exponential generating function of ``B(n, p)``.

    Assembles, in truncated Laurent arithmetic,

    ``(p + 1)(t - H_p) exp(p t) / (exp(t) - 1)**(p + 1)
    + (p + 1) sum_{k=1..p} C(p, k) H_k / (exp(t) - 1)**(k + 1)``.

    Each summand has a pole of order ``p + 1`` or ``k + 1`` at ``t = 0``; in the
    sum every principal-part coefficient cancels, so the result has valuation
    ``>= 0`` and ``n! [t**n]`` equals ``B(n, p)``.

    Inverting ``(exp(t) - 1)**(k + 1)`` loses ``2 (k + 1)`` orders, so the pieces
    are built at ``order + 2 (p + 1)`` and the sum is truncated back.

    Parameters
    ----------
    p
        Order, ``p >= 0``.
    order
        Truncation order of the returned series; must exceed ``p + 2``. Defaults to
        `pbernoulli.settings.series_order`.
    """
    order = settings.series_order if order is None else order
    if p < 0:
        raise ValueError(f"the closed-form generating function needs p >= 0, got {p}.")
    if order <= p + 2:
        raise ValueError(f"egf_closed_form({p}) needs order > {p + 2}, got {order}.")
    return _egf_closed_form(p, order)


@lru_cache(maxsize=None)
def _egf_closed_form(p: int, order: int) -> LaurentSeries:
    working = order + 2 * (p + 1)
    logger.debug(f"building closed-form EGF for p={p} at working order {working}")

    t_minus_hp = ls_from_polynomial(Polynomial((-harmonic(p), 1)), working)
    main = (p + 1) * t_minus_hp * ls_exp_linear(p, working) * ls_inv(em1_pow(p + 1, working))
    tail = ls_monomial(0, 0, working)
    for k in range(1, p + 1):
        tail = tail + binomial(p, k) * harmonic(k) * ls_inv(em1_pow(k + 1, working))
    return ls_truncate(main + (p + 1) * tail, order)


def displayed_egf(p: int, order: Optional[int] = None) -> LaurentSeries:
    """The two generating functions written out by hand for ``p = 1, 2``.

    * ``p = 1``: ``2 [(t - 1) exp(t) + 1] / (exp(t) - 1)**2``
    * ``p = 2``: ``3 [(2t - 3) exp(2t) + 4 exp(t) - 1] / (2 (exp(t) - 1)**3)``

    Built from their numerators and denominators only, independently of
    :func:`egf_closed_form`.
    """
    order = settings.series_order if order is None else order
    working = order + 2 * (p + 1)
    if p == 1:
        t_minus_1 = ls_from_polynomial(Polynomial((-1, 1)), working)
        numerator = 2 * (t_minus_1 * ls_exp_linear(1, working) + 1)
        denominator = em1_pow(2, working)
    elif p == 2:
        two_t_minus_3 = ls_from_polynomial(Polynomial((-3, 2)), working)
        numerator = 3 * (
            two_t_minus_3 * ls_exp_linear(2, working) + 4 * ls_exp_linear(1, working) - 1
        )
        denominator = 2 * em1_pow(3, working)
    else:
        raise ValueError(f"closed forms are displayed for p in (1, 2) only, got {p}.")
    return ls_truncate(numerator * ls_inv(denominator), order)
