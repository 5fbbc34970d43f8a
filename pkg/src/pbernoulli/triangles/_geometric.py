from functools import lru_cache

from pbernoulli.numerics import factorial
from pbernoulli.series import Polynomial

from ._stirling import stirling2


@lru_cache(maxsize=None)
def geometric_poly(n: int) -> Polynomial:
    """Geometric polynomial ``w_n(x) = sum_k {n, k} k! x**k``.

    Its exponential generating function is ``1 / (1 - x (exp(t) - 1))``.

    Examples
    --------
    >>> str(geometric_poly(3))
    'x + 6*x^2 + 6*x^3'
    """
    if n < 0:
        raise ValueError(f"geometric_poly is defined for natural n, got {n}.")
    return Polynomial(tuple(stirling2(n, k) * factorial(k) for k in range(n + 1)))
