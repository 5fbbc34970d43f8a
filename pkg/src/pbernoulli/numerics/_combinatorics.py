import math
from fractions import Fraction
from functools import lru_cache

from pbernoulli._types import Rational


def factorial(n: int) -> int:
    """Exact ``n!``; ``0! = 1``."""
    if n < 0:
        raise ValueError(f"factorial is defined for natural n, got {n}.")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient ``C(n, k)``.

    Returns 0 whenever ``k < 0`` or ``k > n`` so that finite sums need no boundary
    handling.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def harmonic(n: int) -> Rational:
    """Harmonic number ``H_n = 1 + 1/2 + ... + 1/n`` with ``H_0 = 0``."""
    if n < 0:
        raise ValueError(f"harmonic is defined for natural n, got {n}.")
    return sum((Fraction(1, j) for j in range(1, n + 1)), Fraction(0))
