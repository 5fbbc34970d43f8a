from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from pbernoulli._types import Rational, Scalar
from pbernoulli.numerics import as_rational, render_rational


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial over the rationals.

    ``coeffs[i]`` is the coefficient of ``x**i``. Trailing zeros are trimmed on
    construction, so the zero polynomial has an empty coefficient tuple and two
    polynomials are equal exactly when their coefficient tuples are.

    Parameters
    ----------
    coeffs
        Integers or fractions in ascending powers of ``x``.

    Examples
    --------
    >>> w2 = Polynomial((0, 1, 2))  # x + 2*x^2
    >>> str(poly_integrate(w2))
    '1/2*x^2 + 2/3*x^3'
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        coeffs = [as_rational(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def monomial(cls, c: Scalar, k: int) -> Polynomial:
        """``c * x**k``."""
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        """Whether this is the zero polynomial."""
        return not self.coeffs

    def __add__(self, other: Polynomial) -> Polynomial:
        return poly_add(self, other)

    def __neg__(self) -> Polynomial:
        return poly_scale(self, -1)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return poly_add(self, poly_scale(other, -1))

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return poly_mul(self, other)
        return poly_scale(self, other)

    __rmul__ = __mul__

    def __call__(self, x0: Scalar) -> Rational:
        return poly_eval(self, x0)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(render_rational(c))
            else:
                power = "x" if i == 1 else f"x^{i}"
                terms.append(power if c == 1 else f"{render_rational(c)}*{power}")
        return " + ".join(terms).replace("+ -", "- ")


def poly_add(P: Polynomial, Q: Polynomial) -> Polynomial:
    """Sum of two polynomials."""
    n = max(len(P.coeffs), len(Q.coeffs))
    a = P.coeffs + (Fraction(0),) * (n - len(P.coeffs))
    b = Q.coeffs + (Fraction(0),) * (n - len(Q.coeffs))
    return Polynomial(tuple(x + y for x, y in zip(a, b)))


def poly_scale(P: Polynomial, c: Scalar) -> Polynomial:
    """``c * P`` for a rational scalar ``c``."""
    c = as_rational(c)
    return Polynomial(tuple(c * a for a in P.coeffs))


def poly_mul(P: Polynomial, Q: Polynomial) -> Polynomial:
    """Product of two polynomials."""
    if P.is_zero() or Q.is_zero():
        return Polynomial()
    out = [Fraction(0)] * (len(P.coeffs) + len(Q.coeffs) - 1)
    for i, a in enumerate(P.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(Q.coeffs):
            out[i + j] += a * b
    return Polynomial(tuple(out))


def poly_derivative(P: Polynomial) -> Polynomial:
    """Formal derivative ``dP/dx``."""
    return Polynomial(tuple(i * c for i, c in enumerate(P.coeffs))[1:])


def poly_integrate(P: Polynomial) -> Polynomial:
    """Antiderivative with zero constant term.

    The coefficient of ``x**(i + 1)`` is ``coeffs[i] / (i + 1)``, so the result
    vanishes at ``x = 0`` and realizes ``integral from 0 to x of P``.
    """
    if P.is_zero():
        return P
    return Polynomial((Fraction(0),) + tuple(c / (i + 1) for i, c in enumerate(P.coeffs)))


def poly_eval(P: Polynomial, x0: Scalar) -> Rational:
    """Exact value of ``P`` at the rational point ``x0`` (Horner's scheme)."""
    x0 = as_rational(x0)
    acc = Fraction(0)
    for c in reversed(P.coeffs):
        acc = acc * x0 + c
    return acc
