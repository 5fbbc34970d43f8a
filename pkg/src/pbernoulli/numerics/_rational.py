import re
from fractions import Fraction
from numbers import Integral

from pbernoulli._types import Rational

_RATIONAL_RE = re.compile(r"\A\s*(?P<num>[-+]?\d+)(?:/(?P<den>\d+))?\s*\Z")


def rational(num: int, den: int = 1) -> Rational:
    """Exact reduced fraction ``num/den``.

    The result always has a positive denominator coprime to the numerator, and zero
    is ``0/1``. All arithmetic on the returned value is exact.

    Parameters
    ----------
    num
        Numerator, an integer of any size.
    den
        Denominator, a nonzero integer of any size.

    Raises
    ------
    TypeError
        If either argument is not an integer (floats are rejected outright).
    ZeroDivisionError
        If ``den`` is zero.
    """
    if isinstance(num, bool) or not isinstance(num, Integral):
        raise TypeError(f"numerator must be an integer, got {type(num).__name__}.")
    if isinstance(den, bool) or not isinstance(den, Integral):
        raise TypeError(f"denominator must be an integer, got {type(den).__name__}.")
    if den == 0:
        raise ZeroDivisionError(f"rational({num}, 0): zero denominator.")
    return Fraction(int(num), int(den))


def render_rational(value: Rational) -> str:
    """Canonical text form: ``"num/den"``, or ``"num"`` when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Rational:
    """Parse the canonical text form produced by :func:`render_rational`.

    Raises
    ------
    ValueError
        If ``text`` is not an integer or an integer fraction.
    ZeroDivisionError
        If the denominator is zero.
    """
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"{text!r} is not a rational of the form 'num' or 'num/den'.")
    den = match.group("den")
    return rational(int(match.group("num")), 1 if den is None else int(den))


def as_rational(value) -> Rational:
    """Coerce an integer or fraction to a :class:`~fractions.Fraction`.

    Raises
    ------
    TypeError
        For floats, decimals and anything else that is not already exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Integral) and not isinstance(value, bool):
        return Fraction(int(value))
    raise TypeError(f"expected an exact integer or Fraction, got {type(value).__name__}.")
