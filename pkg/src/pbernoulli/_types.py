from fractions import Fraction
from typing import Literal, Union

Rational = Fraction
Scalar = Union[int, Fraction]
RouteName = Literal["explicit", "recurrence", "stirling1", "egf"]
TriangleKind = Literal["stirling2", "stirling1_unsigned"]
OutputFormat = Literal["plain", "json", "csv"]
