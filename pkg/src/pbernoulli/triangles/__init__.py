from ._geometric import geometric_poly
from ._stirling import (
    Triangle,
    get_triangle,
    stirling1_unsigned,
    stirling2,
    triangle_row,
    triangle_rows,
)

__all__ = [
    "Triangle",
    "get_triangle",
    "stirling2",
    "stirling1_unsigned",
    "geometric_poly",
    "triangle_row",
    "triangle_rows",
]
