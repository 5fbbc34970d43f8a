from ._laurent import (
    LaurentSeries,
    em1_pow,
    ls_add,
    ls_coefficient,
    ls_derivative,
    ls_exp_linear,
    ls_from_polynomial,
    ls_integrate,
    ls_inv,
    ls_log_unit,
    ls_monomial,
    ls_mul,
    ls_neg,
    ls_one,
    ls_pow,
    ls_render,
    ls_scale,
    ls_sub,
    ls_truncate,
    ls_zero,
)
from ._polynomial import (
    Polynomial,
    poly_add,
    poly_derivative,
    poly_eval,
    poly_integrate,
    poly_mul,
    poly_scale,
)

__all__ = [
    "Polynomial",
    "poly_add",
    "poly_derivative",
    "poly_eval",
    "poly_integrate",
    "poly_mul",
    "poly_scale",
    "LaurentSeries",
    "em1_pow",
    "ls_add",
    "ls_coefficient",
    "ls_derivative",
    "ls_exp_linear",
    "ls_from_polynomial",
    "ls_integrate",
    "ls_inv",
    "ls_log_unit",
    "ls_monomial",
    "ls_mul",
    "ls_neg",
    "ls_one",
    "ls_pow",
    "ls_render",
    "ls_scale",
    "ls_sub",
    "ls_truncate",
    "ls_zero",
]
