from ._egf import displayed_egf, egf_closed_form
from ._integral import (
    geometric_integral_closed_form,
    geometric_integral_gf,
    iterated_antiderivative,
    iterated_integral,
)
from ._routes import (
    bernoulli,
    pbernoulli_egf_route,
    pbernoulli_explicit,
    pbernoulli_value,
    pbernoulli_via_stirling1,
)
from ._table import PBTable, pbernoulli_table

__all__ = [
    "bernoulli",
    "pbernoulli_explicit",
    "pbernoulli_via_stirling1",
    "pbernoulli_egf_route",
    "pbernoulli_value",
    "PBTable",
    "pbernoulli_table",
    "egf_closed_form",
    "displayed_egf",
    "iterated_antiderivative",
    "iterated_integral",
    "geometric_integral_gf",
    "geometric_integral_closed_form",
]
