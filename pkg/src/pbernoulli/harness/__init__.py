from ._integrals import verify_eq12, verify_proposition
from ._report import Cell, Report, compare
from ._runner import build_report, evaluate_cells
from ._scaffolding import (
    verify_bernoulli,
    verify_geometric_egf,
    verify_recurrence,
    verify_routes,
    verify_stirling2_egf,
)
from ._suite import run_suite
from ._theorems import (
    verify_corollary1,
    verify_corollary2,
    verify_displayed_egf,
    verify_special_sums,
    verify_theorem1,
    verify_theorem2,
)

__all__ = [
    "Cell",
    "Report",
    "compare",
    "build_report",
    "evaluate_cells",
    "verify_theorem1",
    "verify_displayed_egf",
    "verify_theorem2",
    "verify_corollary1",
    "verify_special_sums",
    "verify_corollary2",
    "verify_eq12",
    "verify_proposition",
    "verify_routes",
    "verify_recurrence",
    "verify_stirling2_egf",
    "verify_geometric_egf",
    "verify_bernoulli",
    "run_suite",
]
