import logging
from fractions import Fraction
from typing import Optional

from pbernoulli._constants import SELECTOR_KEYS
from pbernoulli._settings import settings
from pbernoulli.bernoulli import PBTable, pbernoulli_table
from pbernoulli.utils import harness_dsp

from ._integrals import EQ12_MAX_P, verify_eq12, verify_proposition
from ._report import Report
from ._scaffolding import (
    verify_bernoulli,
    verify_geometric_egf,
    verify_recurrence,
    verify_routes,
    verify_stirling2_egf,
)
from ._theorems import (
    verify_corollary1,
    verify_corollary2,
    verify_displayed_egf,
    verify_special_sums,
    verify_theorem1,
    verify_theorem2,
)

logger = logging.getLogger(__name__)

EQ12_SAMPLES = (Fraction(-1), Fraction(1, 2), Fraction(0))
# egf_closed_form(2) needs order > 4
DISPLAYED_EGF_MIN_ORDER = 5


@harness_dsp.dedent
def run_suite(
    selector: str = SELECTOR_KEYS.ALL,
    nmax: int = 20,
    pmax: int = 6,
    order: Optional[int] = None,
    table: Optional[PBTable] = None,
) -> list[Report]:
    """Run the verifications named by ``selector``.

    ``"all"`` runs every selector in the order of `pbernoulli.SELECTOR_KEYS`.
    Lower bounds some identities need (``nmax >= 3`` for the special sums,
    ``pmax >= 1`` for the harmonic sum, ``p >= 2`` for the antiderivative identity)
    are raised silently rather than rejected.

    Parameters
    ----------
    selector
        One of `pbernoulli.SELECTOR_KEYS`.
    %(param_nmax)s
    %(param_pmax)s
    %(param_order)s
    %(param_table)s
        Defaults to a fresh recurrence table of the requested size.

    Returns
    -------
    Reports in a fixed order for a given selector.

    Raises
    ------
    ValueError
        If the selector is unknown or a size precondition fails.
    """
    if selector not in SELECTOR_KEYS:
        raise ValueError(f"unknown selector {selector!r}; expected one of {list(SELECTOR_KEYS)}.")
    order = settings.series_order if order is None else order
    if table is None:
        table = pbernoulli_table(nmax, pmax)
    logger.info(f"running {selector!r} with nmax={nmax}, pmax={pmax}, order={order}")

    def select(key: str) -> list[Report]:
        if key == SELECTOR_KEYS.THEOREM1:
            reports = [verify_theorem1(pmax, order)]
            if order >= DISPLAYED_EGF_MIN_ORDER:
                reports.append(verify_displayed_egf(order))
            else:
                reports[0].notes.append(
                    f"hand-written p = 1, 2 generating functions skipped: they need order >= "
                    f"{DISPLAYED_EGF_MIN_ORDER}, got {order}"
                )
            return reports
        if key == SELECTOR_KEYS.THEOREM2:
            return [verify_theorem2(nmax, pmax, table)]
        if key == SELECTOR_KEYS.COROLLARY1:
            return [verify_corollary1(nmax, pmax)]
        if key == SELECTOR_KEYS.COROLLARY2:
            return [verify_corollary2(max(pmax, 1))]
        if key == SELECTOR_KEYS.SPECIAL_SUMS:
            return [verify_special_sums(max(nmax, 3))]
        if key == SELECTOR_KEYS.EQ12:
            ps = range(2, max(2, min(pmax, EQ12_MAX_P)) + 1)
            return [verify_eq12(p, order, sample) for p in ps for sample in EQ12_SAMPLES]
        if key == SELECTOR_KEYS.PROPOSITION:
            return [verify_proposition(nmax, pmax)]
        if key == SELECTOR_KEYS.ROUTES:
            return [*verify_routes(nmax, pmax, table), verify_recurrence(table)]
        if key == SELECTOR_KEYS.SCAFFOLDING:
            return [
                verify_stirling2_egf(min(8, order - 1), order),
                verify_geometric_egf(nmax),
                verify_bernoulli(nmax),
            ]
        return [report for other in SELECTOR_KEYS[1:] for report in select(other)]

    return select(selector)
