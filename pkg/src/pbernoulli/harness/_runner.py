import logging
from collections.abc import Sequence
from typing import Any, Callable, Optional

from pqdm.threads import pqdm

from pbernoulli._settings import settings
from pbernoulli.utils import track

from ._report import Cell, Report

logger = logging.getLogger(__name__)


def evaluate_cells(
    fn: Callable[..., Cell],
    params: Sequence[dict[str, Any]],
    description: str = "Verifying...",
    n_jobs: Optional[int] = None,
) -> list[Cell]:
    """Evaluate ``fn(**kwargs)`` for every entry of ``params``.

    With ``n_jobs > 1`` the cells run on a thread pool; results are returned in the
    order of ``params`` whichever finishes first.
    """
    n_jobs = settings.n_jobs if n_jobs is None else n_jobs
    if n_jobs > 1 and len(params) > 1:
        return list(
            pqdm(
                params,
                fn,
                n_jobs=n_jobs,
                argument_type="kwargs",
                exception_behaviour="immediate",
                disable=not settings.progress_bar,
                desc=description,
            )
        )
    return [fn(**kwargs) for kwargs in track(params, description=description)]


def build_report(
    identity: str,
    fn: Callable[..., Cell],
    params: Sequence[dict[str, Any]],
    notes: Optional[list[str]] = None,
) -> Report:
    """Run ``fn`` over ``params`` and collect the cells into a :class:`Report`."""
    cells = evaluate_cells(fn, params, description=f"{identity}...")
    report = Report(identity, cells, list(notes or []))
    logger.info(report.summary())
    for cell in report.failures:
        logger.warning(f"{identity} failed at {cell.describe()}")
    return report
