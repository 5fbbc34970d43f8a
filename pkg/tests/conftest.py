import pytest

import pbernoulli


@pytest.fixture(autouse=True)
def restore_settings():
    """Undo changes to the global settings made by a test (CLI flags included)."""
    settings = pbernoulli.settings
    saved = (settings.series_order, settings.n_jobs, settings.progress_bar, settings.verbosity)
    yield settings
    settings.series_order, settings.n_jobs, settings.progress_bar = saved[:3]
    settings.verbosity = saved[3]
