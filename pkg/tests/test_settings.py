import logging

import pytest
from rich.logging import RichHandler

import pbernoulli
from pbernoulli import settings
from pbernoulli._settings import PBernoulliConfig
from pbernoulli.harness import verify_theorem2
from pbernoulli.series import ls_add
from pbernoulli.utils import track


def test_defaults():
    config = PBernoulliConfig()
    assert config.series_order == 32
    assert config.n_jobs == 1
    assert config.progress_bar is False


@pytest.mark.parametrize("value", [0, -3, 2.5])
def test_series_order_is_validated(value):
    with pytest.raises(ValueError):
        settings.series_order = value


@pytest.mark.parametrize("value", [0, "4"])
def test_n_jobs_is_validated(value):
    with pytest.raises(ValueError):
        settings.n_jobs = value


def test_progress_bar_style_is_validated():
    with pytest.raises(ValueError):
        PBernoulliConfig(progress_bar_style="ascii")


def test_verbosity_sets_the_package_logger():
    settings.verbosity = logging.DEBUG
    logger = logging.getLogger("pbernoulli")
    assert logger.level == logging.DEBUG
    assert logger.handlers
    assert not logger.propagate


def test_reset_logging_handler_leaves_one_rich_handler():
    logger = logging.getLogger("pbernoulli")
    logger.addHandler(logging.NullHandler())
    settings.reset_logging_handler()
    assert len(logger.handlers) == 1
    assert isinstance(logger.handlers[0], RichHandler)
    logger.removeHandler(logger.handlers[0])
    settings.reset_logging_handler()
    assert len(logger.handlers) == 1


def test_series_order_default_is_used():
    settings.series_order = 10
    assert pbernoulli.bernoulli.egf_closed_form(1).order == 10


@pytest.mark.parametrize("style", ["rich", "tqdm"])
def test_track_yields_every_item(style):
    assert list(track(range(5), style=style, disable=False)) == list(range(5))
    assert list(track(range(5), style=style)) == list(range(5))


def test_progress_bar_in_the_harness():
    settings.progress_bar = True
    assert verify_theorem2(5, 2).all_pass


def test_shared_parameter_docs_are_filled_in():
    assert "Largest index ``n`` covered" in verify_theorem2.__doc__
    assert "%(" not in verify_theorem2.__doc__
    assert "Truncated Laurent series" in ls_add.__doc__
