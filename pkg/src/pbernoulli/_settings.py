import logging
from typing import Literal, Union

from rich.console import Console
from rich.logging import RichHandler

pbernoulli_logger = logging.getLogger("pbernoulli")


class PBernoulliConfig:
    """Config manager for pbernoulli.

    Examples
    --------
    To set the default truncation order of generating-function series

    >>> pbernoulli.settings.series_order = 40

    To evaluate verification cells on four worker threads

    >>> pbernoulli.settings.n_jobs = 4

    To show a progress bar while verifying, choose one of "rich", "tqdm"

    >>> pbernoulli.settings.progress_bar = True
    >>> pbernoulli.settings.progress_bar_style = "rich"

    To set the verbosity

    >>> import logging
    >>> pbernoulli.settings.verbosity = logging.DEBUG
    """

    def __init__(
        self,
        verbosity: int = logging.INFO,
        series_order: int = 32,
        n_jobs: int = 1,
        progress_bar: bool = False,
        progress_bar_style: Literal["rich", "tqdm"] = "tqdm",
    ):
        self.series_order = series_order
        self.n_jobs = n_jobs
        self.progress_bar = progress_bar
        if progress_bar_style not in ["rich", "tqdm"]:
            raise ValueError("Progress bar style must be in ['rich', 'tqdm']")
        self.progress_bar_style = progress_bar_style
        self.verbosity = verbosity

    @property
    def series_order(self) -> int:
        """Default truncation order ``K`` of generating-function series (default 32).

        Series built with this order are known modulo ``t**K``.
        """
        return self._series_order

    @series_order.setter
    def series_order(self, order: int):
        if not isinstance(order, int) or order < 1:
            raise ValueError(f"series_order must be a positive integer, got {order!r}.")
        self._series_order = order

    @property
    def n_jobs(self) -> int:
        """Number of threads used to evaluate verification cells (default 1)."""
        return self._n_jobs

    @n_jobs.setter
    def n_jobs(self, n_jobs: int):
        if not isinstance(n_jobs, int) or n_jobs < 1:
            raise ValueError(f"n_jobs must be a positive integer, got {n_jobs!r}.")
        self._n_jobs = n_jobs

    @property
    def progress_bar(self) -> bool:
        """Whether harness loops display a progress bar."""
        return self._progress_bar

    @progress_bar.setter
    def progress_bar(self, show: bool):
        self._progress_bar = bool(show)

    @property
    def progress_bar_style(self) -> str:
        """Library to use for progress bar."""
        return self._pbar_style

    @progress_bar_style.setter
    def progress_bar_style(self, pbar_style: Literal["tqdm", "rich"]):
        """Library to use for progress bar."""
        self._pbar_style = pbar_style

    @property
    def verbosity(self) -> int:
        """Verbosity level (default `logging.INFO`)."""
        return self._verbosity

    @verbosity.setter
    def verbosity(self, level: Union[str, int]):
        """Sets logging configuration for pbernoulli based on chosen level of verbosity.

        If "pbernoulli" logger has no handler, add a RichHandler writing to stderr.
        Else, set its level to `level`.

        Parameters
        ----------
        level
            Sets "pbernoulli" logging level to `level`
        """
        self._verbosity = level
        pbernoulli_logger.setLevel(level)
        if len(pbernoulli_logger.handlers) == 0:
            console = Console(stderr=True)
            ch = RichHandler(level=level, show_path=False, console=console, show_time=False)
            formatter = logging.Formatter("%(message)s")
            ch.setFormatter(formatter)
            pbernoulli_logger.addHandler(ch)
        else:
            pbernoulli_logger.setLevel(level)

    def reset_logging_handler(self):
        """Resets "pbernoulli" log handler to a basic RichHandler().

        This is useful if piping outputs to a file.
        """
        for handler in list(pbernoulli_logger.handlers):
            pbernoulli_logger.removeHandler(handler)
        ch = RichHandler(
            level=self._verbosity,
            show_path=False,
            console=Console(stderr=True),
            show_time=False,
        )
        formatter = logging.Formatter("%(message)s")
        ch.setFormatter(formatter)
        pbernoulli_logger.addHandler(ch)


settings = PBernoulliConfig()
