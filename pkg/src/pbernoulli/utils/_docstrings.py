from docrep import DocstringProcessor

param_nmax = """\
nmax
    Largest index ``n`` covered (inclusive)."""

param_pmax = """\
pmax
    Largest order ``p`` covered (inclusive)."""

param_order = """\
order
    Truncation order: the series is known modulo ``t**order``. Defaults to
    `pbernoulli.settings.series_order`."""

param_table = """\
table
    Optional :class:`~pbernoulli.bernoulli.PBTable` supplying the ``B(n, p)`` values.
    If `None`, values come from the explicit sum. Passing a table built by the
    recurrence (possibly with a corrupted cell) is how route-dependent failures are
    localized."""

param_series = """\
A
    Truncated Laurent series in ``t``."""

param_series_b = """\
B
    Truncated Laurent series in ``t``."""

returns_report = """\
:class:`~pbernoulli.harness.Report` with one cell per parameter combination; failures are
recorded in cells, never raised."""


harness_dsp = DocstringProcessor(
    param_nmax=param_nmax,
    param_pmax=param_pmax,
    param_order=param_order,
    param_table=param_table,
    returns_report=returns_report,
)

series_dsp = DocstringProcessor(
    param_series=param_series,
    param_series_b=param_series_b,
    param_order=param_order,
)
