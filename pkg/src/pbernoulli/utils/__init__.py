from ._docstrings import harness_dsp, series_dsp
from ._track import track

__all__ = [
    "track",
    "harness_dsp",
    "series_dsp",
]
