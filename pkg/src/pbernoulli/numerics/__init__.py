from ._combinatorics import binomial, factorial, harmonic
from ._rational import as_rational, parse_rational, rational, render_rational

__all__ = [
    "rational",
    "as_rational",
    "parse_rational",
    "render_rational",
    "factorial",
    "binomial",
    "harmonic",
]
