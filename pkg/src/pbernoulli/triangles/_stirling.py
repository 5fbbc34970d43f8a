import logging
import threading
from typing import Literal

import pandas as pd

from pbernoulli._types import TriangleKind

logger = logging.getLogger(__name__)


class Triangle:
    """Memoized ragged table of Stirling numbers.

    Row ``n`` holds the entries ``k = 0..n``. Rows are produced by the triangular
    recurrences

    * ``stirling2``: ``S(n, k) = S(n-1, k-1) + k S(n-1, k)``
    * ``stirling1_unsigned``: ``c(n, k) = c(n-1, k-1) + (n-1) c(n-1, k)``

    seeded with row 0 equal to ``[1]``. Rows are appended under a lock, so a single
    instance can be shared between threads; every reader sees the same values
    whatever the interleaving.

    Parameters
    ----------
    kind
        Which triangle to build.
    """

    def __init__(self, kind: Literal["stirling2", "stirling1_unsigned"]):
        if kind not in ("stirling2", "stirling1_unsigned"):
            raise ValueError(f"unknown triangle kind {kind!r}.")
        self.kind = kind
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._rows)

    def _extend_to(self, n: int):
        with self._lock:
            while len(self._rows) <= n:
                m = len(self._rows)
                prev = self._rows[-1]
                row = [0] * (m + 1)
                for k in range(1, m + 1):
                    left = prev[k - 1]
                    up = prev[k] if k < m else 0
                    weight = k if self.kind == "stirling2" else m - 1
                    row[k] = left + weight * up
                self._rows.append(tuple(row))
            logger.debug(f"{self.kind} triangle extended to {len(self._rows)} rows")

    def row(self, n: int) -> tuple[int, ...]:
        """Row ``n`` as a tuple of ``n + 1`` nonnegative integers."""
        if n < 0:
            raise ValueError(f"row index must be natural, got {n}.")
        if n >= len(self._rows):
            self._extend_to(n)
        return self._rows[n]

    def __call__(self, n: int, k: int) -> int:
        if k < 0 or k > n:
            return 0
        return self.row(n)[k]

    def to_frame(self, nmax: int) -> pd.DataFrame:
        """Long-format frame with columns ``n, k, value`` for rows ``0..nmax``."""
        records = [
            {"n": n, "k": k, "value": value}
            for n in range(nmax + 1)
            for k, value in enumerate(self.row(n))
        ]
        return pd.DataFrame.from_records(records, columns=["n", "k", "value"])


_TRIANGLES = {
    "stirling2": Triangle("stirling2"),
    "stirling1_unsigned": Triangle("stirling1_unsigned"),
}


def get_triangle(kind: TriangleKind) -> Triangle:
    """Shared memoized :class:`Triangle` of the given kind."""
    if kind not in _TRIANGLES:
        raise ValueError(f"unknown triangle kind {kind!r}; expected one of {list(_TRIANGLES)}.")
    return _TRIANGLES[kind]


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind ``{n, k}``.

    Counts partitions of an ``n``-set into ``k`` nonempty blocks; ``{0, 0} = 1`` and
    the value is 0 when ``k > n``.
    """
    return _TRIANGLES["stirling2"](n, k)


def stirling1_unsigned(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind ``[n, k]``.

    Counts permutations of ``n`` elements with ``k`` cycles. Callers needing the
    signed convention apply ``(-1)**(n - k)`` or ``(-1)**k`` themselves.
    """
    return _TRIANGLES["stirling1_unsigned"](n, k)


def triangle_row(kind: TriangleKind, n: int) -> tuple[int, ...]:
    """Row ``n`` of the named triangle."""
    return get_triangle(kind).row(n)


def triangle_rows(kind: TriangleKind, nmax: int) -> list[tuple[int, ...]]:
    """Rows ``0..nmax`` of the named triangle."""
    triangle = get_triangle(kind)
    return [triangle.row(n) for n in range(nmax + 1)]
