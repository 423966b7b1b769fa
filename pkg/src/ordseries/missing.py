"""Missing-cell handling: omission, longest complete stretch, LOCF and interpolation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ._grid import projections
from .errors import ShapeError
from .series import Indexed, _select_rows

__all__ = ["FillPolicy", "drop_missing", "longest_complete_run", "fill_locf", "fill_interp"]


@dataclass(frozen=True)
class FillPolicy:
    """Options for the filling operations.

    ``keep_edges`` keeps rows that cannot be filled (leading for LOCF, leading
    and trailing for interpolation) as missing instead of dropping them.
    ``abscissa`` is ``"index"`` (numeric projection of the index),
    ``"positions"`` (1..n) or an explicit strictly increasing sequence.
    """

    keep_edges: bool = False
    abscissa: str | Sequence[float] = "index"


def _complete(s: Indexed, i: int) -> bool:
    return all(col[i] is not None for col in s.columns)


def drop_missing(s: Indexed, how: str = "any"):
    """Remove incomplete rows.

    ``how="any"`` drops rows with any missing cell; ``how="all"`` only rows
    where every column is missing.
    """
    if how == "any":
        keep = [i for i in range(s.nrow) if _complete(s, i)]
    elif how == "all":
        keep = [i for i in range(s.nrow) if any(col[i] is not None for col in s.columns)]
    else:
        raise ValueError(f"how must be 'any' or 'all', got {how!r}")
    return _select_rows(s, keep)


def longest_complete_run(s: Indexed):
    """The earliest longest block of consecutive complete rows."""
    best_start, best_len = 0, 0
    start = None
    for i in range(s.nrow + 1):
        ok = i < s.nrow and _complete(s, i)
        if ok and start is None:
            start = i
        elif not ok and start is not None:
            if i - start > best_len:
                best_start, best_len = start, i - start
            start = None
    return _select_rows(s, range(best_start, best_start + best_len))


def _trim(s: Indexed, columns, leading: bool, trailing: bool):
    n = s.nrow
    lo, hi = 0, n
    if leading:
        while lo < hi and any(c[lo] is None for c in columns):
            lo += 1
    if trailing:
        while hi > lo and any(c[hi - 1] is None for c in columns):
            hi -= 1
    rows = range(lo, hi)
    return s._derive(index=[s.index[i] for i in rows],
                     columns=[[c[i] for i in rows] for c in columns])


def fill_locf(s: Indexed, policy: FillPolicy = FillPolicy()):
    """Carry the last non-missing cell forward in each column.

    Leading rows still missing in some column are dropped unless
    ``policy.keep_edges``.
    """
    columns = []
    for col in s.columns:
        last = None
        out = []
        for x in col:
            if x is None:
                out.append(last)
            else:
                last = x
                out.append(x)
        columns.append(out)
    return _trim(s, columns, leading=not policy.keep_edges, trailing=False)


def _abscissa(s: Indexed, policy: FillPolicy) -> list[float]:
    a = policy.abscissa
    if isinstance(a, str):
        if a == "index":
            return projections(s.index)
        if a == "positions":
            return [float(i + 1) for i in range(s.nrow)]
        raise ValueError(f"unknown abscissa {a!r}")
    xs = [float(v) for v in a]
    if len(xs) != s.nrow:
        raise ShapeError(f"abscissa has {len(xs)} values for {s.nrow} rows")
    if any(not x0 < x1 for x0, x1 in zip(xs, xs[1:])):
        raise ShapeError("abscissa must be strictly increasing")
    return xs


def fill_interp(s: Indexed, policy: FillPolicy = FillPolicy()):
    """Linear interpolation of interior gaps over the chosen abscissa.

    Missing runs are bridged between their outer non-missing neighbours.
    Leading and trailing rows that stay missing are dropped unless
    ``policy.keep_edges``.
    """
    xs = _abscissa(s, policy)
    columns = []
    for col in s.columns:
        out = list(col)
        known = [i for i, y in enumerate(col) if y is not None]
        for a, b in zip(known, known[1:]):
            if b - a < 2:
                continue
            x0, x1, y0, y1 = xs[a], xs[b], col[a], col[b]
            for i in range(a + 1, b):
                t = (xs[i] - x0) / (x1 - x0)
                out[i] = y0 + t * (y1 - y0)
        columns.append(out)
    keep = not policy.keep_edges
    return _trim(s, columns, leading=keep, trailing=keep)
