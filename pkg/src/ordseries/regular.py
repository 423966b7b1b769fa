"""Weakly and strictly regular series.

A series is *strictly* regular when all adjacent index gaps are equal and
*weakly* regular when its index lies on a fixed grid with some grid points
unobserved.  The grid is described by a frequency: observations per unit of
the index's numeric projection (4 for quarterly data indexed by fractional
years, 1 for daily dates, ...).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from . import printing
from ._grid import complies, near_integer, projections, tidy_frequency
from .errors import CapabilityError, EmptyError, NotRegular
from .index import REAL_EPS, IndexValue, RealIndex, as_index
from .series import Frame, Indexed, Series

__all__ = [
    "make_regular", "attach_frequency", "drop_frequency", "is_regular",
    "infer_frequency", "frequency", "deltat", "cycle",
    "RegularGrid", "to_grid", "from_grid", "render_grid", "MAX_INFERRED_FREQUENCY",
]

# frequencies above this (per projected unit) are never inferred
MAX_INFERRED_FREQUENCY = 366.0


def _grid_index(start: IndexValue, freq: float, n: int) -> list[IndexValue]:
    if not type(start).has_shift:
        raise CapabilityError(f"{start.kind_name} index does not support shifting")
    return [start.shift(k / freq) for k in range(n)]


def make_regular(cells, start, frequency: float = 1.0, name: str = "x"):
    """Regular series of ``cells`` starting at ``start``.

    ``cells`` is a flat sequence (giving a :class:`Series`) or a mapping of
    column name to cells (giving a :class:`Frame`).  A plain number as
    ``start`` is taken as a real index.
    """
    if not frequency > 0:
        raise ValueError(f"frequency must be positive, got {frequency!r}")
    if isinstance(start, (int, float)) and not isinstance(start, bool):
        start = RealIndex(start)
    start = as_index(start)
    if isinstance(cells, Mapping):
        names = list(cells)
        cols = [list(c) for c in cells.values()]
        n = len(cols[0]) if cols else 0
        return Frame._raw(_grid_index(start, frequency, n), cols, names, frequency)
    cells = list(cells)
    return Series._raw(_grid_index(start, frequency, len(cells)), (cells,), (name,), frequency)


def attach_frequency(s: Indexed, frequency: float):
    """Annotate ``s`` with ``frequency``; raises FrequencyMismatch if the index is off-grid."""
    return s.with_frequency(frequency)


def drop_frequency(s: Indexed):
    return s.with_frequency(None)


def _gaps(s: Indexed) -> list[float]:
    p = projections(s.index)
    return [b - a for a, b in zip(p, p[1:])]


def is_regular(s: Indexed, strict: bool = False) -> bool:
    """Regularity test.

    ``strict`` asks for all adjacent gaps equal.  Otherwise an annotated series
    is checked against its frequency, and an unannotated one must have every
    gap an integer multiple of the smallest gap.  Series with fewer than two
    rows are regular.
    """
    if s.nrow < 2:
        return True
    gaps = _gaps(s)
    if strict:
        g0 = gaps[0]
        return all(abs(g - g0) <= REAL_EPS * max(1.0, abs(g0)) for g in gaps)
    if s.frequency is not None:
        return complies(s.index, s.frequency)
    m = min(gaps)
    return all(near_integer(g / m) for g in gaps)


def _real_gcd(a: float, b: float) -> float | None:
    a, b = max(a, b), min(a, b)
    while True:
        q = a / b
        if near_integer(q):
            return b
        r = abs(a - round(q) * b)
        if 1.0 / r > MAX_INFERRED_FREQUENCY:
            return None
        a, b = b, r


def infer_frequency(s: Indexed) -> float | None:
    """Smallest frequency whose grid holds every index gap, or ``None``.

    The grid step is the (tolerant) gcd of the projected gaps.  Frequencies
    above ``MAX_INFERRED_FREQUENCY`` are reported as ``None``.  The
    annotation, if any, is ignored.
    """
    if s.nrow < 2:
        return None
    gaps = _gaps(s)
    g = gaps[0]
    for x in gaps[1:]:
        g = _real_gcd(g, x)
        if g is None:
            return None
    f = tidy_frequency(1.0 / g)
    if f > MAX_INFERRED_FREQUENCY * (1 + REAL_EPS):
        return None
    if not all(near_integer(x * f) for x in gaps):
        return None
    return f


def frequency(s: Indexed) -> float:
    """The annotated frequency, else the inferred one for a weakly regular series."""
    if s.frequency is not None:
        return s.frequency
    if s.nrow >= 2 and is_regular(s):
        f = infer_frequency(s)
        if f is not None:
            return f
    raise NotRegular("series is not regular")


def deltat(s: Indexed) -> float:
    return 1.0 / frequency(s)


def cycle(s: Indexed) -> list[int]:
    """1-based position of each observation within its period.

    Periods start at whole units of the projected index (years for
    fractional-year and calendar-period indexes).
    """
    f = frequency(s)
    if not near_integer(f):
        raise NotRegular(f"cycle needs a whole-number frequency, got {f:g}")
    fi = int(round(f))
    out = []
    for p in projections(s.index):
        base = math.floor(p + REAL_EPS)
        out.append(int(round((p - base) * f)) % fi + 1)
    return out


@dataclass(frozen=True)
class RegularGrid:
    """Dense representation: step ``k`` sits at ``start`` shifted by ``k / frequency``."""

    start: IndexValue
    frequency: float
    columns: tuple
    names: tuple

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(tuple(c) for c in self.columns))
        object.__setattr__(self, "names", tuple(self.names))
        if len({len(c) for c in self.columns}) > 1:
            raise ValueError("grid columns differ in length")

    @property
    def length(self) -> int:
        return len(self.columns[0]) if self.columns else 0


def to_grid(s: Indexed) -> RegularGrid:
    """Dense grid from start to end, missing cells at unobserved steps."""
    if s.nrow == 0:
        raise EmptyError("cannot grid an empty series")
    if s.nrow == 1:
        f = s.frequency if s.frequency is not None else 1.0
        return RegularGrid(s.index[0], f, s.columns, s.names)
    if not is_regular(s):
        raise NotRegular("series is not weakly regular")
    f = frequency(s)
    p = projections(s.index)
    steps = [int(round((x - p[0]) * f)) for x in p]
    cols = []
    for col in s.columns:
        dense = [None] * (steps[-1] + 1)
        for k, x in zip(steps, col):
            dense[k] = x
        cols.append(dense)
    return RegularGrid(s.index[0], f, cols, s.names)


def from_grid(g: RegularGrid):
    """Explicit-index form of a grid; one column gives a Series."""
    index = _grid_index(g.start, g.frequency, g.length)
    if len(g.columns) == 1:
        return Series._raw(index, g.columns, g.names, g.frequency)
    return Frame._raw(index, g.columns, g.names, g.frequency)


_PERIOD_HEADERS = {
    4: ("Qtr1", "Qtr2", "Qtr3", "Qtr4"),
    12: ("Jan", "Feb", "Mar", "Apr", "May", "Jun",
         "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"),
}


def render_grid(g: RegularGrid) -> str:
    """Year-by-period table for quarterly/monthly single-column grids.

    Other grids are rendered as their explicit-index series.
    """
    f = int(round(g.frequency)) if near_integer(g.frequency) else None
    if f not in _PERIOD_HEADERS or len(g.columns) != 1 or not g.start.has_projection:
        return str(from_grid(g))
    first = int(round(g.start.to_number() * f))
    cells = printing.format_cells(g.columns[0])
    w = max(len(cells[0]), max(len(h) for h in _PERIOD_HEADERS[f]))
    rows: dict[int, list[str]] = {}
    for k, cell in enumerate(cells):
        year, pos = divmod(first + k, f)
        rows.setdefault(year, [""] * f)[pos] = cell
    labw = max(len(str(y)) for y in rows)
    lines = [" " * labw + "".join(" " + h.rjust(w) for h in _PERIOD_HEADERS[f])]
    for year, row in rows.items():
        lines.append(str(year).ljust(labw) + "".join(" " + c.rjust(w) for c in row))
    return "\n".join(lines)
