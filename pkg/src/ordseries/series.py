"""Series and Frame containers plus the core subsetting/replacement operations.

Both containers are immutable.  A :class:`Series` is one named column of
optional reals; a :class:`Frame` is several named columns.  Either way the
rows are paired with a strictly increasing index of a single kind, and an
optional regularity annotation (``frequency``) may be attached.

Row positions taken by :func:`take_positions` are 1-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from . import printing
from ._grid import complies, projections
from .errors import (BoundsError, DuplicateIndex, EmptyError, FrequencyMismatch,
                     KindMismatch, OrderError, ShapeError)
from .index import IndexValue, IntIndex, RealIndex, as_index, kind_of

__all__ = [
    "Indexed", "Series", "Frame", "Summary", "Stats",
    "make_series", "make_frame", "take_positions", "take_index",
    "coredata", "set_coredata", "index_of", "set_index", "time_of", "set_time",
    "start_of", "end_of", "window", "set_window", "head_n", "tail_n",
    "summarize", "render", "PRINT_STYLES", "quantile7",
]

Cell = "float | None"
PRINT_STYLES = ("horizontal", "vertical", "plain")
_KEEP = object()


def _cell(x) -> float | None:
    if x is None:
        return None
    return float(x)


def _cells_equal(a: tuple, b: tuple) -> bool:
    if len(a) != len(b):
        return False
    for x, y in zip(a, b):
        if x is None or y is None:
            if x is not y:
                return False
        elif x != y and not (math.isnan(x) and math.isnan(y)):
            return False
    return True


class Indexed:
    """Shared implementation of :class:`Series` and :class:`Frame`."""

    __slots__ = ("_index", "_columns", "_names", "_frequency")

    def _init(self, index, columns, names, frequency):
        index = tuple(index)
        kind_of(index)
        for a, b in zip(index, index[1:]):
            if not a < b:
                raise OrderError(f"index not strictly increasing at {b!s}")
        columns = tuple(tuple(_cell(x) for x in col) for col in columns)
        names = tuple(str(n) for n in names)
        if len(names) != len(columns):
            raise ShapeError(f"{len(names)} names for {len(columns)} columns")
        if not columns and index:
            raise ShapeError("an index without data columns is not supported")
        if len(set(names)) != len(names) or any(not n for n in names):
            raise ShapeError(f"column names must be unique and nonempty: {names}")
        for n, col in zip(names, columns):
            if len(col) != len(index):
                raise ShapeError(f"column {n!r} has {len(col)} cells for {len(index)} index values")
        if frequency is not None:
            frequency = float(frequency)
            if not frequency > 0:
                raise FrequencyMismatch(f"frequency must be positive, got {frequency}")
            if not complies(index, frequency):
                raise FrequencyMismatch(f"index does not comply with frequency {frequency:g}")
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_columns", columns)
        object.__setattr__(self, "_names", names)
        object.__setattr__(self, "_frequency", frequency)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @property
    def index(self) -> tuple:
        return self._index

    @property
    def columns(self) -> tuple:
        return self._columns

    @property
    def names(self) -> tuple:
        return self._names

    @property
    def frequency(self) -> float | None:
        return self._frequency

    @property
    def kind(self) -> type[IndexValue] | None:
        return type(self._index[0]) if self._index else None

    @property
    def nrow(self) -> int:
        return len(self._index)

    @property
    def ncol(self) -> int:
        return len(self._columns)

    def __len__(self):
        return len(self._index)

    def rows(self):
        """Iterate over ``(index value, tuple of cells)``."""
        for i, idx in enumerate(self._index):
            yield idx, tuple(col[i] for col in self._columns)

    def _derive(self, index=None, columns=None, names=None, frequency=_KEEP):
        index = self._index if index is None else index
        columns = self._columns if columns is None else columns
        names = self._names if names is None else names
        frequency = self._frequency if frequency is _KEEP else frequency
        if isinstance(self, Series) and len(columns) == 1:
            return Series._raw(index, columns, names, frequency)
        return Frame._raw(index, columns, names, frequency)

    def with_frequency(self, frequency: float | None):
        return self._derive(frequency=frequency)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return (self._index == other._index and self._names == other._names
                and self._frequency == other._frequency
                and all(_cells_equal(a, b) for a, b in zip(self._columns, other._columns)))

    __hash__ = None

    def __str__(self):
        return render(self)

    def _binop(self, other, op, reflected=False):
        from .arith import zip_op
        return zip_op(other, self, op) if reflected else zip_op(self, other, op)

    def __add__(self, other):
        return self._binop(other, "add")

    def __radd__(self, other):
        return self._binop(other, "add", True)

    def __sub__(self, other):
        return self._binop(other, "sub")

    def __rsub__(self, other):
        return self._binop(other, "sub", True)

    def __mul__(self, other):
        return self._binop(other, "mul")

    def __rmul__(self, other):
        return self._binop(other, "mul", True)

    def __truediv__(self, other):
        return self._binop(other, "div")

    def __rtruediv__(self, other):
        return self._binop(other, "div", True)

    def __pow__(self, other):
        return self._binop(other, "pow")

    def __rpow__(self, other):
        return self._binop(other, "pow", True)

    def __neg__(self):
        return self._binop(-1.0, "mul")


class Series(Indexed):
    """One named column of optional reals on a strictly increasing index."""

    __slots__ = ()

    def __init__(self, index: Iterable, cells: Iterable, name: str = "x",
                 frequency: float | None = None):
        self._init([as_index(v) for v in index], [list(cells)], [name], frequency)

    @classmethod
    def _raw(cls, index, columns, names, frequency):
        obj = cls.__new__(cls)
        obj._init(index, columns, names, frequency)
        return obj

    @property
    def name(self) -> str:
        return self._names[0]

    @property
    def cells(self) -> tuple:
        return self._columns[0]

    def rename(self, name: str) -> "Series":
        return self._derive(names=(name,))

    def __repr__(self):
        return f"Series(name={self.name!r}, rows={self.nrow}, frequency={self.frequency})"


class Frame(Indexed):
    """Several named columns sharing one strictly increasing index.

    ``columns`` is either a mapping of name to cells or a sequence of cell
    sequences paired with ``names``.
    """

    __slots__ = ()

    def __init__(self, index: Iterable, columns, names: Sequence[str] | None = None,
                 frequency: float | None = None):
        if isinstance(columns, Mapping):
            if names is not None:
                raise ShapeError("give names either as mapping keys or as `names`")
            names = list(columns)
            columns = [list(c) for c in columns.values()]
        else:
            columns = [list(c) for c in columns]
            if names is None:
                names = [f"V{i + 1}" for i in range(len(columns))]
        self._init([as_index(v) for v in index], columns, names, frequency)

    @classmethod
    def _raw(cls, index, columns, names, frequency):
        obj = cls.__new__(cls)
        obj._init(index, columns, names, frequency)
        return obj

    def column(self, name: str) -> Series:
        try:
            j = self._names.index(name)
        except ValueError:
            raise KeyError(name) from None
        return Series._raw(self._index, (self._columns[j],), (name,), self._frequency)

    def __repr__(self):
        return (f"Frame(names={list(self.names)!r}, rows={self.nrow}, "
                f"frequency={self.frequency})")


def as_frame(s: Indexed) -> Frame:
    if isinstance(s, Frame):
        return s
    return Frame._raw(s.index, s.columns, s.names, s.frequency)


# construction --------------------------------------------------------------

def _collapse(index, columns, on_duplicate):
    order = sorted(range(len(index)), key=lambda i: index[i])
    out_index, groups = [], []
    for i in order:
        if out_index and index[i] == out_index[-1]:
            if on_duplicate == "error":
                raise DuplicateIndex(f"duplicate index value {index[i]!s}")
            groups[-1].append(i)
        else:
            out_index.append(index[i])
            groups.append([i])
    out_cols = []
    for col in columns:
        new = []
        for g in groups:
            if on_duplicate == "mean" and len(g) > 1:
                vals = [col[i] for i in g if col[i] is not None]
                new.append(math.fsum(vals) / len(vals) if vals else None)
            else:
                new.append(col[min(g)])
        out_cols.append(new)
    return out_index, out_cols


_DUP_POLICIES = ("error", "keep_first", "mean")


def make_series(name: str, pairs: Iterable[tuple], on_duplicate: str = "error",
                frequency: float | None = None) -> Series:
    """Build a series from unordered ``(index value, cell)`` pairs.

    ``on_duplicate`` is one of ``error`` (default), ``keep_first`` (first in
    input order wins) or ``mean`` (mean of the non-missing duplicates).
    """
    if on_duplicate not in _DUP_POLICIES:
        raise ValueError(f"on_duplicate must be one of {_DUP_POLICIES}")
    pairs = list(pairs)
    index = [as_index(p[0]) for p in pairs]
    kind_of(index)
    cells = [_cell(p[1]) for p in pairs]
    index, (cells,) = _collapse(index, [cells], on_duplicate)
    return Series._raw(index, (cells,), (name,), frequency)


def make_frame(index: Iterable, columns: Mapping[str, Sequence], on_duplicate: str = "error",
               frequency: float | None = None) -> Frame:
    """Build a frame from an unordered index and equally long columns."""
    if on_duplicate not in _DUP_POLICIES:
        raise ValueError(f"on_duplicate must be one of {_DUP_POLICIES}")
    index = [as_index(v) for v in index]
    kind_of(index)
    names = list(columns)
    cols = [[_cell(x) for x in columns[n]] for n in names]
    for n, c in zip(names, cols):
        if len(c) != len(index):
            raise ShapeError(f"column {n!r} has {len(c)} cells for {len(index)} index values")
    index, cols = _collapse(index, cols, on_duplicate)
    return Frame._raw(index, cols, names, frequency)


# subsetting ----------------------------------------------------------------

def _select_rows(s: Indexed, rows: Sequence[int]):
    cols = [tuple(col[i] for i in rows) for col in s.columns]
    return s._derive(index=[s.index[i] for i in rows], columns=cols)


def take_positions(s: Indexed, rows: Iterable[int] | None = None,
                   cols: Iterable[int | str] | None = None):
    """Select rows (1-based positions, any order) and, for frames, columns.

    Rows always come back in index order.  Columns may be given as 1-based
    positions or names and come back in the requested order.
    """
    n = s.nrow
    if rows is None:
        picked = list(range(n))
    else:
        picked = set()
        for r in rows:
            if isinstance(r, bool) or not isinstance(r, int) or not 1 <= r <= n:
                raise BoundsError(f"row position {r!r} outside 1..{n}")
            picked.add(r - 1)
        picked = sorted(picked)
    out = _select_rows(s, picked)
    if cols is None:
        return out
    js = []
    for c in cols:
        if isinstance(c, str):
            if c not in s.names:
                raise BoundsError(f"no column named {c!r}")
            js.append(s.names.index(c))
        elif isinstance(c, int) and not isinstance(c, bool) and 1 <= c <= s.ncol:
            js.append(c - 1)
        else:
            raise BoundsError(f"column position {c!r} outside 1..{s.ncol}")
    columns = [out.columns[j] for j in js]
    names = [out.names[j] for j in js]
    if isinstance(s, Series):
        return out._derive(columns=columns, names=names)
    return Frame._raw(out.index, columns, names, out.frequency)


def _coerce_at(s: Indexed, at) -> set:
    values = {as_index(v) for v in at}
    kind = s.kind
    for v in values:
        if kind is not None and type(v) is not kind:
            raise KindMismatch(f"cannot look up {v.kind_name} values in a {kind.kind_name} index")
    return values


def take_index(s: Indexed, at: Iterable):
    """Rows whose index matches a value of ``at``; unmatched values are ignored."""
    wanted = _coerce_at(s, at)
    return _select_rows(s, [i for i, v in enumerate(s.index) if v in wanted])


def head_n(s: Indexed, n: int):
    if n < 0:
        raise ValueError("n must be non-negative")
    return _select_rows(s, range(min(n, s.nrow)))


def tail_n(s: Indexed, n: int):
    if n < 0:
        raise ValueError("n must be non-negative")
    return _select_rows(s, range(s.nrow - min(n, s.nrow), s.nrow))


# data and index access -----------------------------------------------------

def coredata(s: Indexed):
    """The bare cells: a tuple for a series, a tuple of column tuples for a frame."""
    return s.cells if isinstance(s, Series) else s.columns


def _as_columns(s: Indexed, cells, n: int) -> list[list]:
    if isinstance(s, Series):
        cols = [list(cells)]
    else:
        cols = [list(c) for c in cells]
        if len(cols) != s.ncol:
            raise ShapeError(f"expected {s.ncol} columns, got {len(cols)}")
    for c in cols:
        if len(c) != n:
            raise ShapeError(f"replacement has {len(c)} cells, expected {n}")
    return cols


def set_coredata(s: Indexed, cells):
    return s._derive(columns=_as_columns(s, cells, s.nrow))


def index_of(s: Indexed) -> tuple:
    return s.index


def set_index(s: Indexed, index: Iterable):
    """Install a new index; the frequency annotation is kept only if still valid."""
    index = [as_index(v) for v in index]
    if len(index) != s.nrow:
        raise ShapeError(f"index has {len(index)} values for {s.nrow} rows")
    kind_of(index)
    for a, b in zip(index, index[1:]):
        if not a < b:
            raise OrderError(f"replacement index not strictly increasing at {b!s}")
    freq = s.frequency
    if freq is not None and not complies(index, freq):
        freq = None
    return s._derive(index=index, frequency=freq)


time_of = index_of
set_time = set_index


def start_of(s: Indexed) -> IndexValue:
    if not s.nrow:
        raise EmptyError("empty series has no start")
    return s.index[0]


def end_of(s: Indexed) -> IndexValue:
    if not s.nrow:
        raise EmptyError("empty series has no end")
    return s.index[-1]


def _window_rows(s: Indexed, at, start, end) -> list[int]:
    wanted = None if at is None else _coerce_at(s, at)
    start = None if start is None else as_index(start)
    end = None if end is None else as_index(end)
    rows = []
    for i, v in enumerate(s.index):
        if wanted is not None and v not in wanted:
            continue
        if start is not None and v < start:
            continue
        if end is not None and v > end:
            continue
        rows.append(i)
    return rows


def window(s: Indexed, at: Iterable | None = None, start=None, end=None):
    """Rows with index in ``at`` (default: all) and between ``start`` and ``end``."""
    return _select_rows(s, _window_rows(s, at, start, end))


def set_window(s: Indexed, cells, at: Iterable | None = None, start=None, end=None):
    """Replace the cells of the rows :func:`window` would select."""
    rows = _window_rows(s, at, start, end)
    new = _as_columns(s, cells, len(rows))
    columns = [list(c) for c in s.columns]
    for col, repl in zip(columns, new):
        for i, x in zip(rows, repl):
            col[i] = x
    return s._derive(columns=columns)


# summaries -----------------------------------------------------------------

class Stats(NamedTuple):
    min: float | None
    q1: float | None
    median: float | None
    mean: float | None
    q3: float | None
    max: float | None


@dataclass(frozen=True)
class Summary:
    index: Stats
    columns: dict

    def __getitem__(self, name: str) -> Stats:
        return self.columns[name]


def quantile7(sorted_values: Sequence[float], p: float) -> float:
    """Linear-interpolation quantile, ``h = (n - 1) p`` on 0-based positions."""
    n = len(sorted_values)
    h = (n - 1) * p
    lo = math.floor(h)
    if lo + 1 >= n:
        return sorted_values[-1]
    return sorted_values[lo] + (h - lo) * (sorted_values[lo + 1] - sorted_values[lo])


def _stats(values: Iterable[float | None]) -> Stats:
    xs = sorted(x for x in values if x is not None)
    if not xs:
        return Stats(None, None, None, None, None, None)
    return Stats(xs[0], quantile7(xs, 0.25), quantile7(xs, 0.5),
                 math.fsum(xs) / len(xs), quantile7(xs, 0.75), xs[-1])


def summarize(s: Indexed) -> Summary:
    """Six-number summary per column plus one of the projected index."""
    return Summary(_stats(projections(s.index)),
                   {n: _stats(c) for n, c in zip(s.names, s.columns)})


# rendering -----------------------------------------------------------------

def _labels(s: Indexed) -> list[str]:
    """Index labels; plain numbers on an integer-frequency grid print as ``period(cycle)``."""
    f = s.frequency
    if f is None or f <= 1 or f != int(f) or s.kind not in (RealIndex, IntIndex):
        return [str(v) for v in s.index]
    f = int(f)
    out = []
    for v in s.index:
        p = v.to_number()
        period = math.floor(p + 1e-8)
        out.append(f"{period}({round((p - period) * f) % f + 1})")
    return out


def render(s: Indexed, style: str | None = None, width: int = printing.LINE_WIDTH) -> str:
    """Render as text: ``horizontal`` (series default), ``vertical`` (frame
    default) or ``plain`` (cells first, then the index)."""
    if style is None:
        style = "horizontal" if isinstance(s, Series) else "vertical"
    if style not in PRINT_STYLES:
        raise ValueError(f"unknown print style {style!r}")
    if s.nrow == 0:
        return "<empty series>"
    labels = _labels(s)
    flat = printing.format_cells([x for col in s.columns for x in col])
    n = s.nrow
    cols = [flat[j * n:(j + 1) * n] for j in range(s.ncol)]
    if style == "vertical":
        return printing.vertical(labels, s.names, cols)
    if style == "horizontal":
        if s.ncol == 1:
            return printing.horizontal(labels, cols[0], width)
        return "\n".join(f"{name}:\n" + printing.horizontal(labels, col, width)
                         for name, col in zip(s.names, cols))
    body = printing.vector(cols[0], width) if s.ncol == 1 else printing.matrix(s.names, cols)
    return body + "\nIndex:\n" + printing.vector(labels, width)
