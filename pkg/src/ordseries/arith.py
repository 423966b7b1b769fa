"""Elementwise arithmetic on the index intersection, cumulatives, lag and diff."""

from __future__ import annotations

import math
import numbers
import operator
from dataclasses import dataclass
from typing import Callable

from .combine import _regularity
from .errors import ShapeError
from .index import kind_of
from .series import Frame, Indexed, Series

__all__ = [
    "BINOPS", "resolve_op", "zip_op", "map_cells", "cumulate", "CUMULATIVES",
    "Table", "transpose_to_table", "lag_by", "diff_by",
]


def _div(x: float, y: float) -> float:
    if y == 0:
        if x == 0 or math.isnan(x):
            return math.nan
        return math.copysign(math.inf, x) * math.copysign(1.0, y)
    return x / y


def _pow(x: float, y: float) -> float:
    try:
        r = x ** y
    except ZeroDivisionError:
        return math.inf
    except OverflowError:
        return math.inf
    if isinstance(r, complex):
        return math.nan
    return r


def _cmp(fn):
    return lambda x, y: 1.0 if fn(x, y) else 0.0


BINOPS: dict[str, Callable[[float, float], float]] = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": _div,
    "pow": _pow,
    "lt": _cmp(operator.lt),
    "le": _cmp(operator.le),
    "gt": _cmp(operator.gt),
    "ge": _cmp(operator.ge),
    "eq": _cmp(operator.eq),
    "ne": _cmp(operator.ne),
}
_SYMBOLS = {"+": "add", "-": "sub", "*": "mul", "/": "div", "^": "pow", "**": "pow",
            "<": "lt", "<=": "le", ">": "gt", ">=": "ge", "==": "eq", "!=": "ne"}


def resolve_op(op: str) -> Callable[[float, float], float]:
    """Look up a binary operation by name (``"add"``) or symbol (``"+"``)."""
    try:
        return BINOPS[_SYMBOLS.get(op, op)]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None


def _lift(fn):
    def lifted(x, y):
        if x is None or y is None:
            return None
        return fn(x, y)
    return lifted


def _is_scalar(x) -> bool:
    return isinstance(x, numbers.Real) and not isinstance(x, bool)


def zip_op(a, b, op: str):
    """Apply a binary operation cell by cell on the common index of ``a`` and ``b``.

    Either operand may be a scalar.  Frames combine column by column
    (positionally); a Series against a Frame is recycled across every frame
    column.  Comparisons give 1.0/0.0 cells; missing operands give missing.
    """
    fn = _lift(resolve_op(op))
    if _is_scalar(a) and _is_scalar(b):
        raise TypeError("zip_op needs at least one indexed operand")
    if _is_scalar(b):
        c = float(b)
        return a._derive(columns=[[fn(x, c) for x in col] for col in a.columns])
    if _is_scalar(a):
        c = float(a)
        return b._derive(columns=[[fn(c, y) for y in col] for col in b.columns])
    if not (isinstance(a, Indexed) and isinstance(b, Indexed)):
        raise TypeError(f"cannot combine {type(a).__name__} and {type(b).__name__}")
    kind_of(list(a.index[:1]) + list(b.index[:1]))
    if a.ncol != b.ncol and a.ncol != 1 and b.ncol != 1:
        raise ShapeError(f"column counts differ: {a.ncol} vs {b.ncol}")
    common = set(a.index).intersection(b.index)
    ra = [i for i, v in enumerate(a.index) if v in common]
    rb = [i for i, v in enumerate(b.index) if v in common]
    index = [a.index[i] for i in ra]
    ncol = max(a.ncol, b.ncol)
    columns = []
    for j in range(ncol):
        ca = a.columns[j if a.ncol > 1 else 0]
        cb = b.columns[j if b.ncol > 1 else 0]
        columns.append([fn(ca[i], cb[k]) for i, k in zip(ra, rb)])
    freq = _regularity([a, b], index)
    if isinstance(a, Series) and isinstance(b, Series):
        return Series._raw(index, columns, a.names, freq)
    names = a.names if a.ncol == ncol else b.names
    return Frame._raw(index, columns, names, freq)


def map_cells(s: Indexed, fn: Callable[[float], float]):
    """Apply a unary function to every non-missing cell; math domain errors give NaN."""
    def safe(x):
        if x is None:
            return None
        try:
            return float(fn(x))
        except (ValueError, ZeroDivisionError):
            return math.nan
        except OverflowError:
            return math.inf
    return s._derive(columns=[[safe(x) for x in col] for col in s.columns])


CUMULATIVES = {
    "sum": operator.add,
    "prod": operator.mul,
    "min": min,
    "max": max,
}


def cumulate(s: Indexed, kind: str = "sum"):
    """Running sum/prod/min/max per column.

    A missing cell yields a missing result at that row; the running state
    carries over it unchanged.
    """
    step = CUMULATIVES[kind]
    columns = []
    for col in s.columns:
        state = None
        out = []
        for x in col:
            if x is None:
                out.append(None)
                continue
            state = x if state is None else step(state, x)
            out.append(state)
        columns.append(out)
    return s._derive(columns=columns)


@dataclass(frozen=True)
class Table:
    """A plain labelled rectangular table with no index semantics."""

    row_labels: tuple
    col_labels: tuple
    rows: tuple

    def transpose(self) -> "Table":
        return Table(self.col_labels, self.row_labels,
                     tuple(tuple(r[j] for r in self.rows) for j in range(len(self.col_labels))))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_labels), len(self.col_labels)


def transpose_to_table(s: Indexed) -> Table:
    """Columns become rows; rendered index values become column labels."""
    return Table(tuple(s.names), tuple(str(v) for v in s.index),
                 tuple(tuple(col) for col in s.columns))


def lag_by(s: Indexed, k: int = 1, pad: bool = False):
    """Pair each index value with the observation ``k`` rows later.

    ``k = -1`` is the usual backward lag.  Rows left without a partner are
    dropped, or kept as missing with ``pad``.
    """
    n = s.nrow
    rows = [i for i in range(n) if pad or 0 <= i + k < n]
    columns = [[col[i + k] if 0 <= i + k < n else None for i in rows] for col in s.columns]
    return s._derive(index=[s.index[i] for i in rows], columns=columns)


def diff_by(s: Indexed, lag: int = 1, differences: int = 1, arithmetic: bool = True):
    """Lagged differences ``x[i] - x[i-lag]`` (or ratios when not ``arithmetic``),
    applied ``differences`` times; leading rows without a partner are dropped."""
    if lag < 1 or differences < 1:
        raise ValueError("lag and differences must be positive")
    fn = _lift(operator.sub if arithmetic else _div)
    index = list(s.index)
    columns = [list(c) for c in s.columns]
    for _ in range(differences):
        columns = [[fn(col[i], col[i - lag]) for i in range(lag, len(col))] for col in columns]
        index = index[lag:]
    return s._derive(index=index, columns=columns)
