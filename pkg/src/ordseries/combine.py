"""Row binding, index-aligned merging and aggregation onto coarser indexes."""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from typing import Callable, Sequence

from ._grid import common_frequency, complies
from .errors import KindMismatch, OverlapError, ShapeError
from .index import IndexValue, as_index, kind_of
from .series import Frame, Indexed, Series
from .stats import get_stat

__all__ = ["MergeSpec", "MERGE_MODES", "concat_rows", "merge_aligned", "merge", "aggregate_by"]

MERGE_MODES = ("union", "intersection", "left", "right")
_MODE_ALIASES = {"inter": "intersection", "outer": "union", "inner": "intersection"}


@dataclass(frozen=True)
class MergeSpec:
    """How :func:`merge_aligned` lines parts up.

    ``fill`` is written only into cells created by alignment; cells that were
    already missing stay missing.
    """

    mode: str = "union"
    fill: float | None = None

    def __post_init__(self):
        mode = _MODE_ALIASES.get(self.mode, self.mode)
        if mode not in MERGE_MODES:
            raise ValueError(f"merge mode must be one of {MERGE_MODES}, got {self.mode!r}")
        object.__setattr__(self, "mode", mode)


def _regularity(parts: Sequence[Indexed], index) -> float | None:
    freqs = [p.frequency for p in parts if p.frequency is not None]
    f = common_frequency(freqs)
    if f is not None and complies(index, f):
        return f
    return None


def _unique_names(names: list[str]) -> list[str]:
    counts: dict[str, int] = {}
    for n in names:
        counts[n] = counts.get(n, 0) + 1
    seen: dict[str, int] = {}
    out = []
    for n in names:
        if counts[n] > 1:
            seen[n] = seen.get(n, 0) + 1
            out.append(f"{n}_{seen[n]}")
        else:
            out.append(n)
    return out


def concat_rows(parts: Sequence[Indexed]):
    """Pool the rows of parts with disjoint indexes and equal columns.

    Zero-row parts are ignored.  The result is a Series when every part is one.
    """
    parts = list(parts)
    if not parts:
        raise ValueError("nothing to concatenate")
    live = [p for p in parts if p.nrow] or parts[:1]
    names = live[0].names
    for p in live[1:]:
        if p.names != names:
            raise ShapeError(f"column names differ: {list(names)} vs {list(p.names)}")
    index = [v for p in live for v in p.index]
    kind_of(index)
    if len(set(index)) != len(index):
        raise OverlapError("indexes of the parts overlap")
    order = sorted(range(len(index)), key=lambda i: index[i])
    columns = []
    for j in range(len(names)):
        pooled = [x for p in live for x in p.columns[j]]
        columns.append([pooled[i] for i in order])
    new_index = [index[i] for i in order]
    freq = _regularity(live, new_index)
    if all(isinstance(p, Series) for p in parts):
        return Series._raw(new_index, columns, names, freq)
    return Frame._raw(new_index, columns, names, freq)


def _is_scalar(x) -> bool:
    return x is None or (isinstance(x, numbers.Real) and not isinstance(x, bool))


def merge_aligned(parts: Sequence, spec: MergeSpec = MergeSpec(),
                  names: Sequence[str | None] | None = None) -> Frame:
    """Column-bind series, frames, scalars and bare vectors along their indexes.

    The result index is the union, intersection, first part's index (left)
    or last part's index (right) of the indexed parts.  Scalars fill the whole
    result index; bare vectors take the index of the first indexed part and
    must match its length.  Scalars and vectors are named ``V<k>`` (k = 1-based
    argument position) unless ``names`` says otherwise; repeated names get
    ``_1``, ``_2``, ... suffixes in argument order.
    """
    parts = list(parts)
    if names is not None and len(names) != len(parts):
        raise ShapeError("names must give one entry per part")
    indexed = [p for p in parts if isinstance(p, Indexed)]
    if not indexed:
        raise ShapeError("merge needs at least one indexed part")
    kind_of([v for p in indexed for v in p.index])

    if spec.mode == "union":
        keys = set()
        for p in indexed:
            keys.update(p.index)
        index = sorted(keys)
    elif spec.mode == "intersection":
        keys = set(indexed[0].index)
        for p in indexed[1:]:
            keys.intersection_update(p.index)
        index = sorted(keys)
    elif spec.mode == "left":
        index = list(indexed[0].index)
    else:
        index = list(indexed[-1].index)
    pos = {v: i for i, v in enumerate(index)}
    n = len(index)

    def place(src_index, cells):
        out = [spec.fill] * n
        for v, x in zip(src_index, cells):
            i = pos.get(v)
            if i is not None:
                out[i] = x
        return out

    out_names, columns = [], []
    for k, part in enumerate(parts):
        given = names[k] if names is not None else None
        if isinstance(part, Indexed):
            for j, col in enumerate(part.columns):
                columns.append(place(part.index, col))
                nm = part.names[j]
                if given is not None and isinstance(part, Series):
                    nm = given
                out_names.append(nm)
        elif _is_scalar(part):
            columns.append([None if part is None else float(part)] * n)
            out_names.append(given or f"V{k + 1}")
        else:
            cells = list(part)
            first = indexed[0]
            if len(cells) != first.nrow:
                raise ShapeError(f"bare vector of length {len(cells)} does not match "
                                 f"{first.nrow} rows of the first indexed part")
            columns.append(place(first.index, cells))
            out_names.append(given or f"V{k + 1}")
    return Frame._raw(index, columns, _unique_names(out_names), _regularity(indexed, index))


def merge(*parts, mode: str = "union", fill: float | None = None,
          names: Sequence[str | None] | None = None) -> Frame:
    """Keyword-friendly wrapper around :func:`merge_aligned`."""
    return merge_aligned(parts, MergeSpec(mode, fill), names)


def aggregate_by(s: Indexed, group: Callable | Sequence, stat: Callable | str,
                 skip_missing: bool = True):
    """Split rows by ``group`` and reduce each part column-wise with ``stat``.

    ``group`` is either a function from index value to the coarser index value,
    or a sequence of coarser index values paired positionally with the rows.
    ``stat`` is a function over a list of cells (missing cells included) or the
    name of a built-in statistic, which honours ``skip_missing``.
    """
    if isinstance(stat, str):
        stat = get_stat(stat, skip_missing)
    if callable(group):
        keys = [as_index(group(v)) for v in s.index]
    else:
        keys = [as_index(v) for v in group]
        if len(keys) != s.nrow:
            raise ShapeError(f"grouping has {len(keys)} values for {s.nrow} rows")
    try:
        kind_of(keys)
    except KindMismatch:
        raise KindMismatch("grouping produced mixed index kinds") from None
    parts: dict[IndexValue, list[int]] = {}
    for i, key in enumerate(keys):
        parts.setdefault(key, []).append(i)
    new_index = sorted(parts)
    columns = [[stat([col[i] for i in parts[key]]) for key in new_index] for col in s.columns]
    return s._derive(index=new_index, columns=columns, frequency=None)
