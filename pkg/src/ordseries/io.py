"""CSV ingestion and emission.

Dialect: comma separated, ``.`` decimal point, mandatory header row whose
first field names the index column.  An empty field or ``NA`` is a missing
cell.  The index kind is given explicitly or detected by trying the parsers
in :data:`~ordseries.index.AUTODETECT_ORDER`; the first kind that parses
every index field wins.

Dense regular grids use their own form::

    # grid start=2000.0 freq=4
    x
    0.841470984807897
    ...
"""

from __future__ import annotations

import csv
import io
import math
import os
import re
from typing import Iterable, TextIO

from .errors import ParseError
from .index import AUTODETECT_ORDER, KINDS, IndexValue
from .regular import RegularGrid
from .series import Frame, Indexed, Series, make_frame, make_series

__all__ = ["read_csv", "loads_csv", "dumps_csv", "write_csv", "format_number",
           "parse_cell", "resolve_kind", "dumps_grid", "loads_grid", "read_grid", "INDEX_LABEL"]

INDEX_LABEL = "index"
_NUM_RE = re.compile(r"[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?", re.ASCII)
_SPECIALS = {"Inf": math.inf, "-Inf": -math.inf, "+Inf": math.inf, "NaN": math.nan}


def format_number(x: float | None) -> str:
    """CSV form of a cell: up to 15 significant digits, ``NA`` when missing."""
    if x is None:
        return "NA"
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Inf" if x > 0 else "-Inf"
    return f"{x:.15g}"


def parse_cell(text: str) -> float | None:
    text = text.strip()
    if text in ("", "NA"):
        return None
    if text in _SPECIALS:
        return _SPECIALS[text]
    if _NUM_RE.fullmatch(text) is None:
        raise ValueError(f"not a number: {text!r}")
    return float(text)


def resolve_kind(kind) -> type[IndexValue] | None:
    """Accept a kind class, a kind name, or ``None`` (autodetect)."""
    if kind is None or (isinstance(kind, type) and issubclass(kind, IndexValue)):
        return kind
    try:
        return KINDS[str(kind).lower()]
    except KeyError:
        raise ParseError(f"unknown index kind {kind!r}; choose from {sorted(KINDS)}") from None


def _parse_index(fields: list[str], lines: list[int], kind) -> list[IndexValue]:
    if kind is not None:
        out = []
        for text, line in zip(fields, lines):
            try:
                out.append(kind.parse(text))
            except ParseError as exc:
                raise ParseError(f"line {line}: {exc}") from None
        return out
    best = None
    for name in AUTODETECT_ORDER:
        parser = KINDS[name].parse
        out = []
        for pos, text in enumerate(fields):
            try:
                out.append(parser(text))
            except ParseError as exc:
                if best is None or pos > best[0]:
                    best = (pos, exc)
                break
        else:
            return out
    pos, exc = best
    raise ParseError(f"line {lines[pos]}: cannot parse index value {fields[pos]!r} ({exc})")


def _read_rows(reader: Iterable[list[str]], kind, on_duplicate, first_line: int = 1):
    rows = []
    header = None
    for line, row in enumerate(reader, start=first_line):
        if header is None:
            if not row:
                continue
            header = [h.strip() for h in row]
            header_line = line
            continue
        if not row or row == [""]:
            continue
        if len(row) != len(header):
            raise ParseError(f"line {line}: expected {len(header)} fields, got {len(row)}")
        rows.append((line, row))
    if header is None:
        raise ParseError("missing header row")
    names = header[1:]
    if not names:
        raise ParseError(f"line {header_line}: header has no value columns")
    if len(set(names)) != len(names) or any(not n for n in names):
        raise ParseError(f"line {header_line}: column names must be unique and nonempty")
    lines = [line for line, _ in rows]
    index = _parse_index([r[0].strip() for _, r in rows], lines, kind)
    columns = {n: [] for n in names}
    for line, row in rows:
        for n, text in zip(names, row[1:]):
            try:
                columns[n].append(parse_cell(text))
            except ValueError as exc:
                raise ParseError(f"line {line}, column {n!r}: {exc}") from None
    return names, index, columns


def _build(names, index, columns, on_duplicate) -> Indexed:
    if len(names) == 1:
        return make_series(names[0], zip(index, columns[names[0]]), on_duplicate)
    return make_frame(index, columns, on_duplicate)


def _read(f: TextIO, kind=None, on_duplicate: str = "error") -> Indexed:
    names, index, columns = _read_rows(csv.reader(f), resolve_kind(kind), on_duplicate)
    return _build(names, index, columns, on_duplicate)


def loads_csv(text: str, kind=None, on_duplicate: str = "error") -> Indexed:
    return _read(io.StringIO(text), kind, on_duplicate)


def read_csv(path: str | os.PathLike, kind=None, on_duplicate: str = "error") -> Indexed:
    """Read a Series (one value column) or a Frame (several)."""
    with open(path, newline="", encoding="utf-8") as f:
        return _read(f, kind, on_duplicate)


def dumps_csv(s: Indexed, index_label: str = INDEX_LABEL) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([index_label, *s.names])
    for idx, cells in s.rows():
        w.writerow([idx.to_text(), *(format_number(x) for x in cells)])
    return buf.getvalue()


def write_csv(s: Indexed, path: str | os.PathLike, index_label: str = INDEX_LABEL) -> None:
    with open(path, "w", newline="", encoding="utf-8") as f:
        f.write(dumps_csv(s, index_label))


_GRID_RE = re.compile(r"#\s*grid\s+start=(\S+)\s+freq=(\S+)\s*")


def dumps_grid(g: RegularGrid) -> str:
    buf = io.StringIO()
    buf.write(f"# grid start={g.start.to_text()} freq={g.frequency:.15g}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(list(g.names))
    for k in range(g.length):
        w.writerow([format_number(col[k]) for col in g.columns])
    return buf.getvalue()


def loads_grid(text: str, kind=None) -> RegularGrid:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty grid file")
    m = _GRID_RE.fullmatch(lines[0])
    if m is None:
        raise ParseError("line 1: expected '# grid start=<index> freq=<real>'")
    start = _parse_index([m.group(1)], [1], resolve_kind(kind))[0]
    try:
        freq = float(m.group(2))
    except ValueError:
        raise ParseError(f"line 1: bad frequency {m.group(2)!r}") from None
    if not freq > 0:
        raise ParseError("line 1: frequency must be positive")
    reader = csv.reader(lines[1:])
    header = None
    columns: list[list] = []
    for line, row in enumerate(reader, start=2):
        if header is None:
            header = [h.strip() for h in row]
            columns = [[] for _ in header]
            continue
        if not row:
            continue
        if len(row) != len(header):
            raise ParseError(f"line {line}: expected {len(header)} fields, got {len(row)}")
        for col, text in zip(columns, row):
            try:
                col.append(parse_cell(text))
            except ValueError as exc:
                raise ParseError(f"line {line}: {exc}") from None
    if not header:
        raise ParseError("grid has no header row")
    return RegularGrid(start, freq, columns, header)


def read_grid(path: str | os.PathLike, kind=None) -> RegularGrid:
    with open(path, encoding="utf-8") as f:
        return loads_grid(f.read(), kind)
