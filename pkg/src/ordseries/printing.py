"""Text rendering of cells and containers.

Numbers are formatted jointly, the way R's ``format`` does it: each value
needs some number of significant digits (at most 7) to be shown exactly at
that precision, and the whole block then shares the largest number of
decimals any value needs.  Fixed notation is used unless scientific notation
is narrower.
"""

from __future__ import annotations

import math
from typing import Sequence

LINE_WIDTH = 80
DIGITS = 7


def _special(x) -> str | None:
    if x is None:
        return "NA"
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Inf" if x > 0 else "-Inf"
    return None


def _sig_and_power(x: float, digits: int) -> tuple[int, int]:
    if x == 0:
        return 1, 0
    mant, exp = f"{abs(x):.{digits - 1}e}".split("e")
    sig = mant.replace(".", "").rstrip("0")
    return max(1, len(sig)), int(exp)


def format_cells(cells: Sequence[float | None], digits: int = DIGITS) -> list[str]:
    """Format ``cells`` jointly and right-justify them to a common width."""
    finite = [x for x in cells if _special(x) is None]
    fmt = None
    if finite:
        mxsl = rgt = mxns = 0
        neg = 0
        max_exp = 0
        for x in finite:
            nsig, kp = _sig_and_power(x, digits)
            is_neg = 1 if x < 0 else 0
            neg = max(neg, is_neg)
            left = kp + 1 if kp >= 0 else 1
            mxsl = max(mxsl, left + is_neg)
            rgt = max(rgt, nsig - kp - 1)
            mxns = max(mxns, nsig)
            max_exp = max(max_exp, abs(kp))
        fixed_width = mxsl + rgt + (1 if rgt else 0)
        sci_width = neg + (mxns + 1 if mxns > 1 else mxns) + (5 if max_exp >= 100 else 4)
        if fixed_width <= sci_width:
            fmt = f".{rgt}f"
        else:
            fmt = f".{mxns - 1}e"
    out = []
    for x in cells:
        s = _special(x)
        out.append(s if s is not None else format(x, fmt))
    width = max((len(s) for s in out), default=0)
    return [s.rjust(width) for s in out]


def horizontal(labels: Sequence[str], values: Sequence[str], width: int = LINE_WIDTH) -> str:
    """Labels above values, wrapped so that each line fits ``width``."""
    w = max(max(map(len, labels), default=0), max(map(len, values), default=0))
    per_line = max(1, width // (w + 1))
    lines = []
    for i in range(0, len(labels), per_line):
        lines.append("".join(lab.rjust(w) + " " for lab in labels[i:i + per_line]))
        lines.append("".join(val.rjust(w) + " " for val in values[i:i + per_line]))
    return "\n".join(lines)


def vertical(labels: Sequence[str], names: Sequence[str],
             columns: Sequence[Sequence[str]]) -> str:
    """Row labels on the left, one left-justified column per name."""
    labw = max(map(len, labels), default=0)
    widths = [max([len(n)] + [len(c) for c in col]) for n, col in zip(names, columns)]
    lines = [" " * labw + "".join(" " + n.ljust(w) for n, w in zip(names, widths))]
    for i, lab in enumerate(labels):
        lines.append(lab.ljust(labw)
                     + "".join(" " + col[i].ljust(w) for col, w in zip(columns, widths)))
    return "\n".join(lines)


def vector(items: Sequence[str], width: int = LINE_WIDTH) -> str:
    """Plain vector listing with ``[k]`` position prefixes."""
    if not items:
        return ""
    w = max(map(len, items))
    labw = len(f"[{len(items)}]")
    per_line = max(1, (width - labw) // (w + 1))
    lines = []
    for i in range(0, len(items), per_line):
        head = f"[{i + 1}]".rjust(labw)
        lines.append(head + "".join(" " + it.rjust(w) for it in items[i:i + per_line]))
    return "\n".join(lines)


def matrix(names: Sequence[str], columns: Sequence[Sequence[str]]) -> str:
    """Column block without row labels (used by the plain style)."""
    n = len(columns[0]) if columns else 0
    labels = [f"[{i + 1},]" for i in range(n)]
    return vertical(labels, names, columns)
