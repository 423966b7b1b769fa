"""Built-in summary statistics over a multiset of optional cells.

Each statistic is built by :func:`get_stat` and maps a list of cells to an
optional real.  With ``skip_missing`` (the default) missing cells are
discarded first and an empty remainder yields missing; without it any
missing cell makes the result missing.
"""

from __future__ import annotations

import math
from typing import Callable, Sequence

Stat = Callable[[Sequence], "float | None"]


def mean(xs):
    return math.fsum(xs) / len(xs)


def sd(xs):
    """Sample standard deviation (n - 1 denominator)."""
    if len(xs) < 2:
        return None
    m = mean(xs)
    return math.sqrt(math.fsum((x - m) ** 2 for x in xs) / (len(xs) - 1))


def median(xs):
    ys = sorted(xs)
    n = len(ys)
    mid = n // 2
    return ys[mid] if n % 2 else (ys[mid - 1] + ys[mid]) / 2


_IMPLS = {
    "mean": mean,
    "sum": math.fsum,
    "first": lambda xs: xs[0],
    "last": lambda xs: xs[-1],
    "min": min,
    "max": max,
    "sd": sd,
    "median": median,
}

STAT_NAMES = tuple(_IMPLS) + ("count",)


def get_stat(name: str, skip_missing: bool = True) -> Stat:
    if name == "count":
        if skip_missing:
            return lambda cells: float(sum(1 for x in cells if x is not None))
        return lambda cells: float(len(cells))
    try:
        impl = _IMPLS[name]
    except KeyError:
        raise ValueError(f"unknown statistic {name!r}; choose from {STAT_NAMES}") from None

    def stat(cells):
        if skip_missing:
            xs = [x for x in cells if x is not None]
        elif any(x is None for x in cells):
            return None
        else:
            xs = list(cells)
        if not xs:
            return None
        return impl(xs)

    stat.__name__ = name
    return stat
