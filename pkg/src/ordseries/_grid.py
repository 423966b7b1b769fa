"""Numeric helpers shared by the regularity checks."""

from __future__ import annotations

import math
from typing import Sequence

from .errors import CapabilityError
from .index import REAL_EPS


def near_integer(x: float, eps: float = REAL_EPS) -> bool:
    return abs(x - round(x)) <= eps * max(1.0, abs(x))


def projections(index: Sequence) -> list[float]:
    if index and not type(index[0]).has_projection:
        raise CapabilityError(f"{type(index[0]).kind_name} index has no numeric projection")
    return [v.to_number() for v in index]


def complies(index: Sequence, frequency: float) -> bool:
    """True when every index value lies on the 1/frequency grid anchored at the first."""
    if not (frequency > 0 and math.isfinite(frequency)):
        return False
    p = projections(index)
    if not p:
        return True
    p0 = p[0]
    return all(near_integer((x - p0) * frequency) for x in p)


def tidy_frequency(f: float) -> float:
    """Snap a nearly integral frequency to the integer."""
    r = round(f)
    if r >= 1 and abs(f - r) <= REAL_EPS * max(1.0, f):
        return float(r)
    return f


def common_frequency(freqs: Sequence[float]) -> float | None:
    """Largest annotated frequency, provided every other one divides it."""
    if not freqs:
        return None
    top = max(freqs)
    if all(near_integer(top / f) for f in freqs):
        return top
    return None
