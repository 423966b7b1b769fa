"""Rolling-window statistics.

Windows count observations (rows), not index distance.  :func:`roll_apply`
evaluates an arbitrary statistic on every full window; the dedicated kernels
compute the same results faster:

* mean   -- sliding sum, re-anchored by exact recomputation every
            ``REANCHOR_PERIOD`` slides, O(n)
* median -- two heaps with lazy deletion (odd widths), O(n log w)
* max    -- monotonic deque of candidate positions, O(n)

The kernels return missing for any window that holds a missing cell.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import DomainError
from .series import Indexed

__all__ = ["RollSpec", "ALIGNS", "roll_apply", "roll_mean", "roll_median", "roll_max",
           "REANCHOR_PERIOD"]

ALIGNS = ("left", "center", "right")
_ALIGN_ALIASES = {"l": "left", "c": "center", "r": "right", "centre": "center"}
REANCHOR_PERIOD = 4096


@dataclass(frozen=True)
class RollSpec:
    """Window width, result alignment and padding.

    The result of the window covering rows ``i .. i+width-1`` is placed at row
    ``i`` (left), ``i + width - 1`` (right) or ``i + (width - 1) // 2``
    (center).  With ``pad`` the rows that anchor no window are kept as
    missing.
    """

    width: int
    align: str = "center"
    pad: bool = False

    def __post_init__(self):
        if isinstance(self.width, bool) or not isinstance(self.width, int) or self.width < 1:
            raise ValueError(f"width must be a positive integer, got {self.width!r}")
        align = _ALIGN_ALIASES.get(self.align, self.align)
        if align not in ALIGNS:
            raise ValueError(f"align must be one of {ALIGNS}, got {self.align!r}")
        object.__setattr__(self, "align", align)

    @property
    def offset(self) -> int:
        if self.align == "left":
            return 0
        if self.align == "right":
            return self.width - 1
        return (self.width - 1) // 2


def _spec(spec, align, pad) -> RollSpec:
    if isinstance(spec, RollSpec):
        return spec
    return RollSpec(spec, align, pad)


def _assemble(s: Indexed, spec: RollSpec, kernel: Callable, threads: int):
    cols = s.columns
    if threads > 1 and len(cols) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda c: kernel(c, spec.width), cols))
    else:
        results = [kernel(c, spec.width) for c in cols]
    n = s.nrow
    nw = max(0, n - spec.width + 1)
    off = spec.offset
    if spec.pad:
        columns = []
        for res in results:
            out = [None] * n
            out[off:off + nw] = res
            columns.append(out)
        return s._derive(columns=columns)
    index = s.index[off:off + nw]
    return s._derive(index=index, columns=results)


def roll_apply(s: Indexed, spec: RollSpec | int, stat: Callable[[list], float | None],
               align: str = "center", pad: bool = False, threads: int = 1):
    """Evaluate ``stat`` on every full window (missing cells are passed through)."""
    spec = _spec(spec, align, pad)

    def kernel(col, w):
        return [stat(list(col[i:i + w])) for i in range(len(col) - w + 1)]
    return _assemble(s, spec, kernel, threads)


def _mean_kernel(col: Sequence, w: int) -> list:
    n = len(col)
    if n < w:
        return []
    total, nmiss, nspecial = 0.0, 0, 0

    def enter(x, sign):
        nonlocal total, nmiss, nspecial
        if x is None:
            nmiss += sign
        elif not math.isfinite(x):
            nspecial += sign
        else:
            total += sign * x

    for x in col[:w]:
        enter(x, 1)
    out = []
    for i in range(n - w + 1):
        if i:
            enter(col[i - 1], -1)
            enter(col[i + w - 1], 1)
            if i % REANCHOR_PERIOD == 0:
                total = math.fsum(x for x in col[i:i + w] if x is not None and math.isfinite(x))
        if nmiss:
            out.append(None)
        elif nspecial:
            out.append(sum(col[i:i + w]) / w)
        else:
            out.append(total / w)
    return out


class _SlidingMedian:
    """Two heaps split at the median; deletions are lazy.

    Entries are ``(value, position)`` pairs, so every key is unique and the
    heap an outgoing key sits in is decided by comparing it with the live top
    of the lower heap.
    """

    def __init__(self):
        self.lo: list = []  # max-heap via negated keys
        self.hi: list = []
        self.n_lo = 0
        self.n_hi = 0
        self.dead: set = set()

    def _prune(self):
        while self.lo and (-self.lo[0][0], -self.lo[0][1]) in self.dead:
            key = heapq.heappop(self.lo)
            self.dead.discard((-key[0], -key[1]))
        while self.hi and self.hi[0] in self.dead:
            self.dead.discard(heapq.heappop(self.hi))

    def _top_lo(self):
        k = self.lo[0]
        return -k[0], -k[1]

    def _rebalance(self):
        while self.n_lo > self.n_hi + 1:
            self._prune()
            key = heapq.heappop(self.lo)
            heapq.heappush(self.hi, (-key[0], -key[1]))
            self.n_lo -= 1
            self.n_hi += 1
        while self.n_lo < self.n_hi:
            self._prune()
            key = heapq.heappop(self.hi)
            heapq.heappush(self.lo, (-key[0], -key[1]))
            self.n_hi -= 1
            self.n_lo += 1
        self._prune()

    def add(self, x: float, i: int):
        if self.n_lo and (x, i) <= self._top_lo():
            heapq.heappush(self.lo, (-x, -i))
            self.n_lo += 1
        else:
            heapq.heappush(self.hi, (x, i))
            self.n_hi += 1
        self._rebalance()

    def remove(self, x: float, i: int):
        if self.n_lo and (x, i) <= self._top_lo():
            self.n_lo -= 1
        else:
            self.n_hi -= 1
        self.dead.add((x, i))
        self._prune()
        self._rebalance()

    def median(self) -> float:
        return self._top_lo()[0]


def _median_kernel(col: Sequence, w: int) -> list:
    n = len(col)
    if n < w:
        return []
    heaps = _SlidingMedian()
    nmiss = nnan = 0

    def enter(i):
        nonlocal nmiss, nnan
        x = col[i]
        if x is None:
            nmiss += 1
        elif math.isnan(x):
            nnan += 1
        else:
            heaps.add(x, i)

    def leave(i):
        nonlocal nmiss, nnan
        x = col[i]
        if x is None:
            nmiss -= 1
        elif math.isnan(x):
            nnan -= 1
        else:
            heaps.remove(x, i)

    for i in range(w):
        enter(i)
    out = []
    for i in range(n - w + 1):
        if i:
            leave(i - 1)
            enter(i + w - 1)
        if nmiss:
            out.append(None)
        elif nnan:
            out.append(math.nan)
        else:
            out.append(heaps.median())
    return out


def _max_kernel(col: Sequence, w: int) -> list:
    n = len(col)
    if n < w:
        return []
    dq: deque = deque()
    nmiss = nnan = 0
    out = []
    for j, x in enumerate(col):
        if x is None:
            nmiss += 1
        elif math.isnan(x):
            nnan += 1
        else:
            while dq and col[dq[-1]] <= x:
                dq.pop()
            dq.append(j)
        i = j - w + 1
        if i > 0:
            old = col[i - 1]
            if old is None:
                nmiss -= 1
            elif math.isnan(old):
                nnan -= 1
        if i < 0:
            continue
        while dq and dq[0] < i:
            dq.popleft()
        if nmiss:
            out.append(None)
        elif nnan:
            out.append(math.nan)
        else:
            out.append(col[dq[0]])
    return out


def roll_mean(s: Indexed, spec: RollSpec | int, align: str = "center", pad: bool = False,
              threads: int = 1):
    return _assemble(s, _spec(spec, align, pad), _mean_kernel, threads)


def roll_median(s: Indexed, spec: RollSpec | int, align: str = "center", pad: bool = False,
                threads: int = 1):
    """Rolling median; the width must be odd."""
    spec = _spec(spec, align, pad)
    if spec.width % 2 == 0:
        raise DomainError(f"rolling median needs an odd width, got {spec.width}")
    return _assemble(s, spec, _median_kernel, threads)


def roll_max(s: Indexed, spec: RollSpec | int, align: str = "center", pad: bool = False,
             threads: int = 1):
    return _assemble(s, _spec(spec, align, pad), _max_kernel, threads)
