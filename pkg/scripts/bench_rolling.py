#!/usr/bin/env python3
"""Timing of the rolling kernels against the generic window evaluator.

    python3 scripts/bench_rolling.py [--rows 20000] [--widths 5 51 501] [--repeat 3]

Prints one line per (statistic, width): best-of-N seconds for the dedicated
kernel, for ``roll_apply`` with the matching plain statistic, and the
speed-up.  Results are also checked for agreement.
"""

import argparse
import random
import time
from dataclasses import dataclass

from ordseries import IntIndex, Series, roll_apply, roll_max, roll_mean, roll_median
from ordseries.stats import get_stat


@dataclass(frozen=True)
class BenchConfig:
    rows: int = 20_000
    widths: tuple = (5, 51, 501)
    repeat: int = 3
    missing_rate: float = 0.0
    seed: int = 7
    stats: tuple = ("mean", "median", "max")


KERNELS = {"mean": roll_mean, "median": roll_median, "max": roll_max}


def make_series(cfg: BenchConfig) -> Series:
    rnd = random.Random(cfg.seed)
    cells = [None if rnd.random() < cfg.missing_rate else rnd.gauss(0.0, 1.0)
             for _ in range(cfg.rows)]
    return Series([IntIndex(k) for k in range(cfg.rows)], cells)


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def run(cfg: BenchConfig):
    s = make_series(cfg)
    print(f"rows={cfg.rows} missing_rate={cfg.missing_rate} repeat={cfg.repeat}")
    print(f"{'stat':>6} {'width':>6} {'kernel s':>10} {'generic s':>10} {'speed-up':>9}  max |diff|")
    for name in cfg.stats:
        stat = get_stat(name, skip_missing=False)
        for w in cfg.widths:
            if name == "median" and w % 2 == 0:
                continue
            tk, fast = best_of(lambda: KERNELS[name](s, w), cfg.repeat)
            tg, slow = best_of(lambda: roll_apply(s, w, stat), 1)
            diff = max((abs(a - b) for a, b in zip(fast.cells, slow.cells)
                        if a is not None and b is not None), default=0.0)
            print(f"{name:>6} {w:>6} {tk:>10.4f} {tg:>10.4f} {tg / tk:>8.1f}x  {diff:.2e}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rows", type=int, default=BenchConfig.rows)
    ap.add_argument("--widths", type=int, nargs="+", default=list(BenchConfig.widths))
    ap.add_argument("--repeat", type=int, default=BenchConfig.repeat)
    ap.add_argument("--missing-rate", type=float, default=BenchConfig.missing_rate)
    ap.add_argument("--seed", type=int, default=BenchConfig.seed)
    a = ap.parse_args()
    run(BenchConfig(a.rows, tuple(a.widths), a.repeat, a.missing_rate, a.seed))


if __name__ == "__main__":
    main()
