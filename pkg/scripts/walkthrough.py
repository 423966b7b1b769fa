#!/usr/bin/env python3
"""Tour of the library on the reference fixtures in tests/data.

Prints each operation next to its result, in the order a first session with
the package would go: construction, merging, arithmetic, missing values,
rolling statistics and regular series.

    python3 scripts/walkthrough.py [--data DIR]
"""

import argparse
import math
from pathlib import Path

from ordseries import (FillPolicy, YearMonth, aggregate_by, concat_rows, cumulate, diff_by,
                       drop_missing, fill_interp, fill_locf, first_of_month, infer_frequency,
                       is_regular, lag_by, longest_complete_run, make_regular, merge, read_csv,
                       render, render_grid, roll_apply, roll_mean, summarize, take_positions,
                       to_grid, yearmonth_to_date, yearmonth_to_quarter, zip_op)
from ordseries.stats import get_stat

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"


def show(title, value):
    print(f"> {title}")
    print(value if isinstance(value, str) else render(value))
    print()


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--data", type=Path, default=DATA)
    args = ap.parse_args()

    z1 = read_csv(args.data / "z1.csv")
    z2 = read_csv(args.data / "z2.csv")
    Z = read_csv(args.data / "Z.csv")
    z1na = read_csv(args.data / "z1na.csv")
    z1int = read_csv(args.data / "z1int.csv")
    z2r = read_csv(args.data / "z2r.csv")

    show("z1", z1)
    show("Z", Z)
    show("summary of z1", "\n".join(f"{k:>8}: {v:.5f}" for k, v in
                                    summarize(z1)["z1"]._asdict().items()))

    show("merge(z1, z2)", merge(z1, z2))
    show("merge(z1, z2, intersection)", merge(z1, z2, mode="intersection"))
    show("merge(z1, pi, 1:10)", merge(z1, math.pi, list(range(1, 11))))
    show("rows 5..10 and 2..3 of z1, bound",
         concat_rows([take_positions(z1, range(5, 11)), take_positions(z1, [2, 3])]))
    show("Z by month, mean", aggregate_by(Z, first_of_month, "mean"))

    show("z1 + z2", zip_op(z1, z2, "+"))
    show("z1 < z2", zip_op(z1, z2, "<"))
    show("cumulative sums of Z", cumulate(Z))
    show("lag(z1int, -1)", lag_by(z1int, -1))
    show("diff(z1int)", diff_by(z1int))

    show("z1 with missing cells", z1na)
    show("drop rows with missing cells", drop_missing(z1na))
    show("longest complete stretch", longest_complete_run(z1na))
    show("last observation carried forward", fill_locf(z1na))
    show("linear interpolation over the index", fill_interp(z1na))
    show("linear interpolation over positions",
         fill_interp(z1na, FillPolicy(abscissa="positions")))

    show("rolling mean of z2r, width 5, padded", roll_mean(z2r, 5, pad=True))
    show("rolling sd of Z, width 5", roll_apply(Z, 5, get_stat("sd", skip_missing=False)))

    zr = make_regular([math.sin(k) for k in range(1, 10)], 2000.0, 4)
    gappy = take_positions(zr, [1, 2, 4, 6, 7, 8, 9])
    show("quarterly series", zr)
    show("rows 3 and 5 removed", gappy)
    show("regular (weak, strict)", f"{is_regular(gappy)} {is_regular(gappy, strict=True)}")
    show("as a dense grid", render_grid(to_grid(gappy)))
    show("inferred frequency without annotation",
         f"{infer_frequency(gappy.with_frequency(None)):g}")

    months = [YearMonth.from_ym(2000, m) for m in range(1, 10)]
    show("month starts", " ".join(str(yearmonth_to_date(m, 0)) for m in months))
    show("month ends", " ".join(str(yearmonth_to_date(m, 1)) for m in months))
    zr3 = read_csv(args.data / "zr3.csv")
    show("monthly series summed by quarter", aggregate_by(zr3, yearmonth_to_quarter, "sum"))


if __name__ == "__main__":
    main()
