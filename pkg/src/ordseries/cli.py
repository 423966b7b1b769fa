"""Command-line interface.

Every subcommand reads CSV (``-`` is standard input), calls one library
operation and writes CSV, text or SVG to standard output or ``--out``.

Exit status: 0 success, 2 input error (unreadable file, malformed CSV, bad
option), 3 semantic error raised by the library (overlapping indexes, kind
mismatch, irregular series, ...).
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import io as csvio
from .calc import evaluate
from .combine import aggregate_by, merge
from .errors import OrdSeriesError, ParseError
from .index import (DateIndex, RealIndex, TimestampIndex, YearMonth, YearQuarter,
                    date_to_yearmonth, date_to_yearquarter, first_of_month, yearmonth_to_date,
                    yearmonth_to_quarter, yearquarter_to_date)
from .missing import FillPolicy, drop_missing, fill_interp, fill_locf, longest_complete_run
from .plot import PlotSpec, plot_svg
from .regular import attach_frequency, from_grid, render_grid, to_grid
from .rolling import RollSpec, roll_apply, roll_max, roll_mean, roll_median
from .series import Indexed, Series, make_frame, render
from .stats import STAT_NAMES, get_stat

ENV_INDEX_KIND = "ORDSERIES_INDEX_KIND"
EXIT_OK, EXIT_INPUT, EXIT_SEMANTIC = 0, 2, 3


class InputError(Exception):
    """Bad command-line input that is not a library error."""


def _read(path: str, args) -> Indexed:
    kind = args.index_kind or os.environ.get(ENV_INDEX_KIND) or None
    if path == "-":
        return csvio.loads_csv(sys.stdin.read(), kind, args.on_duplicate)
    return csvio.read_csv(path, kind, args.on_duplicate)


def _emit(text: str, args) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _pairs(items: Sequence[str] | None, what: str) -> dict[str, str]:
    out = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep or not name or not value:
            raise InputError(f"{what} must look like NAME=VALUE, got {item!r}")
        out[name] = value
    return out


# subcommands ---------------------------------------------------------------

def cmd_print(args) -> None:
    s = _read(args.input, args)
    _emit(render(s, args.style, args.line_width) + "\n", args)


def cmd_plot(args) -> None:
    s = _read(args.input, args)
    spec = PlotSpec(layout=args.layout, colors=_pairs(args.color, "--color"),
                    line_types=_pairs(args.lty, "--lty"), markers=_pairs(args.marker, "--marker"),
                    width=args.width, height=args.height, title=args.title)
    _emit(plot_svg(s, spec), args)


def cmd_merge(args) -> None:
    parts = [_read(p, args) for p in args.inputs]
    _emit(csvio.dumps_csv(merge(*parts, mode=args.mode, fill=args.fill)), args)


GROUPS = {
    "firstofmonth": first_of_month,
    "yearmonth": lambda v: date_to_yearmonth(_as_date(v)),
    "yearquarter": lambda v: (yearmonth_to_quarter(v) if isinstance(v, YearMonth)
                              else date_to_yearquarter(_as_date(v))),
}


def _as_date(v) -> DateIndex:
    if isinstance(v, DateIndex):
        return v
    if isinstance(v, TimestampIndex):
        return DateIndex(v.seconds // 86400)
    if isinstance(v, YearMonth):
        return yearmonth_to_date(v)
    if isinstance(v, YearQuarter):
        return yearquarter_to_date(v)
    raise InputError(f"cannot read {type(v).__name__} values as calendar dates")


def cmd_aggregate(args) -> None:
    s = _read(args.input, args)
    out = aggregate_by(s, GROUPS[args.group], args.stat, skip_missing=not args.keep_missing)
    _emit(csvio.dumps_csv(out), args)


def cmd_fill(args) -> None:
    s = _read(args.input, args)
    policy = FillPolicy(keep_edges=args.keep_edges, abscissa=args.abscissa)
    if args.method == "omit":
        out = drop_missing(s)
    elif args.method == "contiguous":
        out = longest_complete_run(s)
    elif args.method == "locf":
        out = fill_locf(s, policy)
    else:
        out = fill_interp(s, policy)
    _emit(csvio.dumps_csv(out), args)


def cmd_roll(args) -> None:
    s = _read(args.input, args)
    spec = RollSpec(args.width, args.align, args.pad)
    if args.stat == "mean":
        out = roll_mean(s, spec, threads=args.threads)
    elif args.stat == "median":
        out = roll_median(s, spec, threads=args.threads)
    elif args.stat == "max":
        out = roll_max(s, spec, threads=args.threads)
    else:
        out = roll_apply(s, spec, get_stat(args.stat, skip_missing=False), threads=args.threads)
    _emit(csvio.dumps_csv(out), args)


def cmd_calc(args) -> None:
    env: dict = {}
    for item in args.inputs:
        name, sep, path = item.partition("=")
        if not sep:
            path = item
            name = os.path.splitext(os.path.basename(item))[0]
        env[name] = _read(path, args)
    if len(args.inputs) == 1:
        env.setdefault("x", next(iter(env.values())))
    result = evaluate(args.expression, env)
    if not isinstance(result, Indexed):
        _emit(f"{result:.15g}\n", args)
        return
    if args.name and isinstance(result, Series):
        result = result.rename(args.name)
    _emit(csvio.dumps_csv(result), args)


def cmd_regularize(args) -> None:
    if args.from_grid:
        kind = args.index_kind or os.environ.get(ENV_INDEX_KIND) or None
        if args.input == "-":
            g = csvio.loads_grid(sys.stdin.read(), kind)
        else:
            g = csvio.read_grid(args.input, kind)
        _emit(csvio.dumps_csv(from_grid(g)), args)
        return
    s = _read(args.input, args)
    if args.frequency is not None:
        s = attach_frequency(s, args.frequency)
    g = to_grid(s)
    _emit(render_grid(g) + "\n" if args.table else csvio.dumps_grid(g), args)


def _to_timestamp(v) -> TimestampIndex:
    return TimestampIndex(_as_date(v).days * 86400)


CONVERTERS = {
    "date": lambda v, frac: (yearmonth_to_date(v, frac) if isinstance(v, YearMonth)
                             else yearquarter_to_date(v, frac) if isinstance(v, YearQuarter)
                             else _as_date(v)),
    "timestamp": lambda v, frac: v if isinstance(v, TimestampIndex) else _to_timestamp(v),
    "yearmonth": lambda v, frac: v if isinstance(v, YearMonth) else date_to_yearmonth(_as_date(v)),
    "yearquarter": lambda v, frac: GROUPS["yearquarter"](v) if not isinstance(v, YearQuarter) else v,
    "real": lambda v, frac: RealIndex(v.to_number()),
}


def cmd_convert_index(args) -> None:
    s = _read(args.input, args)
    conv = CONVERTERS[args.to]
    index = [conv(v, args.frac) for v in s.index]
    out = make_frame(index, dict(zip(s.names, s.columns)), args.on_duplicate)
    if isinstance(s, Series):
        out = out.column(s.name)
    _emit(csvio.dumps_csv(out), args)


# parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--index-kind", choices=sorted(csvio.KINDS),
                        help=f"index kind of the input (default: ${ENV_INDEX_KIND} or autodetect)")
    common.add_argument("--on-duplicate", choices=("error", "keep_first", "mean"), default="error",
                        help="what to do with repeated index values on input")
    common.add_argument("--out", "-o", help="write to this file instead of standard output")
    common.add_argument("--threads", type=int, default=1,
                        help="worker threads for per-column work (output is identical)")

    p = argparse.ArgumentParser(prog="ordseries",
                                description="Indexed ordered series: print, plot, align and transform CSV data.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    q = sub.add_parser("print", parents=[common], help="render a series or frame as text")
    q.add_argument("--style", choices=("horizontal", "vertical", "plain"))
    q.add_argument("--line-width", type=int, default=80)
    q.add_argument("input")
    q.set_defaults(func=cmd_print)

    q = sub.add_parser("plot", parents=[common], help="draw an SVG line chart")
    q.add_argument("--layout", choices=("panels", "single"), default="panels")
    q.add_argument("--color", action="append", metavar="NAME=COLOR",
                   help="series colour; NAME may be 'default' (repeatable)")
    q.add_argument("--lty", action="append", metavar="NAME=TYPE", help="line type (repeatable)")
    q.add_argument("--marker", action="append", metavar="NAME=MARKER", help="point marker (repeatable)")
    q.add_argument("--width", type=int, default=640)
    q.add_argument("--height", type=int, default=480)
    q.add_argument("--title")
    q.add_argument("input")
    q.set_defaults(func=cmd_plot)

    q = sub.add_parser("merge", parents=[common], help="column-bind files along their indexes")
    q.add_argument("--mode", choices=("union", "inter", "intersection", "left", "right"), default="union")
    q.add_argument("--fill", type=float, help="value for cells created by alignment (default NA)")
    q.add_argument("inputs", nargs="+")
    q.set_defaults(func=cmd_merge)

    q = sub.add_parser("aggregate", parents=[common], help="reduce onto a coarser calendar index")
    q.add_argument("--group", choices=sorted(GROUPS), required=True)
    q.add_argument("--stat", choices=STAT_NAMES, default="mean")
    q.add_argument("--keep-missing", action="store_true", help="pass missing cells to the statistic")
    q.add_argument("input")
    q.set_defaults(func=cmd_aggregate)

    q = sub.add_parser("fill", parents=[common], help="drop or impute missing cells")
    q.add_argument("--method", choices=("omit", "contiguous", "locf", "interp"), required=True)
    q.add_argument("--abscissa", choices=("index", "positions"), default="index")
    q.add_argument("--keep-edges", action="store_true", help="keep unfillable edge rows as NA")
    q.add_argument("input")
    q.set_defaults(func=cmd_fill)

    q = sub.add_parser("roll", parents=[common], help="rolling-window statistics")
    q.add_argument("--stat", choices=("mean", "median", "max") + tuple(
        n for n in STAT_NAMES if n not in ("mean", "median", "max")), default="mean")
    q.add_argument("--width", type=int, required=True)
    q.add_argument("--align", choices=("l", "c", "r", "left", "center", "right"), default="center")
    q.add_argument("--pad", action="store_true", help="keep unanchored rows as NA")
    q.add_argument("input")
    q.set_defaults(func=cmd_roll)

    q = sub.add_parser("calc", parents=[common], help="evaluate an expression over named inputs")
    q.add_argument("expression")
    q.add_argument("inputs", nargs="*", metavar="NAME=PATH",
                   help="bind NAME to a file; a bare PATH binds its file stem (and x if alone)")
    q.add_argument("--name", help="column name of a single-column result")
    q.set_defaults(func=cmd_calc)

    q = sub.add_parser("regularize", parents=[common], help="convert to or from the dense grid form")
    mode = q.add_mutually_exclusive_group(required=True)
    mode.add_argument("--to-grid", action="store_true")
    mode.add_argument("--from-grid", action="store_true")
    q.add_argument("--frequency", type=float, help="attach this frequency before exporting")
    q.add_argument("--table", action="store_true", help="print the grid as a period table")
    q.add_argument("input")
    q.set_defaults(func=cmd_regularize)

    q = sub.add_parser("convert-index", parents=[common], help="re-express the index in another kind")
    q.add_argument("--to", choices=sorted(CONVERTERS), required=True)
    q.add_argument("--frac", type=float, default=0.0,
                   help="position within a month or quarter when converting to dates (0..1)")
    q.add_argument("input")
    q.set_defaults(func=cmd_convert_index)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    # argparse stops filling a "*" positional once an option intervenes
    if extra and args.command == "calc" and not any(e.startswith("-") and e != "-" for e in extra):
        args.inputs += extra
    elif extra:
        parser.error(f"unrecognized arguments: {' '.join(extra)}")
    try:
        args.func(args)
    except (ParseError, InputError, OSError) as exc:
        print(f"ordseries: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OrdSeriesError as exc:
        print(f"ordseries: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    except ValueError as exc:
        print(f"ordseries: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
