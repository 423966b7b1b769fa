"""Deterministic SVG 1.1 line charts.

Two layouts: ``panels`` draws one sub-plot per column on a shared x axis;
``single`` overlays every column on one axis with a legend.  Per-series
colours, line types and markers come from maps keyed by column name; a
``"default"`` key covers the columns not named.  Output depends only on the
input (fixed number formatting, no timestamps), so it can be golden-tested.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence
from xml.sax.saxutils import escape

from ._grid import projections
from .errors import ShapeError
from .series import Indexed

__all__ = ["PlotSpec", "LAYOUTS", "LINE_TYPES", "MARKERS", "PALETTE", "plot_svg", "write_svg"]

LAYOUTS = ("panels", "single")
PALETTE = ("#000000", "#df536b", "#61d04f", "#2297e6", "#28e2e5", "#cd0bbc", "#f5c710", "#9e9e9e")
LINE_TYPES = {"solid": None, "dashed": "6,4", "dotted": "1.5,3", "dotdash": "1.5,3,6,3",
              "longdash": "10,4", "none": None}
MARKERS = ("none", "circle", "square", "triangle", "cross")
MAX_X_TICKS = 8


@dataclass(frozen=True)
class PlotSpec:
    """Chart layout and per-series styling.

    Each style map is ``{column name or "default": value}``.  Colours not
    given anywhere cycle through :data:`PALETTE` by column position (panels
    default to black, like most plotting systems).
    """

    layout: str = "panels"
    colors: Mapping[str, str] = field(default_factory=dict)
    line_types: Mapping[str, str] = field(default_factory=dict)
    markers: Mapping[str, str] = field(default_factory=dict)
    width: int = 640
    height: int = 480
    title: str | None = None

    def __post_init__(self):
        if self.layout not in LAYOUTS:
            raise ValueError(f"layout must be one of {LAYOUTS}, got {self.layout!r}")
        for lt in self.line_types.values():
            if lt not in LINE_TYPES:
                raise ValueError(f"unknown line type {lt!r}; choose from {sorted(LINE_TYPES)}")
        for m in self.markers.values():
            if m not in MARKERS:
                raise ValueError(f"unknown marker {m!r}; choose from {MARKERS}")
        if self.width < 100 or self.height < 100:
            raise ValueError("plot must be at least 100x100 pixels")

    def style(self, name: str, position: int) -> tuple[str, str, str]:
        if self.layout == "single":
            fallback = PALETTE[position % len(PALETTE)]
        else:
            fallback = PALETTE[0]
        color = self.colors.get(name, self.colors.get("default", fallback))
        lty = self.line_types.get(name, self.line_types.get("default", "solid"))
        marker = self.markers.get(name, self.markers.get("default", "none"))
        return color, lty, marker


def _num(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


def _nice_step(span: float, target: int = 4) -> float:
    raw = span / target
    mag = 10 ** math.floor(math.log10(raw))
    for m in (1, 2, 2.5, 5, 10):
        if m * mag >= raw:
            return m * mag
    return 10 * mag


def _y_ticks(lo: float, hi: float) -> list[float]:
    step = _nice_step(hi - lo)
    first = math.ceil(lo / step - 1e-9)
    ticks = []
    k = first
    while k * step <= hi + 1e-9 * step:
        ticks.append(k * step)
        k += 1
    return ticks


def _tick_label(v: float) -> str:
    s = f"{v:.6g}"
    return "0" if s in ("-0", "0") else s


def _y_range(columns: Sequence[Sequence]) -> tuple[float, float]:
    vals = [x for col in columns for x in col if x is not None and math.isfinite(x)]
    if not vals:
        return -1.0, 1.0
    lo, hi = min(vals), max(vals)
    if lo == hi:
        return lo - 1.0, hi + 1.0
    pad = 0.04 * (hi - lo)
    return lo - pad, hi + pad


def _x_tick_rows(n: int) -> list[int]:
    if n <= MAX_X_TICKS:
        return list(range(n))
    return sorted({round(k * (n - 1) / (MAX_X_TICKS - 1)) for k in range(MAX_X_TICKS)})


def _segments(xs: Sequence[float], col: Sequence) -> list[list[tuple[float, float]]]:
    """Split a column into runs of plottable points; missing cells break the line."""
    runs, cur = [], []
    for x, y in zip(xs, col):
        if y is None or not math.isfinite(y):
            if cur:
                runs.append(cur)
            cur = []
        else:
            cur.append((x, y))
    if cur:
        runs.append(cur)
    return runs


def _marker(kind: str, x: float, y: float, color: str) -> str:
    if kind == "square":
        return (f'<rect x="{_num(x - 3)}" y="{_num(y - 3)}" width="6.00" height="6.00" '
                f'fill="none" stroke="{color}"/>')
    if kind == "triangle":
        pts = f"{_num(x)},{_num(y - 3.5)} {_num(x - 3.5)},{_num(y + 3)} {_num(x + 3.5)},{_num(y + 3)}"
        return f'<polygon points="{pts}" fill="none" stroke="{color}"/>'
    if kind == "cross":
        return (f'<path d="M{_num(x - 3)} {_num(y - 3)}L{_num(x + 3)} {_num(y + 3)}'
                f'M{_num(x - 3)} {_num(y + 3)}L{_num(x + 3)} {_num(y - 3)}" stroke="{color}"/>')
    return f'<circle cx="{_num(x)}" cy="{_num(y)}" r="3.00" fill="none" stroke="{color}"/>'


class _Axis:
    def __init__(self, left, top, width, height, x_lo, x_hi, y_lo, y_hi):
        self.left, self.top, self.width, self.height = left, top, width, height
        self.x_lo, self.x_hi, self.y_lo, self.y_hi = x_lo, x_hi, y_lo, y_hi

    def px(self, x: float) -> float:
        return self.left + (x - self.x_lo) / (self.x_hi - self.x_lo) * self.width

    def py(self, y: float) -> float:
        return self.top + (self.y_hi - y) / (self.y_hi - self.y_lo) * self.height


def _draw_series(out: list, ax: _Axis, xs, col, color, lty, marker):
    dash = LINE_TYPES[lty]
    dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
    for run in _segments(xs, col):
        pts = [(ax.px(x), ax.py(y)) for x, y in run]
        if len(pts) > 1 and lty != "none":
            d = "M" + "L".join(f"{_num(px)} {_num(py)}" for px, py in pts)
            out.append(f'<path d="{d}" fill="none" stroke="{color}" stroke-width="1.5"{dash_attr}/>')
        kind = marker if marker != "none" else ("circle" if len(pts) == 1 else "none")
        if kind != "none":
            out.extend(_marker(kind, px, py, color) for px, py in pts)


def _frame_box(out: list, ax: _Axis):
    out.append(f'<rect x="{_num(ax.left)}" y="{_num(ax.top)}" width="{_num(ax.width)}" '
               f'height="{_num(ax.height)}" fill="none" stroke="#000000"/>')


def _y_axis(out: list, ax: _Axis, label: str | None):
    for t in _y_ticks(ax.y_lo, ax.y_hi):
        y = ax.py(t)
        out.append(f'<line x1="{_num(ax.left - 4)}" y1="{_num(y)}" x2="{_num(ax.left)}" '
                   f'y2="{_num(y)}" stroke="#000000"/>')
        out.append(f'<text x="{_num(ax.left - 6)}" y="{_num(y + 3.5)}" text-anchor="end">'
                   f'{escape(_tick_label(t))}</text>')
    if label is not None:
        cx, cy = ax.left - 48, ax.top + ax.height / 2
        out.append(f'<text x="{_num(cx)}" y="{_num(cy)}" text-anchor="middle" '
                   f'transform="rotate(-90 {_num(cx)} {_num(cy)})">{escape(label)}</text>')


def _x_axis(out: list, ax: _Axis, xs, labels, with_labels: bool):
    for i in _x_tick_rows(len(xs)):
        x = ax.px(xs[i])
        bottom = ax.top + ax.height
        out.append(f'<line x1="{_num(x)}" y1="{_num(bottom)}" x2="{_num(x)}" '
                   f'y2="{_num(bottom + 4)}" stroke="#000000"/>')
        if with_labels:
            out.append(f'<text x="{_num(x)}" y="{_num(bottom + 16)}" text-anchor="middle">'
                       f'{escape(labels[i])}</text>')


def plot_svg(s: Indexed, spec: PlotSpec = PlotSpec()) -> str:
    """Render ``s`` as an SVG document string."""
    if s.ncol == 0:
        raise ShapeError("nothing to plot: no columns")
    xs = projections(s.index)
    labels = [str(v) for v in s.index]
    if xs:
        x_lo, x_hi = xs[0], xs[-1]
    else:
        x_lo, x_hi = 0.0, 1.0
    if x_lo == x_hi:
        x_lo, x_hi = x_lo - 1.0, x_hi + 1.0
    pad = 0.04 * (x_hi - x_lo)
    x_lo, x_hi = x_lo - pad, x_hi + pad

    W, H = spec.width, spec.height
    left, right = 72, 16
    top = 40 if spec.title else 16
    bottom = 36
    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{W}" height="{H}" '
        f'viewBox="0 0 {W} {H}" font-family="sans-serif" font-size="11">',
        f'<rect x="0" y="0" width="{W}" height="{H}" fill="#ffffff"/>',
    ]
    if spec.title:
        out.append(f'<text x="{_num(W / 2)}" y="24.00" text-anchor="middle" font-size="14">'
                   f'{escape(spec.title)}</text>')
    plot_w = W - left - right
    plot_h = H - top - bottom

    if spec.layout == "panels":
        gap = 6
        panel_h = (plot_h - gap * (s.ncol - 1)) / s.ncol
        for k, (name, col) in enumerate(zip(s.names, s.columns)):
            y_lo, y_hi = _y_range([col])
            ax = _Axis(left, top + k * (panel_h + gap), plot_w, panel_h, x_lo, x_hi, y_lo, y_hi)
            out.append(f'<g class="panel" id="panel-{k + 1}">')
            _frame_box(out, ax)
            _y_axis(out, ax, name)
            _x_axis(out, ax, xs, labels, with_labels=(k == s.ncol - 1))
            _draw_series(out, ax, xs, col, *spec.style(name, k))
            out.append("</g>")
    else:
        y_lo, y_hi = _y_range(s.columns)
        ax = _Axis(left, top, plot_w, plot_h, x_lo, x_hi, y_lo, y_hi)
        _frame_box(out, ax)
        _y_axis(out, ax, None)
        _x_axis(out, ax, xs, labels, with_labels=True)
        for k, (name, col) in enumerate(zip(s.names, s.columns)):
            out.append(f'<g class="series" id="series-{k + 1}">')
            _draw_series(out, ax, xs, col, *spec.style(name, k))
            out.append("</g>")
        lx, ly = left + plot_w - 110, top + 14
        for k, name in enumerate(s.names):
            color, lty, _ = spec.style(name, k)
            y = ly + 14 * k
            dash = LINE_TYPES[lty]
            dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
            out.append(f'<line x1="{_num(lx)}" y1="{_num(y - 3.5)}" x2="{_num(lx + 20)}" '
                       f'y2="{_num(y - 3.5)}" stroke="{color}" stroke-width="1.5"{dash_attr}/>')
            out.append(f'<text x="{_num(lx + 26)}" y="{_num(y)}">{escape(name)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(s: Indexed, path, spec: PlotSpec = PlotSpec()) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(plot_svg(s, spec))
