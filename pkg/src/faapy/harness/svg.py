"""
Minimal static SVG charts for run reports.

Two chart kinds: log-scale line charts (residual and condition histories,
one polyline per series) and the column-usage raster (one cell per history
column per iteration, newest column at the bottom).
"""

import math
from typing import Dict, List, Optional, Sequence, Tuple
from xml.sax.saxutils import escape

WIDTH = 640
HEIGHT = 400
MARGIN_LEFT = 70
MARGIN_RIGHT = 130
MARGIN_TOP = 40
MARGIN_BOTTOM = 50

PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2",
           "#7f7f7f", "#bcbd22", "#17becf"]

KEPT_COLOR = "#1f3b73"
DROPPED_COLOR = "#e8a0a0"


def _header(width: int, height: int, title: str) -> List[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2:.1f}" y="22" text-anchor="middle" font-size="15">{escape(title)}</text>',
    ]


def _log_segments(xs: Sequence[float], ys: Sequence[float]) -> List[List[Tuple[float, float]]]:
    """Split a series into runs of positive finite values, as (x, log10 y)."""
    segments, current = [], []
    for x, y in zip(xs, ys):
        if y is not None and math.isfinite(y) and y > 0.0:
            current.append((float(x), math.log10(y)))
        elif current:
            segments.append(current)
            current = []
    if current:
        segments.append(current)
    return segments


def line_chart(
    series: Dict[str, Tuple[Sequence[float], Sequence[float]]],
    title: str,
    y_label: str,
    reference_lines: Optional[Dict[str, float]] = None,
) -> str:
    """
    Log-scale line chart.

    Args:
        series: label -> (x values, y values). Non-positive or non-finite
            y values leave a gap.
        title: Chart title.
        y_label: Axis label of the log-scaled values.
        reference_lines: label -> y value drawn as dashed horizontal lines.

    Returns:
        SVG document.
    """
    reference_lines = reference_lines or {}
    segmented = {label: _log_segments(xs, ys) for label, (xs, ys) in series.items()}
    points = [p for segments in segmented.values() for seg in segments for p in seg]
    levels = [math.log10(v) for v in reference_lines.values() if v > 0 and math.isfinite(v)]

    x_values = [p[0] for p in points] or [0.0, 1.0]
    y_values = [p[1] for p in points] + levels or [0.0, 1.0]
    x_min, x_max = min(x_values), max(x_values)
    y_min, y_max = math.floor(min(y_values)), math.ceil(max(y_values))
    if x_max == x_min:
        x_max = x_min + 1.0
    if y_max == y_min:
        y_max = y_min + 1

    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def sx(x: float) -> float:
        return MARGIN_LEFT + (x - x_min) / (x_max - x_min) * plot_w

    def sy(y: float) -> float:
        return MARGIN_TOP + (y_max - y) / (y_max - y_min) * plot_h

    out = _header(WIDTH, HEIGHT, title)
    out.append(f'<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{plot_w}" height="{plot_h}" '
               f'fill="none" stroke="black"/>')

    step = max(1, int(math.ceil((y_max - y_min) / 10)))
    for decade in range(int(y_min), int(y_max) + 1, step):
        y = sy(decade)
        out.append(f'<line x1="{MARGIN_LEFT}" y1="{y:.1f}" x2="{MARGIN_LEFT + plot_w}" '
                   f'y2="{y:.1f}" stroke="#dddddd"/>')
        out.append(f'<text x="{MARGIN_LEFT - 6}" y="{y + 4:.1f}" text-anchor="end">1e{decade}</text>')

    out.append(f'<text x="{MARGIN_LEFT}" y="{HEIGHT - 15}" text-anchor="start">{x_min:g}</text>')
    out.append(f'<text x="{MARGIN_LEFT + plot_w}" y="{HEIGHT - 15}" text-anchor="end">{x_max:g}</text>')
    out.append(f'<text x="{MARGIN_LEFT + plot_w / 2:.1f}" y="{HEIGHT - 15}" '
               f'text-anchor="middle">iteration</text>')
    out.append(f'<text x="16" y="{MARGIN_TOP + plot_h / 2:.1f}" text-anchor="middle" '
               f'transform="rotate(-90 16 {MARGIN_TOP + plot_h / 2:.1f})">{escape(y_label)}</text>')

    for label, value in reference_lines.items():
        if value <= 0 or not math.isfinite(value):
            continue
        y = sy(math.log10(value))
        out.append(f'<line x1="{MARGIN_LEFT}" y1="{y:.1f}" x2="{MARGIN_LEFT + plot_w}" y2="{y:.1f}" '
                   f'stroke="black" stroke-dasharray="6,4"/>')
        out.append(f'<text x="{MARGIN_LEFT + plot_w + 6}" y="{y + 4:.1f}">{escape(label)}</text>')

    for index, (label, segments) in enumerate(segmented.items()):
        color = PALETTE[index % len(PALETTE)]
        for seg in segments:
            coords = " ".join(f"{sx(x):.1f},{sy(y):.1f}" for x, y in seg)
            out.append(f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        legend_y = MARGIN_TOP + 14 + 16 * index
        out.append(f'<line x1="{WIDTH - MARGIN_RIGHT + 10}" y1="{legend_y - 4}" '
                   f'x2="{WIDTH - MARGIN_RIGHT + 28}" y2="{legend_y - 4}" stroke="{color}" '
                   f'stroke-width="2"/>')
        out.append(f'<text x="{WIDTH - MARGIN_RIGHT + 32}" y="{legend_y}">{escape(label)}</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"


def raster_chart(masks: Sequence[str], title: str) -> str:
    """
    Column-usage raster.

    Args:
        masks: One 0/1 string per iteration, newest column first.
        title: Chart title.

    Returns:
        SVG document with a kept (dark) or dropped (light) cell for every
        column present at each iteration.
    """
    iterations = max(len(masks), 1)
    depth = max((len(mask) for mask in masks), default=0) or 1
    plot_w = WIDTH - MARGIN_LEFT - 30
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    cell_w = plot_w / iterations
    cell_h = plot_h / depth

    out = _header(WIDTH, HEIGHT, title)
    out.append(f'<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{plot_w}" height="{plot_h}" '
               f'fill="none" stroke="black"/>')
    for k, mask in enumerate(masks):
        for column, flag in enumerate(mask):
            x = MARGIN_LEFT + k * cell_w
            # column 1 (newest) at the bottom
            y = MARGIN_TOP + plot_h - (column + 1) * cell_h
            color = KEPT_COLOR if flag == "1" else DROPPED_COLOR
            out.append(f'<rect x="{x:.2f}" y="{y:.2f}" width="{cell_w:.2f}" height="{cell_h:.2f}" '
                       f'fill="{color}"/>')

    out.append(f'<text x="{MARGIN_LEFT + plot_w / 2:.1f}" y="{HEIGHT - 15}" '
               f'text-anchor="middle">iteration</text>')
    out.append(f'<text x="{MARGIN_LEFT - 8}" y="{MARGIN_TOP + plot_h - 4:.1f}" text-anchor="end">1</text>')
    out.append(f'<text x="{MARGIN_LEFT - 8}" y="{MARGIN_TOP + 12}" text-anchor="end">{depth}</text>')
    out.append(f'<text x="16" y="{MARGIN_TOP + plot_h / 2:.1f}" text-anchor="middle" '
               f'transform="rotate(-90 16 {MARGIN_TOP + plot_h / 2:.1f})">column</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
