"""
CSV, JSON and SVG emitters.

Floats are written as the shortest decimal that round-trips (repr), columns
keep a fixed order and lines end with LF, so identical runs give identical
bytes.
"""

import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Iterable, List, Sequence

logger = logging.getLogger(__name__)

STDOUT = "-"

_PALETTE = ["#1f77b4", "#2ca02c", "#d62728", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"]


def format_value(value: Any) -> str:
    """Shortest round-trip text for floats, str() for everything else."""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _write_text(path: str, text: str) -> str:
    if path == STDOUT:
        sys.stdout.write(text)
        sys.stdout.flush()
        return path
    target = Path(path)
    if target.parent and not target.parent.exists():
        target.parent.mkdir(parents=True, exist_ok=True)
    with open(target, "w", encoding="utf-8", newline="") as f:
        f.write(text)
    logger.debug(f"Wrote {len(text)} characters to {target}")
    return str(target)


def write_csv(path: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """Header row plus one line per row."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(value) for value in row])
    return _write_text(path, buffer.getvalue())


def write_json(path: str, payload: Dict[str, Any]) -> str:
    """Sorted keys, two-space indent, trailing newline."""
    text = json.dumps(payload, sort_keys=True, indent=2, allow_nan=False) + "\n"
    return _write_text(path, text)


@dataclass
class PlotSeries:
    """One polyline of an SVG plot, or a set of point markers."""
    label: str
    xs: Sequence[float]
    ys: Sequence[float]
    markers: bool = False


def render_svg(
    series: List[PlotSeries],
    title: str,
    xlabel: str,
    ylabel: str,
    width: int = 800,
    height: int = 500,
) -> str:
    """Minimal line and marker plot with axes, tick labels and a legend."""
    left, right, top, bottom = 90, 30, 40, 60
    plot_w = width - left - right
    plot_h = height - top - bottom

    all_x = [x for s in series for x in s.xs]
    all_y = [y for s in series for y in s.ys]
    x_min, x_max = (min(all_x), max(all_x)) if all_x else (0.0, 1.0)
    y_min, y_max = (min(0.0, min(all_y)), max(all_y)) if all_y else (0.0, 1.0)
    if x_max == x_min:
        x_max = x_min + 1.0
    if y_max == y_min:
        y_max = y_min + 1.0

    def sx(x: float) -> float:
        return left + (x - x_min) / (x_max - x_min) * plot_w

    def sy(y: float) -> float:
        return top + plot_h - (y - y_min) / (y_max - y_min) * plot_h

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2:.1f}" y="24" text-anchor="middle" font-size="16" font-style="italic">{title}</text>',
        f'<line x1="{left}" y1="{top + plot_h}" x2="{left + plot_w}" y2="{top + plot_h}" stroke="black"/>',
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{top + plot_h}" stroke="black"/>',
    ]
    for i in range(5):
        fx = x_min + (x_max - x_min) * i / 4
        fy = y_min + (y_max - y_min) * i / 4
        lines.append(
            f'<text x="{sx(fx):.2f}" y="{top + plot_h + 18}" text-anchor="middle" font-size="11">{fx:.3g}</text>'
        )
        lines.append(
            f'<text x="{left - 6}" y="{sy(fy) + 4:.2f}" text-anchor="end" font-size="11">{fy:.3g}</text>'
        )
    lines.append(
        f'<text x="{left + plot_w / 2:.1f}" y="{height - 15}" text-anchor="middle" font-size="14">{xlabel}</text>'
    )
    lines.append(
        f'<text x="20" y="{top + plot_h / 2:.1f}" text-anchor="middle" font-size="14" '
        f'transform="rotate(-90 20 {top + plot_h / 2:.1f})">{ylabel}</text>'
    )

    for index, s in enumerate(series):
        color = _PALETTE[index % len(_PALETTE)]
        legend_y = top + 10 + 18 * index
        if s.markers:
            lines.extend(
                f'<circle cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="2" fill="none" stroke="{color}"/>'
                for x, y in zip(s.xs, s.ys)
            )
            lines.append(f'<circle cx="{left + plot_w - 107.5}" cy="{legend_y}" r="3" fill="none" stroke="{color}"/>')
        else:
            points = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in zip(s.xs, s.ys))
            lines.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{points}"/>')
            lines.append(
                f'<line x1="{left + plot_w - 120}" y1="{legend_y}" x2="{left + plot_w - 95}" y2="{legend_y}" '
                f'stroke="{color}" stroke-width="2"/>'
            )
        lines.append(f'<text x="{left + plot_w - 90}" y="{legend_y + 4}" font-size="12">{s.label}</text>')

    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def write_svg(path: str, series: List[PlotSeries], title: str, xlabel: str, ylabel: str) -> str:
    """Render and write an SVG plot."""
    return _write_text(path, render_svg(series, title, xlabel, ylabel))


def with_suffix_tag(path: str, tag: str) -> str:
    """'planck.csv' + '_T4500' -> 'planck_T4500.csv'."""
    if path == STDOUT:
        return path
    target = Path(path)
    return str(target.with_name(f"{target.stem}{tag}{target.suffix}"))
