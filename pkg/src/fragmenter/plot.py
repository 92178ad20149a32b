"""SVG rendering of similarity curves and chosen fragment boundaries."""

from __future__ import annotations

from itertools import accumulate
from typing import Sequence
from xml.sax.saxutils import escape

WIDTH = 800
PANEL_HEIGHT = 160
MARGIN_LEFT = 60
MARGIN_RIGHT = 20
MARGIN_TOP = 20
TICK = 6


def boundary_offsets(lengths: Sequence[int]) -> list[int]:
    """Word offset of each internal paragraph boundary."""
    return list(accumulate(lengths))[:-1]


def _num(x: float) -> str:
    return f"{x:.2f}"


def _panel(curve, boundaries, offsets, total, top, label) -> list[str]:
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = PANEL_HEIGHT - MARGIN_TOP - 2 * TICK - 10
    base = top + MARGIN_TOP + plot_h

    def x(offset):
        return MARGIN_LEFT + plot_w * offset / total

    def y(value):
        return base - plot_h * value

    out = ['<g class="panel">']
    if label:
        out.append(f'<text x="{_num(MARGIN_LEFT + 4)}" y="{_num(top + 14)}" font-size="12">{escape(label)}</text>')
    out.append(
        f'<line x1="{_num(MARGIN_LEFT)}" y1="{_num(base)}" x2="{_num(MARGIN_LEFT + plot_w)}" '
        f'y2="{_num(base)}" stroke="black"/>'
    )
    out.append(
        f'<line x1="{_num(MARGIN_LEFT)}" y1="{_num(base)}" x2="{_num(MARGIN_LEFT)}" '
        f'y2="{_num(base - plot_h)}" stroke="black"/>'
    )
    for b in boundaries:
        bx = _num(x(offsets[b - 1]))
        out.append(
            f'<line class="fragment-boundary" x1="{bx}" y1="{_num(base)}" x2="{bx}" '
            f'y2="{_num(base - plot_h)}" stroke="red"/>'
        )
    for off in offsets:
        ox = _num(x(off))
        out.append(
            f'<line class="paragraph-tick" x1="{ox}" y1="{_num(base + 2)}" x2="{ox}" '
            f'y2="{_num(base + 2 + TICK)}" stroke="black"/>'
        )
    points = " ".join(f"{_num(x(off))},{_num(y(v))}" for off, v in zip(offsets, curve))
    out.append(f'<polyline class="similarity" points="{points}" fill="none" stroke="blue"/>')
    out.append("</g>")
    return out


def render_panels_svg(panels: Sequence[dict], lengths: Sequence[int]) -> str:
    """Stack several curve panels (e.g. one per h) sharing one document.

    Each panel is a dict with keys ``curve``, ``boundaries`` and optional ``label``.
    """
    offsets = boundary_offsets(lengths)
    total = sum(lengths)
    height = PANEL_HEIGHT * len(panels)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height}" '
        f'viewBox="0 0 {WIDTH} {height}">',
        f'<rect width="{WIDTH}" height="{height}" fill="white"/>',
    ]
    for i, panel in enumerate(panels):
        out.extend(
            _panel(panel["curve"], panel["boundaries"], offsets, total, i * PANEL_HEIGHT, panel.get("label"))
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_curve_svg(
    curve: Sequence[float], boundaries: Sequence[int], lengths: Sequence[int], label: str | None = None
) -> str:
    """Similarity curve over word offsets with bars at chosen fragment boundaries.

    ``lengths`` are paragraph word counts; paragraph boundaries are drawn as
    short ticks below the axis.
    """
    if not curve:
        raise ValueError("curve is empty")
    if len(curve) != len(lengths) - 1:
        raise ValueError("curve must have one value per paragraph boundary")
    return render_panels_svg([{"curve": curve, "boundaries": boundaries, "label": label}], lengths)
