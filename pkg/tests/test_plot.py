import xml.etree.ElementTree as ET

import pytest

from fragmenter.plot import boundary_offsets, render_curve_svg, render_panels_svg

NS = {"svg": "http://www.w3.org/2000/svg"}


def lines(svg, cls):
    root = ET.fromstring(svg.split("\n", 1)[1])
    return [el for el in root.iter(f"{{{NS['svg']}}}line") if el.get("class") == cls]


def test_boundary_offsets():
    assert boundary_offsets([10, 20, 30]) == [10, 30]
    assert boundary_offsets([5]) == []


def test_no_boundaries_only_ticks():
    svg = render_curve_svg([0.2, 0.8, 0.4], [], [10, 10, 10, 10])
    assert lines(svg, "fragment-boundary") == []
    assert len(lines(svg, "paragraph-tick")) == 3


def test_all_boundaries_bar_at_every_tick():
    svg = render_curve_svg([0.2, 0.8, 0.4], [1, 2, 3], [10, 20, 10, 10])
    bars = [el.get("x1") for el in lines(svg, "fragment-boundary")]
    ticks = [el.get("x1") for el in lines(svg, "paragraph-tick")]
    assert bars == ticks and len(bars) == 3


def test_ticks_sit_below_axis_and_bars_span_plot():
    svg = render_curve_svg([0.5], [1], [10, 10])
    (tick,) = lines(svg, "paragraph-tick")
    (bar,) = lines(svg, "fragment-boundary")
    assert float(tick.get("y1")) > float(bar.get("y1"))
    assert float(bar.get("y2")) < float(bar.get("y1"))


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        render_curve_svg([], [], [10])
    with pytest.raises(ValueError):
        render_curve_svg([0.1, 0.2], [], [10, 10])


def test_panels_stack():
    svg = render_panels_svg(
        [{"curve": [0.1, 0.9], "boundaries": [1], "label": "linear H0.25"},
         {"curve": [0.1, 0.9], "boundaries": [2], "label": "linear H1.5"}],
        [10, 10, 10],
    )
    assert svg.count('<g class="panel">') == 2
    assert "linear H0.25" in svg and "linear H1.5" in svg
