"""Tests for the radar SVG renderer."""

from __future__ import annotations

import math
import re
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from qind.errors import InputError
from qind.report import RadarConfig, SeriesStyle, render_radar
from qind.report.radar import axis_angles, vertex_radius
from qind.rubric import builtin_rubric
from qind.scoring.model import Assessment, DimensionScore, Target

from helpers import FIXED_TIME

SVG = "{http://www.w3.org/2000/svg}"
FAIRST_SCORES = {
    "findable": Fraction(5, 2),
    "accessible": Fraction(3),
    "interoperable": Fraction(1),
    "reusable": Fraction(4),
    "scientific_basis": Fraction(4, 3),
    "technical_basis": Fraction(11, 6),
}


def _assessment(scores: dict[str, Fraction], *, rubric_id: str = "fairst", label: str = "tool") -> Assessment:
    return Assessment(
        target=Target(identifier=label, kind="software", rubric_id=rubric_id, timestamp=FIXED_TIME, label=label),
        ratings=(),
        dimension_scores=tuple(DimensionScore(dimension_id=d, score=s, meets_minimum=True) for d, s in scores.items()),
        passes_all_minimums=True,
    )


def _group(svg: str, gid: str) -> ET.Element:
    for element in ET.fromstring(svg).iter(f"{SVG}g"):
        if element.get("id") == gid:
            return element
    raise AssertionError(f"no element {gid}")


def _ids(svg: str) -> set[str]:
    return {element.get("id") for element in ET.fromstring(svg).iter() if element.get("id")}


def _vertices(svg: str, gid: str) -> list[tuple[float, float]]:
    path = next(_group(svg, gid).iter(f"{SVG}path"))
    numbers = [float(n) for n in re.findall(r"-?\d+(?:\.\d+)?", path.get("d"))]
    return list(zip(numbers[::2], numbers[1::2]))


def test_one_axis_per_dimension_and_a_ring_per_level():
    config = RadarConfig.for_rubric(builtin_rubric("fairst"))
    svg = render_radar([_assessment(FAIRST_SCORES)], config)
    ids = _ids(svg)
    assert {f"axis-{d}" for d in FAIRST_SCORES} <= ids
    assert {f"ring-{n}" for n in range(6)} <= ids
    assert "ring-6" not in ids
    assert {"series-0", "minimum-overlay", "legend-entry-0"} <= ids


def test_vertices_sit_at_score_over_max_level():
    config = RadarConfig.for_rubric(builtin_rubric("fairst"))
    svg = render_radar([_assessment(FAIRST_SCORES)], config)
    center = config.size / 2
    angles = axis_angles(len(config.axes))
    vertices = _vertices(svg, "series-0")
    for (x, y), axis, angle in zip(vertices, config.axes, angles):
        r = vertex_radius(float(FAIRST_SCORES[axis]), 5, config.radius)
        assert x == pytest.approx(center + r * math.cos(angle), abs=0.5)
        assert y == pytest.approx(center + r * math.sin(angle), abs=0.5)


def test_first_axis_points_up():
    angles = axis_angles(4)
    assert angles[0] == pytest.approx(-1.5707963, abs=1e-6)
    assert angles[1] == pytest.approx(0.0, abs=1e-9)


def test_zero_scores_collapse_to_the_center():
    config = RadarConfig.for_rubric(builtin_rubric("fairst"), show_minimums=False)
    svg = render_radar([_assessment({d: Fraction(0) for d in FAIRST_SCORES})], config)
    center = config.size / 2
    for x, y in _vertices(svg, "series-0"):
        assert (x, y) == (pytest.approx(center, abs=0.5), pytest.approx(center, abs=0.5))
    assert "minimum-overlay" not in _ids(svg)


def test_two_series_get_two_polygons_and_legend_entries():
    config = RadarConfig.for_rubric(
        builtin_rubric("fairst"), series_styles=(SeriesStyle(color="#1f77b4"), SeriesStyle(linestyle="dashed"))
    )
    other = {d: Fraction(2) for d in FAIRST_SCORES}
    svg = render_radar([_assessment(FAIRST_SCORES, label="a"), _assessment(other, label="b")], config)
    ids = _ids(svg)
    assert {"series-0", "series-1", "legend-entry-0", "legend-entry-1"} <= ids
    assert ">a<" in svg and ">b<" in svg


def test_fewer_than_three_axes_fall_back_to_bars(caplog):
    config = RadarConfig(axes=("a", "b"), max_level=4, minimums=None)
    svg = render_radar([_assessment({"a": Fraction(2), "b": Fraction(4)}, rubric_id="tiny")], config)
    ids = _ids(svg)
    assert {"bar-0-a", "bar-0-b", "axis-a", "axis-b"} <= ids
    assert "series-0" not in ids
    assert "drawing bars" in caplog.text


def test_rendering_is_byte_identical():
    config = RadarConfig.for_rubric(builtin_rubric("fairst"), title="golden-tool")
    first = render_radar([_assessment(FAIRST_SCORES)], config)
    second = render_radar([_assessment(FAIRST_SCORES)], config)
    assert first == second
    assert "title" in _ids(first)


def test_nothing_to_plot():
    with pytest.raises(InputError, match="nothing to plot"):
        render_radar([], RadarConfig.for_rubric(builtin_rubric("fairst")))


def test_mixed_rubrics_are_refused():
    pocme = {d.id: Fraction(1) for d in builtin_rubric("pocme").dimensions}
    with pytest.raises(InputError, match="different rubrics"):
        render_radar(
            [_assessment(FAIRST_SCORES), _assessment(pocme, rubric_id="pocme")],
            RadarConfig.for_rubric(builtin_rubric("fairst")),
        )


def test_missing_axis_score():
    scores = dict(FAIRST_SCORES)
    del scores["reusable"]
    with pytest.raises(InputError, match="no score for reusable"):
        render_radar([_assessment(scores)], RadarConfig.for_rubric(builtin_rubric("fairst")))
