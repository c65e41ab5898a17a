"""
Radar plot of dimension scores as a deterministic SVG document.

The figure is laid out in pixel units: a single axes spans the whole canvas,
the data limits equal the canvas size with y pointing down, and the figure is
sized at 72 dpi, so SVG user units, data coordinates and pixels coincide.
Vertex radius is ``score / max_level * R``. Every drawn element carries an id
(``axis-<dim>``, ``ring-<n>``, ``series-<i>``, ``minimum-overlay``,
``legend-entry-<i>``, ``bar-<i>-<dim>``) so tests and stylesheets can find it.
"""

from __future__ import annotations

import io
import logging
import math
from collections.abc import Sequence

import matplotlib
import numpy as np
from matplotlib.colors import to_rgba
from matplotlib.figure import Figure
from matplotlib.lines import Line2D
from matplotlib.patches import Circle, Polygon, Rectangle

from qind.base import FrozenModel, Rational
from qind.errors import InputError
from qind.rubric.model import Rubric
from qind.scoring.model import Assessment
from qind.scoring.weights import WeightScheme

logger = logging.getLogger(__name__)

DPI = 72
HASH_SALT = "qind"
LEGEND_ROW = 20
_RC = {"svg.hashsalt": HASH_SALT, "svg.fonttype": "none", "path.simplify": False, "font.size": 11}


class SeriesStyle(FrozenModel):
    color: str | None = None
    linestyle: str = "solid"
    fill_alpha: float = 0.15


class RadarConfig(FrozenModel):
    """Geometry and styling of a radar plot.

    ``axes`` fixes the axis order (rubric dimension order); ring count is
    ``max_level + 1``. ``minimums`` adds the dashed per-axis minimum polygon.
    """

    axes: tuple[str, ...]
    axis_labels: tuple[str, ...] = ()
    max_level: int
    series_styles: tuple[SeriesStyle, ...] = ()
    minimums: dict[str, Rational] | None = None
    size: int = 480
    margin: int = 90
    title: str | None = None

    @property
    def ring_count(self) -> int:
        return self.max_level + 1

    @property
    def radius(self) -> float:
        return self.size / 2 - self.margin

    def label(self, index: int) -> str:
        return self.axis_labels[index] if index < len(self.axis_labels) else self.axes[index]

    def style(self, index: int) -> SeriesStyle:
        return self.series_styles[index] if index < len(self.series_styles) else SeriesStyle()

    @classmethod
    def for_rubric(
        cls,
        rubric: Rubric,
        weights: WeightScheme | None = None,
        *,
        show_minimums: bool = True,
        **options: object,
    ) -> RadarConfig:
        """Axes in rubric order; minimums from ``weights`` (rubric defaults when omitted)."""
        weights = weights or WeightScheme.for_rubric(rubric)
        minimums = {d.id: weights.minimum(d.id) for d in rubric.dimensions} if show_minimums else None
        return cls(
            axes=tuple(d.id for d in rubric.dimensions),
            axis_labels=tuple(d.title for d in rubric.dimensions),
            max_level=rubric.max_level,
            minimums=minimums,
            **options,
        )


def axis_angles(count: int) -> np.ndarray:
    """First axis points up, the rest follow clockwise (y grows downwards)."""
    return -np.pi / 2 + 2 * np.pi * np.arange(count) / count


def vertex_radius(score: float, max_level: int, radius: float) -> float:
    return score / max_level * radius


def _points(values: Sequence[float], config: RadarConfig) -> np.ndarray:
    center = config.size / 2
    angles = axis_angles(len(config.axes))
    radii = np.array([vertex_radius(v, config.max_level, config.radius) for v in values])
    return np.column_stack([center + radii * np.cos(angles), center + radii * np.sin(angles)])


def _color(index: int, style: SeriesStyle) -> object:
    return style.color or matplotlib.colormaps["tab10"](index % 10)


def _scores(assessment: Assessment, config: RadarConfig) -> list[float]:
    scores = {s.dimension_id: s.score for s in assessment.dimension_scores}
    if missing := [axis for axis in config.axes if axis not in scores]:
        raise InputError(f"{assessment.target.display_name}: no score for {', '.join(missing)}")
    return [float(scores[axis]) for axis in config.axes]


def _draw_radar(ax, assessments: Sequence[Assessment], config: RadarConfig) -> None:
    center = config.size / 2
    outer = _points([config.max_level] * len(config.axes), config)

    ax.add_patch(Circle((center, center), 1.5, color="0.6", gid="ring-0"))
    for level in range(1, config.ring_count):
        ring = _points([level] * len(config.axes), config)
        ax.add_patch(Polygon(ring, closed=True, fill=False, edgecolor="0.8", linewidth=0.8, gid=f"ring-{level}"))
        ax.text(center + 3, ring[0][1] - 2, str(level), fontsize=8, color="0.5", gid=f"ring-label-{level}")

    for index, (axis, (x, y), angle) in enumerate(zip(config.axes, outer, axis_angles(len(config.axes)))):
        ax.add_line(Line2D([center, x], [center, y], color="0.6", linewidth=0.8, gid=f"axis-{axis}"))
        cos = math.cos(angle)
        align = "center" if abs(cos) < 0.1 else ("left" if cos > 0 else "right")
        ax.text(
            center + (config.radius + 12) * cos,
            center + (config.radius + 12) * math.sin(angle),
            config.label(index),
            ha=align,
            va="center",
            gid=f"axis-label-{axis}",
        )

    if config.minimums is not None:
        minimum = [float(config.minimums.get(axis, 0)) for axis in config.axes]
        ax.add_patch(
            Polygon(
                _points(minimum, config),
                closed=True,
                fill=False,
                edgecolor="black",
                linestyle="--",
                linewidth=1.2,
                gid="minimum-overlay",
            )
        )

    for index, assessment in enumerate(assessments):
        style = config.style(index)
        color = _color(index, style)
        ax.add_patch(
            Polygon(
                _points(_scores(assessment, config), config),
                closed=True,
                facecolor=to_rgba(color, style.fill_alpha),
                edgecolor=color,
                linewidth=2,
                linestyle=style.linestyle,
                gid=f"series-{index}",
            )
        )


def _draw_bars(ax, assessments: Sequence[Assessment], config: RadarConfig) -> None:
    left, baseline = config.margin, config.size - config.margin
    height = config.size - 2 * config.margin
    slot = (config.size - 2 * config.margin) / len(config.axes)
    width = slot / (len(assessments) + 1)
    for level in range(config.ring_count):
        y = baseline - level / config.max_level * height
        ax.add_line(Line2D([left, config.size - left], [y, y], color="0.85", linewidth=0.8, gid=f"ring-{level}"))
    for d, axis in enumerate(config.axes):
        x0 = left + d * slot
        ax.add_line(Line2D([x0, x0], [baseline, baseline - height], color="0.6", linewidth=0.8, gid=f"axis-{axis}"))
        ax.text(x0 + slot / 2, baseline + 14, config.label(d), ha="center", va="center", gid=f"axis-label-{axis}")
    for index, assessment in enumerate(assessments):
        color = _color(index, config.style(index))
        for d, (axis, value) in enumerate(zip(config.axes, _scores(assessment, config))):
            bar = value / config.max_level * height
            x = left + d * slot + width / 2 + index * width
            ax.add_patch(Rectangle((x, baseline - bar), width, bar, color=color, gid=f"bar-{index}-{axis}"))


def _draw_legend(ax, assessments: Sequence[Assessment], config: RadarConfig) -> None:
    for index, assessment in enumerate(assessments):
        y = config.size + index * LEGEND_ROW + 6
        color = _color(index, config.style(index))
        ax.add_patch(Rectangle((config.margin, y), 12, 12, color=color, gid=f"legend-entry-{index}"))
        ax.text(config.margin + 18, y + 6, assessment.target.display_name, va="center", gid=f"legend-label-{index}")


def render_radar(assessments: Sequence[Assessment], config: RadarConfig) -> str:
    """Draw one polygon per assessment over rings at the integer levels.

    With fewer than three axes a polygon is meaningless, so a grouped bar chart
    is drawn instead.

    Args:
        assessments: One or more assessments of the same rubric.
        config: Geometry and styling.

    Returns:
        The SVG document. Identical inputs give byte-identical output.

    Raises:
        InputError: No assessments, assessments of different rubrics, or a
            score missing for an axis.
    """
    if not assessments:
        raise InputError("nothing to plot")
    rubric_ids = sorted({a.target.rubric_id for a in assessments})
    if len(rubric_ids) > 1:
        raise InputError(f"cannot overlay assessments of different rubrics: {', '.join(rubric_ids)}")
    if not config.axes:
        raise InputError("a plot needs at least one axis")

    height = config.size + len(assessments) * LEGEND_ROW + 12
    with matplotlib.rc_context(_RC):
        fig = Figure(figsize=(config.size / DPI, height / DPI), dpi=DPI)
        ax = fig.add_axes((0, 0, 1, 1))
        ax.set_xlim(0, config.size)
        ax.set_ylim(height, 0)
        ax.set_axis_off()
        if len(config.axes) < 3:
            logger.warning("%d dimensions cannot form a radar polygon; drawing bars", len(config.axes))
            _draw_bars(ax, assessments, config)
        else:
            _draw_radar(ax, assessments, config)
        _draw_legend(ax, assessments, config)
        if config.title:
            ax.text(config.size / 2, 16, config.title, ha="center", va="center", fontsize=13, gid="title")
        for artist in [*ax.patches, *ax.lines, *ax.texts]:
            artist.set_clip_on(False)

        buffer = io.StringIO()
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()
