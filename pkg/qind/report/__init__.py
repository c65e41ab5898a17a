"""Radar SVG, JSON/Markdown reports and batch KPI summaries."""

from qind.report.batch import (
    BatchSummary,
    ErroredTarget,
    FailingTarget,
    ScoreDistribution,
    batch_summary,
    render_batch_summary,
)
from qind.report.documents import SCHEMA_VERSION, emit_report, parse_report
from qind.report.radar import RadarConfig, SeriesStyle, render_radar

__all__ = [
    "SCHEMA_VERSION",
    "BatchSummary",
    "ErroredTarget",
    "FailingTarget",
    "RadarConfig",
    "ScoreDistribution",
    "SeriesStyle",
    "batch_summary",
    "emit_report",
    "parse_report",
    "render_batch_summary",
    "render_radar",
]
