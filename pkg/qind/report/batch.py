"""Corpus-level KPI summary: how many targets meet every dimension minimum."""

from __future__ import annotations

import json
import statistics
from collections.abc import Sequence
from fractions import Fraction
from typing import Literal

from qind.base import FrozenModel, Rational
from qind.errors import InputError
from qind.report.documents import FAIL_MARK, format_score
from qind.scoring.aggregate import count_above_minimum, meets
from qind.scoring.model import Assessment
from qind.scoring.weights import WeightScheme


class ScoreDistribution(FrozenModel):
    minimum: Rational
    median: Rational
    maximum: Rational


class FailingTarget(FrozenModel):
    target: str
    label: str | None = None
    failing_dimensions: tuple[str, ...]


class ErroredTarget(FrozenModel):
    """A manifest entry that produced no assessment."""

    target: str
    label: str | None = None
    reason: str


class BatchSummary(FrozenModel):
    rubric_id: str | None = None
    passing: int = 0
    total: int = 0
    strict: bool = False
    distributions: dict[str, ScoreDistribution] = {}
    failing: tuple[FailingTarget, ...] = ()
    errored: tuple[ErroredTarget, ...] = ()


def batch_summary(
    assessments: Sequence[Assessment],
    weights: WeightScheme,
    *,
    strict: bool = False,
    errored: Sequence[ErroredTarget] = (),
) -> BatchSummary:
    """Count passing targets and describe the score spread per dimension.

    Minimums come from ``weights``, so the corpus can be recounted under other
    thresholds than the ones recorded at assessment time. Targets in ``errored``
    count towards the total but never as passing.

    Raises:
        InputError: Assessments of different rubrics.
    """
    kpi = count_above_minimum(assessments, weights, strict=strict)
    if not assessments:
        return BatchSummary(total=len(errored), strict=strict, errored=tuple(errored))

    by_dimension: dict[str, list[Fraction]] = {}
    failing: list[FailingTarget] = []
    for assessment in assessments:
        below = []
        for score in assessment.dimension_scores:
            by_dimension.setdefault(score.dimension_id, []).append(score.score)
            if not meets(score.score, weights.minimum(score.dimension_id), strict):
                below.append(score.dimension_id)
        if below:
            failing.append(
                FailingTarget(
                    target=assessment.target.identifier,
                    label=assessment.target.label,
                    failing_dimensions=tuple(below),
                )
            )
    distributions = {
        dimension_id: ScoreDistribution(minimum=min(values), median=statistics.median(values), maximum=max(values))
        for dimension_id, values in by_dimension.items()
    }
    return BatchSummary(
        rubric_id=kpi.rubric_id,
        passing=kpi.passing,
        total=kpi.total + len(errored),
        strict=strict,
        distributions=distributions,
        failing=tuple(failing),
        errored=tuple(errored),
    )


def render_batch_summary(summary: BatchSummary, fmt: Literal["json", "markdown"] = "json") -> str:
    if fmt == "json":
        return json.dumps(summary.model_dump(mode="json"), indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if fmt != "markdown":
        raise InputError(f"unknown summary format {fmt!r}")

    lines = [
        f"# Batch summary: {summary.rubric_id or 'no targets'}",
        "",
        f"{summary.passing} of {summary.total} targets meet every dimension minimum.",
        "",
    ]
    if summary.distributions:
        lines += ["| Dimension | Min | Median | Max |", "|---|---|---|---|"]
        for dimension_id, spread in summary.distributions.items():
            lines.append(
                f"| {dimension_id} | {format_score(spread.minimum)} | {format_score(spread.median)} "
                f"| {format_score(spread.maximum)} |"
            )
        lines.append("")
    if summary.failing:
        lines += ["## Below minimum", ""]
        for entry in summary.failing:
            name = entry.label or entry.target
            lines.append(f"- {FAIL_MARK} {name}: {', '.join(entry.failing_dimensions)}")
        lines.append("")
    if summary.errored:
        lines += ["## Not assessed", ""]
        for entry in summary.errored:
            lines.append(f"- {FAIL_MARK} {entry.label or entry.target}: {entry.reason}")
        lines.append("")
    return "\n".join(lines)
