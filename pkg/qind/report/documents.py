"""
JSON and Markdown assessment reports.

The JSON report is the archival form: it holds the whole Assessment (ratings
with verdicts, scores, evidence with provenance) plus a derived ``summary``
section for readers. ``parse_report`` reads it back. Both emitters are
deterministic: keys are sorted and nothing depends on the clock.
"""

from __future__ import annotations

import json
import logging
from fractions import Fraction
from typing import Any, Literal

from pydantic import ValidationError

from qind import TOOL_NAME, __version__
from qind.errors import InputError
from qind.rubric.loader import describe_validation_error
from qind.rubric.model import Rubric
from qind.scoring.model import Assessment, OverallMode

logger = logging.getLogger(__name__)

SCHEMA_VERSION = "1.0"

ReportFormat = Literal["json", "markdown"]

PASS_MARK = "✓"
FAIL_MARK = "✗"


def format_score(value: Fraction) -> str:
    """Two decimals at most, trailing zeros dropped."""
    text = f"{float(value):.2f}".rstrip("0").rstrip(".")
    return text or "0"


def _cell(text: str | None) -> str:
    return (text or "").replace("|", "\\|").replace("\n", " ").strip()


def _summary(assessment: Assessment, rubric: Rubric | None) -> dict[str, Any]:
    max_level = rubric.max_level if rubric else None
    return {
        "passes_all_minimums": assessment.passes_all_minimums,
        "failing_dimensions": assessment.failing_dimensions(),
        "ratings": {
            rating.attribute_id: {
                "level": rating.achieved_level,
                "max_level": max_level,
                "source": rating.source,
                "justification": rating.justification,
                "anomalies": list(rating.anomalies),
            }
            for rating in assessment.ratings
        },
    }


def report_document(assessment: Assessment, rubric: Rubric | None = None) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": TOOL_NAME, "version": __version__},
        "rubric": {
            "id": assessment.target.rubric_id,
            "version": assessment.target.rubric_version,
            "max_level": rubric.max_level if rubric else None,
        },
        "assessment": assessment.model_dump(mode="json"),
        "summary": _summary(assessment, rubric),
    }


def _json_report(assessment: Assessment, rubric: Rubric | None) -> str:
    return json.dumps(report_document(assessment, rubric), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _markdown_report(assessment: Assessment, rubric: Rubric) -> str:
    target = assessment.target
    lines = [
        f"# Quality assessment: {target.display_name}",
        "",
        f"- Target: `{target.identifier}`" + (f" ({target.locator_kind})" if target.locator_kind else ""),
        f"- Rubric: {rubric.title} (`{rubric.reference}`), levels 0-{rubric.max_level}",
        f"- Assessed: {target.timestamp.isoformat()}",
        f"- Tool: {TOOL_NAME} {__version__}",
        "",
        "## Scores",
        "",
        "| Dimension | Score | Minimum | Meets minimum |",
        "|---|---|---|---|",
    ]
    for score in assessment.dimension_scores:
        title = rubric.dimension(score.dimension_id).title
        mark = PASS_MARK if score.meets_minimum else FAIL_MARK
        lines.append(f"| {title} | {format_score(score.score)} | {format_score(score.minimum)} | {mark} |")
    lines.append("")
    if assessment.overall_mode is not OverallMode.NONE and assessment.overall is not None:
        lines += [f"Overall indicator ({assessment.overall_mode.value}): {format_score(assessment.overall)}", ""]
    comparison = ">" if assessment.strict else ">="
    if assessment.passes_all_minimums:
        lines.append(f"Result: {PASS_MARK} every dimension score {comparison} its minimum")
    else:
        failing = ", ".join(rubric.dimension(d).title for d in assessment.failing_dimensions())
        lines.append(f"Result: {FAIL_MARK} below minimum in {failing}")
    lines.append("")

    for dimension in rubric.dimensions:
        lines += [
            f"## {dimension.title}",
            "",
            "| Attribute | Level | Max | Source | Justification |",
            "|---|---|---|---|---|",
        ]
        for attribute in dimension.attributes:
            rating = assessment.rating(attribute.id)
            level = f"{rating.achieved_level} ({rubric.scale_label(rating.achieved_level)})"
            lines.append(
                f"| {_cell(attribute.title)} | {level} | {rubric.max_level} | {rating.source} "
                f"| {_cell(rating.justification)} |"
            )
        lines.append("")

    anomalous = [r for r in assessment.ratings if r.anomalies]
    if anomalous:
        lines += ["## Anomalies", ""]
        for rating in anomalous:
            levels = ", ".join(str(level) for level in rating.anomalies)
            lines.append(
                f"- {rubric.attribute(rating.attribute_id).title}: level(s) {levels} satisfied "
                f"above a gap (achieved level {rating.achieved_level})"
            )
        lines.append("")

    if assessment.evidence and assessment.evidence.failures:
        lines += ["## Collector failures", ""]
        lines += [f"- {f.collector}: {_cell(f.reason)}" for f in assessment.evidence.failures]
        lines.append("")
    return "\n".join(lines)


def emit_report(assessment: Assessment, rubric: Rubric, fmt: ReportFormat = "json") -> str:
    """Render an assessment.

    Args:
        assessment: A complete assessment.
        rubric: The rubric it was scored against (titles and level names).
        fmt: ``json`` or ``markdown``.

    Returns:
        The document text.
    """
    if fmt == "json":
        return _json_report(assessment, rubric)
    if fmt == "markdown":
        return _markdown_report(assessment, rubric)
    raise InputError(f"unknown report format {fmt!r}")


def parse_report(text: str | bytes) -> Assessment:
    """Read the Assessment back from a JSON report.

    Raises:
        InputError: Not a JSON report of a supported schema version.
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"report: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(document, dict) or "assessment" not in document:
        raise InputError("report: no assessment section")
    if document.get("schema_version") != SCHEMA_VERSION:
        raise InputError(f"report: unsupported schema version {document.get('schema_version')!r}")
    try:
        return Assessment.model_validate(document["assessment"])
    except ValidationError as exc:
        raise InputError(f"report: {describe_validation_error(exc)}") from exc
