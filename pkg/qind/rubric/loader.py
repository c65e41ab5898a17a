"""
Rubric file format: reading, writing and resolution of rubric references.

A rubric file is a UTF-8 JSON document::

    {"id", "title", "max_level", "version"?, "kind"?, "scale"?,
     "dimensions": [{"id", "title", "description",
                     "attributes": [{"id", "title", "default_weight", "baseline"?,
                                     "levels": [{"level", "text"}],
                                     "checks": [{"level", "check"}]}]}]}

Unknown keys are rejected.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path

from pydantic import ValidationError

from qind.errors import RubricNotFoundError, RubricParseError, RubricValidationError
from qind.rubric.builtin import BUILTIN_RUBRIC_IDS, builtin_rubric
from qind.rubric.model import Rubric
from qind.rubric.validation import validate_rubric

logger = logging.getLogger(__name__)


def describe_validation_error(exc: ValidationError) -> str:
    """Flatten a pydantic error into ``location: message`` pairs."""
    parts = []
    for item in exc.errors():
        location = ".".join(str(part) for part in item["loc"]) or "<document>"
        parts.append(f"{location}: {item['msg']}")
    return "; ".join(parts)


def parse_rubric(document: str | bytes) -> Rubric:
    """Parse a rubric document without checking rubric invariants.

    Raises:
        RubricParseError: The document is not JSON or does not match the format.
    """
    if isinstance(document, bytes):
        document = document.decode("utf-8")
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise RubricParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    try:
        return Rubric.model_validate(data)
    except ValidationError as exc:
        raise RubricParseError(describe_validation_error(exc)) from exc


def load_rubric(document: str | bytes) -> Rubric:
    """Parse and validate a rubric document.

    Args:
        document: The rubric file content.

    Returns:
        A validated Rubric.

    Raises:
        RubricParseError: The document is not JSON or does not match the format.
        RubricValidationError: The rubric breaks an invariant.
    """
    rubric = parse_rubric(document)
    report = validate_rubric(rubric)
    if not report.ok:
        raise RubricValidationError(report)
    return rubric


def serialize_rubric(rubric: Rubric) -> str:
    """Canonical JSON form of a rubric; ``load_rubric`` inverts it."""
    return json.dumps(rubric.model_dump(mode="json"), indent=2, ensure_ascii=False) + "\n"


def resolve_rubric(reference: str) -> Rubric:
    """Resolve a built-in rubric id or a path to a rubric file.

    Raises:
        RubricNotFoundError: The reference is neither.
    """
    if reference in BUILTIN_RUBRIC_IDS:
        return builtin_rubric(reference)
    path = Path(reference)
    if path.is_file():
        logger.debug("Loading rubric file %s", path)
        try:
            return load_rubric(path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise RubricNotFoundError(f"cannot read rubric file {path}: {exc}") from exc
    raise RubricNotFoundError(
        f"unknown rubric {reference!r} (built-ins: {', '.join(BUILTIN_RUBRIC_IDS)}; or a path to a rubric file)"
    )
