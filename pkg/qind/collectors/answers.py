"""
Manual answers: expert judgment for levels no check can decide.

File format::

    {
      "rubric": "fairst",
      "external_score": 72,
      "answers": {
        "team_expertise": {"level": 2, "justification": "..."},
        "versioning": {"statements": {"4": true}, "justification": "..."},
        "adaptability": {"statements": {"1": {"value": true, "justification": "..."}}}
      }
    }

An explicit ``level`` overrides every verdict of the attribute. A statement
answer overrides a single level.
"""

from __future__ import annotations

import json
import logging

from pydantic import ValidationError, field_validator, model_validator

from qind.base import FrozenModel, Rational
from qind.errors import InputError
from qind.rubric.loader import describe_validation_error
from qind.rubric.model import Rubric

logger = logging.getLogger(__name__)


class StatementAnswer(FrozenModel):
    value: bool
    justification: str | None = None


class AttributeAnswer(FrozenModel):
    level: int | None = None
    justification: str | None = None
    statements: dict[int, StatementAnswer] = {}

    @field_validator("statements", mode="before")
    @classmethod
    def _expand_booleans(cls, value: object) -> object:
        if isinstance(value, dict):
            return {k: {"value": v} if isinstance(v, bool) else v for k, v in value.items()}
        return value

    @model_validator(mode="after")
    def _level_needs_justification(self) -> AttributeAnswer:
        if self.level is not None:
            if self.statements:
                raise ValueError("give either an explicit level or statements, not both")
            if not (self.justification or "").strip():
                raise ValueError("an explicit level needs a justification")
        return self

    def statement_note(self, level: int) -> str | None:
        answer = self.statements.get(level)
        if answer is None:
            return None
        return (answer.justification or "").strip() or (self.justification or "").strip() or None


class ManualAnswers(FrozenModel):
    rubric: str | None = None
    external_score: Rational | None = None
    answers: dict[str, AttributeAnswer] = {}

    def answer(self, attribute_id: str) -> AttributeAnswer | None:
        return self.answers.get(attribute_id)

    def check_against(self, rubric: Rubric) -> None:
        """Validate the answers against the rubric they will be applied to.

        Raises:
            InputError: Unknown attribute ids (all of them are listed), a rubric
                mismatch, a level out of range, or a true statement without a
                justification.
        """
        if self.rubric is not None and self.rubric not in (rubric.id, rubric.reference):
            raise InputError(f"answers were written for rubric {self.rubric!r}, not {rubric.id!r}")
        known = set(rubric.attribute_ids())
        if unknown := sorted(set(self.answers) - known):
            raise InputError(f"answers reference unknown attributes: {', '.join(unknown)}")

        problems: list[str] = []
        for attribute_id, answer in self.answers.items():
            if answer.level is not None and not 0 <= answer.level <= rubric.max_level:
                problems.append(f"{attribute_id}: level {answer.level} outside 0..{rubric.max_level}")
            for level, statement in sorted(answer.statements.items()):
                if not 1 <= level <= rubric.max_level:
                    problems.append(f"{attribute_id}: statement {level} outside 1..{rubric.max_level}")
                elif statement.value and answer.statement_note(level) is None:
                    problems.append(f"{attribute_id}: statement {level} is true but has no justification")
        if self.external_score is not None and not 0 <= self.external_score <= 100:
            problems.append(f"external_score {self.external_score} outside 0..100")
        if problems:
            raise InputError("; ".join(problems))

    @classmethod
    def empty(cls) -> ManualAnswers:
        return cls()


def load_answers(document: str | bytes) -> ManualAnswers:
    """Parse a manual answers file.

    Raises:
        InputError: Malformed JSON or a document that does not match the format.
    """
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise InputError(f"answers file: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    try:
        answers = ManualAnswers.model_validate(data)
    except ValidationError as exc:
        raise InputError(f"answers file: {describe_validation_error(exc)}") from exc
    logger.debug("Loaded manual answers for %d attributes", len(answers.answers))
    return answers
