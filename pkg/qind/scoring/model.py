"""Scoring data types: verdicts, ratings, dimension scores and assessments."""

from __future__ import annotations

from datetime import datetime
from enum import Enum
from fractions import Fraction
from typing import Literal

from qind.base import FrozenModel, Rational
from qind.evidence import EvidenceSet


class Status(str, Enum):
    SATISFIED = "satisfied"
    UNSATISFIED = "unsatisfied"
    UNKNOWN = "unknown"


class Source(str, Enum):
    AUTO = "auto"
    MANUAL = "manual"
    DEFAULTED = "defaulted"


class OverallMode(str, Enum):
    NONE = "none"
    THRESHOLD = "threshold"
    WEIGHTED = "weighted"


class Verdict(FrozenModel):
    """Outcome for one level statement of one attribute."""

    level: int
    status: Status
    source: Source
    evidence_refs: tuple[str, ...] = ()
    note: str | None = None


class AttributeRating(FrozenModel):
    attribute_id: str
    achieved_level: int
    verdicts: tuple[Verdict, ...]
    anomalies: tuple[int, ...] = ()

    @property
    def justification(self) -> str | None:
        """Manual notes attached to the verdicts, de-duplicated in level order."""
        notes: list[str] = []
        for verdict in self.verdicts:
            if verdict.source is Source.MANUAL and verdict.note and verdict.note not in notes:
                notes.append(verdict.note)
        return "; ".join(notes) or None

    @property
    def source(self) -> str:
        """``auto``, ``manual``, ``mixed`` or ``defaulted`` when nothing was established."""
        sources = {v.source for v in self.verdicts if v.source is not Source.DEFAULTED}
        if not sources:
            return Source.DEFAULTED.value
        if len(sources) > 1:
            return "mixed"
        return sources.pop().value


class DimensionScore(FrozenModel):
    dimension_id: str
    score: Rational
    minimum: Rational = Fraction(0)
    meets_minimum: bool


class Target(FrozenModel):
    """What was assessed, against which rubric and when."""

    identifier: str
    kind: Literal["data", "software"]
    rubric_id: str
    rubric_version: str = "1.0"
    timestamp: datetime
    label: str | None = None
    locator_kind: Literal["path", "url", "pid"] | None = None

    @property
    def display_name(self) -> str:
        return self.label or self.identifier


class Assessment(FrozenModel):
    target: Target
    ratings: tuple[AttributeRating, ...]
    dimension_scores: tuple[DimensionScore, ...]
    overall: Rational | None = None
    overall_mode: OverallMode = OverallMode.NONE
    strict: bool = False
    passes_all_minimums: bool
    evidence: EvidenceSet | None = None

    def rating(self, attribute_id: str) -> AttributeRating:
        for rating in self.ratings:
            if rating.attribute_id == attribute_id:
                return rating
        raise KeyError(attribute_id)

    def score(self, dimension_id: str) -> DimensionScore:
        for score in self.dimension_scores:
            if score.dimension_id == dimension_id:
                return score
        raise KeyError(dimension_id)

    def failing_dimensions(self) -> list[str]:
        return [s.dimension_id for s in self.dimension_scores if not s.meets_minimum]
