"""
Rubric data model.

A rubric is a tree of dimensions, each split into attributes, each holding an
ordered list of cumulative level statements for levels 1..max_level. Level 0
("non-existent") is implicit: it is what an attribute gets when no statement
is achieved. Every level is bound either to an automated check id or to
``manual``.

Structural checks (duplicate ids, missing levels, weights) live in
``qind.rubric.validation`` so they can be reported as findings with a path
instead of failing the parse.
"""

from __future__ import annotations

from collections.abc import Iterator
from typing import Literal

from qind.base import FrozenModel, Rational

MANUAL = "manual"


class LevelStatement(FrozenModel):
    """One rubric sentence; achieving it implies all lower statements."""

    level: int
    text: str

    @property
    def cumulative(self) -> bool:
        return True


class CheckBinding(FrozenModel):
    """Binds a level to an automated check id or to ``manual``."""

    level: int
    check: str

    @property
    def is_manual(self) -> bool:
        return self.check == MANUAL


class Attribute(FrozenModel):
    id: str
    title: str
    default_weight: Rational
    levels: tuple[LevelStatement, ...]
    checks: tuple[CheckBinding, ...]
    baseline: str | None = None

    def statement(self, level: int) -> LevelStatement | None:
        return next((s for s in self.levels if s.level == level), None)

    def binding(self, level: int) -> str | None:
        """The check id bound to ``level`` (``manual`` included), if any."""
        return next((b.check for b in self.checks if b.level == level), None)


class Dimension(FrozenModel):
    id: str
    title: str
    description: str = ""
    attributes: tuple[Attribute, ...]


class ScaleLevel(FrozenModel):
    """Generic name of a maturity level, shared by all attributes of a rubric."""

    level: int
    label: str
    description: str = ""


class Rubric(FrozenModel):
    id: str
    title: str
    version: str = "1.0"
    kind: Literal["data", "software"] = "software"
    max_level: int
    scale: tuple[ScaleLevel, ...] = ()
    dimensions: tuple[Dimension, ...]

    def attributes(self) -> Iterator[Attribute]:
        for dimension in self.dimensions:
            yield from dimension.attributes

    def attribute_ids(self) -> list[str]:
        return [attribute.id for attribute in self.attributes()]

    def attribute(self, attribute_id: str) -> Attribute:
        for attribute in self.attributes():
            if attribute.id == attribute_id:
                return attribute
        raise KeyError(attribute_id)

    def dimension(self, dimension_id: str) -> Dimension:
        for dimension in self.dimensions:
            if dimension.id == dimension_id:
                return dimension
        raise KeyError(dimension_id)

    def dimension_of(self, attribute_id: str) -> Dimension:
        for dimension in self.dimensions:
            if any(attribute.id == attribute_id for attribute in dimension.attributes):
                return dimension
        raise KeyError(attribute_id)

    def scale_label(self, level: int) -> str:
        return next((s.label for s in self.scale if s.level == level), str(level))

    @property
    def reference(self) -> str:
        """``id@version``, the identity recorded in reports."""
        return f"{self.id}@{self.version}"
