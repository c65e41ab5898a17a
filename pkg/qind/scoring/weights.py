"""
Weight schemes.

Weights file format (all keys optional)::

    {"attribute_weights": {"<attribute_id>": 2},
     "dimension_minimums": {"<dimension_id>": 3},
     "dimension_weights": {"<dimension_id>": 1}}

Numbers may be JSON numbers or ``"p/q"`` strings.
"""

from __future__ import annotations

import json
import logging
from fractions import Fraction

from pydantic import ValidationError

from qind.base import FrozenModel, Rational
from qind.errors import InputError
from qind.rubric.loader import describe_validation_error
from qind.rubric.model import Rubric

logger = logging.getLogger(__name__)


class WeightOverrides(FrozenModel):
    attribute_weights: dict[str, Rational] = {}
    dimension_minimums: dict[str, Rational] = {}
    dimension_weights: dict[str, Rational] | None = None


class WeightScheme(FrozenModel):
    """Attribute weights, per-dimension minimums and optional dimension weights."""

    attribute_weights: dict[str, Rational]
    dimension_minimums: dict[str, Rational] = {}
    dimension_weights: dict[str, Rational] | None = None

    def weight(self, attribute_id: str) -> Fraction:
        return self.attribute_weights[attribute_id]

    def minimum(self, dimension_id: str) -> Fraction:
        return self.dimension_minimums.get(dimension_id, Fraction(0))

    @classmethod
    def for_rubric(cls, rubric: Rubric, overrides: WeightOverrides | None = None) -> WeightScheme:
        """Rubric default weights with ``overrides`` applied on top.

        Raises:
            InputError: Unknown ids, non-positive weights, minimums outside
                0..max_level, or dimension weights not covering every dimension.
        """
        overrides = overrides or WeightOverrides()
        attribute_ids = set(rubric.attribute_ids())
        dimension_ids = [d.id for d in rubric.dimensions]
        problems: list[str] = []

        if unknown := sorted(set(overrides.attribute_weights) - attribute_ids):
            problems.append(f"unknown attributes: {', '.join(unknown)}")
        for attribute_id, weight in overrides.attribute_weights.items():
            if weight <= 0:
                problems.append(f"weight of {attribute_id} must be positive, got {weight}")

        if unknown := sorted(set(overrides.dimension_minimums) - set(dimension_ids)):
            problems.append(f"unknown dimensions in minimums: {', '.join(unknown)}")
        for dimension_id, minimum in overrides.dimension_minimums.items():
            if not 0 <= minimum <= rubric.max_level:
                problems.append(f"minimum of {dimension_id} must lie in 0..{rubric.max_level}, got {minimum}")

        if overrides.dimension_weights is not None:
            given = set(overrides.dimension_weights)
            if unknown := sorted(given - set(dimension_ids)):
                problems.append(f"unknown dimensions in dimension weights: {', '.join(unknown)}")
            if missing := [d for d in dimension_ids if d not in given]:
                problems.append(f"dimension weights missing for: {', '.join(missing)}")
            for dimension_id, weight in overrides.dimension_weights.items():
                if weight <= 0:
                    problems.append(f"dimension weight of {dimension_id} must be positive, got {weight}")

        if problems:
            raise InputError("; ".join(problems))

        weights = {a.id: overrides.attribute_weights.get(a.id, a.default_weight) for a in rubric.attributes()}
        return cls(
            attribute_weights=weights,
            dimension_minimums={d: overrides.dimension_minimums[d] for d in dimension_ids if d in overrides.dimension_minimums},
            dimension_weights=(
                {d: overrides.dimension_weights[d] for d in dimension_ids}
                if overrides.dimension_weights is not None
                else None
            ),
        )


def load_weights(document: str | bytes, rubric: Rubric) -> WeightScheme:
    """Read a weights file and resolve it against ``rubric``.

    Raises:
        InputError: Malformed JSON, unknown keys or out-of-range values.
    """
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise InputError(f"weights file: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    try:
        overrides = WeightOverrides.model_validate(data)
    except ValidationError as exc:
        raise InputError(f"weights file: {describe_validation_error(exc)}") from exc
    logger.debug("Loaded weight overrides for %s", rubric.reference)
    return WeightScheme.for_rubric(rubric, overrides)
