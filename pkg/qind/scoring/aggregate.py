"""
Dimension aggregation, the optional overall indicator and corpus KPI counts.

For a dimension with attributes i, the score is the weighted mean

    score = Σ wᵢ·mᵢ / Σ wᵢ

of the achieved levels mᵢ, kept as an exact rational. A dimension meets its
minimum when ``score >= minimum`` (``>`` in strict mode).
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction

from qind.base import FrozenModel
from qind.errors import ContractViolation, InputError
from qind.rubric.model import Rubric
from qind.scoring.model import Assessment, AttributeRating, DimensionScore, OverallMode
from qind.scoring.weights import WeightScheme


def meets(score: Fraction, minimum: Fraction, strict: bool = False) -> bool:
    return score > minimum if strict else score >= minimum


def aggregate_dimension(
    rubric: Rubric,
    ratings: Mapping[str, AttributeRating] | Iterable[AttributeRating],
    weights: WeightScheme,
    dimension_id: str,
    *,
    strict: bool = False,
) -> DimensionScore:
    """Weighted mean of the achieved levels of one dimension.

    Args:
        rubric: The rubric defining the dimension's attributes.
        ratings: Ratings keyed by attribute id, or an iterable of ratings.
        weights: Attribute weights and dimension minimums.
        dimension_id: The dimension to aggregate.
        strict: Require the score to exceed the minimum.

    Returns:
        The DimensionScore.

    Raises:
        ContractViolation: Unknown dimension, or an attribute has no rating or
            no positive weight.
    """
    if not isinstance(ratings, Mapping):
        ratings = {rating.attribute_id: rating for rating in ratings}
    try:
        dimension = rubric.dimension(dimension_id)
    except KeyError:
        raise ContractViolation(f"rubric {rubric.id} has no dimension {dimension_id!r}") from None

    total = Fraction(0)
    weight_sum = Fraction(0)
    for attribute in dimension.attributes:
        rating = ratings.get(attribute.id)
        if rating is None:
            raise ContractViolation(f"attribute {attribute.id} of dimension {dimension_id} is not rated")
        weight = weights.attribute_weights.get(attribute.id)
        if weight is None or weight <= 0:
            raise ContractViolation(f"attribute {attribute.id} has no positive weight")
        total += weight * rating.achieved_level
        weight_sum += weight

    score = total / weight_sum
    minimum = weights.minimum(dimension_id)
    return DimensionScore(
        dimension_id=dimension_id,
        score=score,
        minimum=minimum,
        meets_minimum=meets(score, minimum, strict),
    )


def overall_indicator(
    scores: Sequence[DimensionScore],
    mode: OverallMode,
    weights: WeightScheme,
) -> Fraction | None:
    """Condense dimension scores into one value, if asked to.

    NONE gives no value, THRESHOLD gives 1 when every dimension meets its
    minimum and 0 otherwise, WEIGHTED gives the dimension-weighted mean.

    Raises:
        InputError: WEIGHTED mode without dimension weights.
    """
    mode = OverallMode(mode)
    if mode is OverallMode.NONE:
        return None
    if mode is OverallMode.THRESHOLD:
        return Fraction(int(all(score.meets_minimum for score in scores)))
    if weights.dimension_weights is None:
        raise InputError("the weighted overall indicator needs explicit dimension weights")
    weight_sum = sum((weights.dimension_weights[s.dimension_id] for s in scores), Fraction(0))
    if not weight_sum:
        return None
    total = sum((weights.dimension_weights[s.dimension_id] * s.score for s in scores), Fraction(0))
    return total / weight_sum


class KpiCount(FrozenModel):
    rubric_id: str | None = None
    passing: int = 0
    total: int = 0


def count_above_minimum(
    assessments: Sequence[Assessment],
    weights: WeightScheme,
    *,
    strict: bool = False,
) -> KpiCount:
    """Count assessments whose every dimension score meets the minimum in ``weights``.

    Minimums are re-applied to the recorded scores, so a corpus can be
    recounted under different thresholds.

    Raises:
        InputError: The assessments were made against different rubrics.
    """
    rubric_ids = {a.target.rubric_id for a in assessments}
    if len(rubric_ids) > 1:
        raise InputError(f"cannot count across rubrics: {', '.join(sorted(rubric_ids))}")
    passing = sum(
        1
        for assessment in assessments
        if all(meets(s.score, weights.minimum(s.dimension_id), strict) for s in assessment.dimension_scores)
    )
    return KpiCount(
        rubric_id=rubric_ids.pop() if rubric_ids else None,
        passing=passing,
        total=len(assessments),
    )
