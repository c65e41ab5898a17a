"""Compose verdicts into a complete Assessment."""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence

from qind.errors import ContractViolation
from qind.evidence import EvidenceSet
from qind.rubric.model import Rubric
from qind.scoring.aggregate import aggregate_dimension, overall_indicator
from qind.scoring.model import Assessment, OverallMode, Target, Verdict
from qind.scoring.rating import rate_attribute
from qind.scoring.weights import WeightScheme

logger = logging.getLogger(__name__)


def score_assessment(
    rubric: Rubric,
    target: Target,
    verdicts: Mapping[str, Sequence[Verdict]],
    weights: WeightScheme | None = None,
    *,
    mode: OverallMode = OverallMode.NONE,
    strict: bool = False,
    evidence: EvidenceSet | None = None,
) -> Assessment:
    """Rate every attribute, aggregate every dimension and apply the overall mode.

    Args:
        rubric: The rubric the verdicts were derived for.
        target: Target descriptor recorded on the assessment.
        verdicts: Per attribute id, the ordered verdicts for levels 1..max_level.
        weights: Weight scheme; rubric defaults when omitted.
        mode: Overall indicator mode.
        strict: Use ``>`` instead of ``>=`` for minimums.
        evidence: Evidence to embed for provenance.

    Raises:
        ContractViolation: Verdicts do not cover exactly the rubric attributes.
        InputError: WEIGHTED mode without dimension weights.
    """
    weights = weights or WeightScheme.for_rubric(rubric)
    attribute_ids = rubric.attribute_ids()
    if missing := [a for a in attribute_ids if a not in verdicts]:
        raise ContractViolation(f"no verdicts for: {', '.join(missing)}")
    if extra := sorted(set(verdicts) - set(attribute_ids)):
        raise ContractViolation(f"verdicts for attributes not in {rubric.id}: {', '.join(extra)}")

    ratings = tuple(
        rate_attribute(verdicts[a], attribute_id=a, max_level=rubric.max_level) for a in attribute_ids
    )
    by_id = {rating.attribute_id: rating for rating in ratings}
    scores = tuple(
        aggregate_dimension(rubric, by_id, weights, dimension.id, strict=strict) for dimension in rubric.dimensions
    )
    for rating in ratings:
        if rating.anomalies:
            logger.warning(
                "%s: levels %s satisfied above the achieved level %d",
                rating.attribute_id,
                ",".join(map(str, rating.anomalies)),
                rating.achieved_level,
            )

    return Assessment(
        target=target,
        ratings=ratings,
        dimension_scores=scores,
        overall=overall_indicator(scores, mode, weights),
        overall_mode=OverallMode(mode),
        strict=strict,
        passes_all_minimums=all(score.meets_minimum for score in scores),
        evidence=evidence,
    )
