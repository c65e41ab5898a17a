"""Pure scoring core: cumulative ratings, weighted dimension scores, KPI counts."""

from qind.scoring.aggregate import KpiCount, aggregate_dimension, count_above_minimum, overall_indicator
from qind.scoring.assessment import score_assessment
from qind.scoring.model import (
    Assessment,
    AttributeRating,
    DimensionScore,
    OverallMode,
    Source,
    Status,
    Target,
    Verdict,
)
from qind.scoring.rating import map_external_score, rate_attribute
from qind.scoring.weights import WeightOverrides, WeightScheme, load_weights

__all__ = [
    "Assessment",
    "AttributeRating",
    "DimensionScore",
    "KpiCount",
    "OverallMode",
    "Source",
    "Status",
    "Target",
    "Verdict",
    "WeightOverrides",
    "WeightScheme",
    "aggregate_dimension",
    "count_above_minimum",
    "load_weights",
    "map_external_score",
    "overall_indicator",
    "rate_attribute",
    "score_assessment",
]
