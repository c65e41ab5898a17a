"""Cumulative maturity rating of a single attribute."""

from __future__ import annotations

import math
from collections.abc import Sequence
from fractions import Fraction

from qind.base import to_fraction
from qind.errors import ContractViolation, InputError
from qind.scoring.model import AttributeRating, Status, Verdict


def rate_attribute(
    verdicts: Sequence[Verdict],
    *,
    attribute_id: str = "",
    max_level: int | None = None,
) -> AttributeRating:
    """Rate an attribute from its per-level verdicts.

    The achieved level is the length of the longest run of SATISFIED verdicts
    starting at level 1. UNKNOWN and UNSATISFIED both end the run. SATISFIED
    levels above the first gap are kept as anomalies and do not count.

    Args:
        verdicts: One verdict per level 1..n, in level order.
        attribute_id: Recorded on the rating.
        max_level: When given, ``n`` must equal it.

    Returns:
        The AttributeRating.

    Raises:
        ContractViolation: Levels are missing, duplicated or out of order.
    """
    levels = [verdict.level for verdict in verdicts]
    expected = list(range(1, len(levels) + 1))
    if levels != expected:
        raise ContractViolation(f"{attribute_id or 'attribute'}: verdict levels {levels} are not 1..{len(levels)}")
    if max_level is not None and len(levels) != max_level:
        raise ContractViolation(
            f"{attribute_id or 'attribute'}: expected {max_level} verdicts, got {len(levels)}"
        )

    achieved = 0
    for verdict in verdicts:
        if verdict.status is not Status.SATISFIED:
            break
        achieved = verdict.level
    anomalies = tuple(
        verdict.level for verdict in verdicts if verdict.level > achieved + 1 and verdict.status is Status.SATISFIED
    )
    return AttributeRating(
        attribute_id=attribute_id,
        achieved_level=achieved,
        verdicts=tuple(verdicts),
        anomalies=anomalies,
    )


def map_external_score(percent: int | float | Fraction | str) -> int:
    """Map an external FAIR-tool percentage onto the 0..4 scale.

    Buckets are half-open from below: 0 up to and including 20 is level 0,
    then each further 20 points adds a level, so 20.5 is level 1 and 100 is 4.

    Raises:
        InputError: The value is not a number in [0, 100].
    """
    try:
        value = to_fraction(percent)
    except ValueError as exc:
        raise InputError(f"external score: {exc}") from exc
    if not 0 <= value <= 100:
        raise InputError(f"external score {percent!r} is outside 0..100")
    if value <= 20:
        return 0
    return math.ceil(value / 20) - 1
