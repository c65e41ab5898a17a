"""Translate evidence and manual answers into per-level verdicts."""

from __future__ import annotations

import logging

from qind.collectors.answers import ManualAnswers
from qind.collectors.checks import CHECKS, evaluate_check
from qind.config import Settings
from qind.evidence import EvidenceSet
from qind.rubric.model import MANUAL, Rubric
from qind.scoring.model import Source, Status, Verdict

logger = logging.getLogger(__name__)


def derive_verdicts(
    rubric: Rubric,
    evidence: EvidenceSet,
    answers: ManualAnswers | None = None,
    settings: Settings | None = None,
) -> dict[str, list[Verdict]]:
    """Decide every level statement of every attribute.

    Precedence per level: an explicit attribute level, then a statement answer,
    then the bound automated check. Manual-bound levels without an answer are
    UNKNOWN with source DEFAULTED.

    Args:
        rubric: A validated rubric.
        evidence: Merged evidence of the target.
        answers: Manual answers; checked against the rubric first.
        settings: Check thresholds; defaults apply when omitted.

    Returns:
        Attribute id to verdicts for levels 1..max_level, in rubric order.

    Raises:
        InputError: The answers do not fit the rubric.
    """
    answers = answers or ManualAnswers.empty()
    answers.check_against(rubric)
    settings = settings or Settings()

    result: dict[str, list[Verdict]] = {}
    for attribute in rubric.attributes():
        answer = answers.answer(attribute.id)
        verdicts: list[Verdict] = []
        for level in range(1, rubric.max_level + 1):
            if answer is not None and answer.level is not None:
                status = Status.SATISFIED if level <= answer.level else Status.UNSATISFIED
                verdicts.append(Verdict(level=level, status=status, source=Source.MANUAL, note=answer.justification))
                continue
            if answer is not None and level in answer.statements:
                statement = answer.statements[level]
                verdicts.append(
                    Verdict(
                        level=level,
                        status=Status.SATISFIED if statement.value else Status.UNSATISFIED,
                        source=Source.MANUAL,
                        note=answer.statement_note(level),
                    )
                )
                continue

            check_id = attribute.binding(level)
            if check_id is not None and check_id != MANUAL and check_id not in CHECKS:
                logger.warning("%s level %d is bound to unknown check %r", attribute.id, level, check_id)
            if check_id is None or check_id == MANUAL or check_id not in CHECKS:
                verdicts.append(Verdict(level=level, status=Status.UNKNOWN, source=Source.DEFAULTED))
                continue
            outcome = evaluate_check(check_id, evidence, settings, level)
            verdicts.append(
                Verdict(level=level, status=outcome.status, source=Source.AUTO, evidence_refs=outcome.evidence_refs)
            )
        result[attribute.id] = verdicts
        logger.debug("%s: %s", attribute.id, "".join(v.status.value[0].upper() for v in verdicts))
    return result
