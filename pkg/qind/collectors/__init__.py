"""Evidence collectors, automated checks and verdict derivation."""

from qind.collectors.answers import AttributeAnswer, ManualAnswers, StatementAnswer, load_answers
from qind.collectors.checks import CHECKS, CheckOutcome, check, evaluate_check, known_check_ids
from qind.collectors.http import RemoteFetcher
from qind.collectors.pid import classify_identifier, fetch_pid_metadata
from qind.collectors.registry import lookup_meta_repository
from qind.collectors.repository import scan_local_repository
from qind.collectors.reuse import check_reuse_compliance
from qind.collectors.verdicts import derive_verdicts

__all__ = [
    "CHECKS",
    "AttributeAnswer",
    "CheckOutcome",
    "ManualAnswers",
    "RemoteFetcher",
    "StatementAnswer",
    "check",
    "check_reuse_compliance",
    "classify_identifier",
    "derive_verdicts",
    "evaluate_check",
    "fetch_pid_metadata",
    "known_check_ids",
    "load_answers",
    "lookup_meta_repository",
    "scan_local_repository",
]
