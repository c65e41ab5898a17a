"""
Assessment pipeline: run the collectors that apply to a target, derive
verdicts and score them.

Target kinds:
    path  local working tree: repository scan and REUSE check
    url   remote repository: cloned into a temporary directory, then as path,
          plus a meta-repository lookup of the URL
    pid   DOI or handle: resolution, DataCite harvest, and a meta-repository
          lookup of the landing page

A path or URL target that declares a DOI (``CITATION.cff``, ``codemeta.json``
or a README badge) additionally gets the PID collector.
"""

from __future__ import annotations

import logging
import shutil
import subprocess
import tempfile
from collections.abc import Callable, Iterator
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from pathlib import Path
from typing import Literal

from qind.base import FrozenModel, fraction_to_json, to_fraction
from qind.collectors.answers import ManualAnswers
from qind.collectors.http import RemoteFetcher
from qind.collectors.pid import classify_identifier, fetch_pid_metadata
from qind.collectors.registry import lookup_meta_repository
from qind.collectors.repository import scan_local_repository
from qind.collectors.reuse import check_reuse_compliance
from qind.collectors.verdicts import derive_verdicts
from qind.config import Settings
from qind.errors import CollectorError, InputError, NetworkUnavailable
from qind.evidence import EvidenceBuilder, EvidenceSet
from qind.rubric.model import Rubric
from qind.scoring.assessment import score_assessment
from qind.scoring.model import Assessment, OverallMode, Target
from qind.scoring.weights import WeightScheme

logger = logging.getLogger(__name__)

TargetKind = Literal["path", "url", "pid"]

CLONE_TIMEOUT = 300


class TargetSpec(FrozenModel):
    """One target as given on the command line or in a batch manifest."""

    locator: str
    kind: TargetKind | None = None
    label: str | None = None
    answers: str | None = None
    rubric: str | None = None


def infer_target_kind(locator: str) -> TargetKind:
    """Existing path, then DOI/handle syntax, then http(s) URL.

    Raises:
        InputError: The locator is none of these.
    """
    if Path(locator).exists():
        return "path"
    try:
        kind, _ = classify_identifier(locator)
    except InputError as exc:
        raise InputError(f"{locator!r} is neither an existing path, a PID nor a URL") from exc
    return "url" if kind == "url" else "pid"


@contextmanager
def clone_remote_repository(url: str, settings: Settings) -> Iterator[Path]:
    """Clone ``url`` into a temporary directory that is removed afterwards.

    Raises:
        NetworkUnavailable: Offline mode, or ``git clone`` failed.
        CollectorError: No ``git`` executable.
    """
    if settings.offline:
        raise NetworkUnavailable(f"offline: cannot clone {url}")
    tmp_dir = tempfile.mkdtemp(prefix="qind-")
    try:
        try:
            result = subprocess.run(
                ["git", "clone", "--quiet", url, tmp_dir],
                capture_output=True,
                text=True,
                timeout=CLONE_TIMEOUT,
            )
        except FileNotFoundError as exc:
            raise CollectorError("git executable not found") from exc
        except subprocess.TimeoutExpired as exc:
            raise NetworkUnavailable(f"git clone {url} timed out") from exc
        if result.returncode != 0:
            raise NetworkUnavailable(f"git clone {url} failed: {result.stderr.strip()}")
        logger.info("Cloned %s to %s", url, tmp_dir)
        yield Path(tmp_dir)
    finally:
        shutil.rmtree(tmp_dir, ignore_errors=True)
        logger.debug("Cleaned up %s", tmp_dir)


def _run_all(jobs: list[Callable[[], EvidenceSet]]) -> list[EvidenceSet]:
    if len(jobs) <= 1:
        return [job() for job in jobs]
    with ThreadPoolExecutor(max_workers=len(jobs)) as pool:
        return list(pool.map(lambda job: job(), jobs))


def _merge(target: str, sets: list[EvidenceSet]) -> EvidenceSet:
    merged = EvidenceSet.empty(target)
    for evidence in sets:
        merged = merged.merge(evidence)
    return merged


def _failed(collector: str, target: str, settings: Settings, reason: str) -> EvidenceSet:
    evidence = EvidenceBuilder(collector, target, settings.now())
    evidence.fail(reason)
    return evidence.build()


def _scan_tree(root: Path, settings: Settings) -> list[EvidenceSet]:
    stamp = settings.now()
    return _run_all(
        [
            lambda: scan_local_repository(root, retrieved_at=stamp),
            lambda: check_reuse_compliance(root, retrieved_at=stamp),
        ]
    )


def _follow_ups(local: EvidenceSet, fetcher: RemoteFetcher, registry_locator: str | None) -> list[EvidenceSet]:
    jobs: list[Callable[[], EvidenceSet]] = []
    declared = local.value("declared_pid")
    if isinstance(declared, str) and declared:
        jobs.append(lambda: fetch_pid_metadata(declared, fetcher))
    if registry_locator and registry_locator.startswith(("http://", "https://")):
        jobs.append(lambda: lookup_meta_repository(registry_locator, fetcher))
    return _run_all(jobs)


def collect_evidence(
    locator: str,
    kind: TargetKind,
    settings: Settings,
    *,
    external_score: object | None = None,
    fetcher: RemoteFetcher | None = None,
) -> EvidenceSet:
    """Run every collector that applies to the target and merge the results.

    Remote problems end up as failure entries, never as exceptions.

    Args:
        locator: Path, repository URL or PID.
        kind: Target kind, see ``infer_target_kind``.
        settings: Runtime settings; offline makes remote collectors cache-only.
        external_score: Percentage from an external FAIR assessment, stored as
            fact ``external_fair_score``.
        fetcher: HTTP access, created from ``settings`` when omitted.

    Raises:
        CollectorError: A local path cannot be read.
        InputError: A PID locator cannot be classified.
    """
    fetcher = fetcher or RemoteFetcher(settings)
    sets: list[EvidenceSet] = []

    if kind == "path":
        local = _merge(locator, _scan_tree(Path(locator), settings))
        remote = local.value("vcs_remote_url")
        sets = [local, *_follow_ups(local, fetcher, remote if isinstance(remote, str) else None)]
    elif kind == "url":
        try:
            with clone_remote_repository(locator, settings) as root:
                local = _merge(locator, _scan_tree(root, settings))
        except NetworkUnavailable as exc:
            logger.warning("%s", exc)
            local = _failed("repository", locator, settings, str(exc))
        sets = [local, *_follow_ups(local, fetcher, locator)]
    else:
        pid = fetch_pid_metadata(locator, fetcher)
        landing = pid.value("landing_url")
        sets = [pid]
        if isinstance(landing, str) and landing:
            sets.append(lookup_meta_repository(landing, fetcher))

    if external_score is not None:
        answers = EvidenceBuilder("answers", locator, settings.now())
        answers.add("external_fair_score", fraction_to_json(to_fraction(external_score)), "external_score")
        sets.append(answers.build())

    evidence = _merge(locator, sets)
    logger.info("Collected %d facts for %s (%d failures)", len(evidence.facts), locator, len(evidence.failures))
    return evidence


def assess_target(
    spec: TargetSpec,
    rubric: Rubric,
    settings: Settings,
    *,
    answers: ManualAnswers | None = None,
    weights: WeightScheme | None = None,
    mode: OverallMode = OverallMode.NONE,
    strict: bool = False,
    external_score: object | None = None,
    fetcher: RemoteFetcher | None = None,
) -> Assessment:
    """Collect, judge and score one target.

    ``external_score`` takes precedence over the answers file's own value.

    Raises:
        InputError: Bad locator, answers or weights.
        CollectorError: Unreadable local path.
    """
    answers = answers or ManualAnswers.empty()
    answers.check_against(rubric)
    kind = spec.kind or infer_target_kind(spec.locator)
    score = external_score if external_score is not None else answers.external_score
    try:
        score_value = to_fraction(score) if score is not None else None
    except ValueError as exc:
        raise InputError(f"external score: {exc}") from exc
    if score_value is not None and not 0 <= score_value <= 100:
        raise InputError(f"external score {fraction_to_json(score_value)} outside 0..100")

    evidence = collect_evidence(spec.locator, kind, settings, external_score=score_value, fetcher=fetcher)
    target = Target(
        identifier=spec.locator,
        kind=rubric.kind,
        rubric_id=rubric.id,
        rubric_version=rubric.version,
        timestamp=settings.now(),
        label=spec.label,
        locator_kind=kind,
    )
    verdicts = derive_verdicts(rubric, evidence, answers, settings)
    return score_assessment(rubric, target, verdicts, weights, mode=mode, strict=strict, evidence=evidence)
