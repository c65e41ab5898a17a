"""End-to-end tests of evidence collection and assessment, including the golden repository."""

from __future__ import annotations

import json
import subprocess
from fractions import Fraction
from pathlib import Path

import pytest

from qind.collectors.answers import ManualAnswers, load_answers
from qind.errors import CollectorError, InputError, NetworkUnavailable
from qind.pipeline import TargetSpec, assess_target, clone_remote_repository, collect_evidence, infer_target_kind
from qind.report import emit_report
from qind.rubric import builtin_rubric
from qind.scoring import OverallMode, WeightOverrides, WeightScheme

from helpers import FIXED_TIME, FIXTURES
from remote_fixtures import DOI, seed_datacite_record

GOLDEN = json.loads((FIXTURES / "golden-expected.json").read_text(encoding="utf-8"))


def _golden_answers() -> ManualAnswers:
    return load_answers((FIXTURES / "golden-answers.json").read_text(encoding="utf-8"))


def _assess_golden(golden_repo, settings, **options):
    return assess_target(
        TargetSpec(locator=str(golden_repo), label="golden-tool"),
        builtin_rubric("fairst"),
        settings,
        answers=_golden_answers(),
        **options,
    )


@pytest.mark.golden
def test_golden_levels_and_scores(golden_repo, settings, seeded_golden):
    assessment = _assess_golden(golden_repo, settings)
    assert {r.attribute_id: r.achieved_level for r in assessment.ratings} == GOLDEN["levels"]
    assert {r.attribute_id: list(r.anomalies) for r in assessment.ratings if r.anomalies} == GOLDEN["anomalies"]
    assert {s.dimension_id: s.score for s in assessment.dimension_scores} == {
        d: Fraction(v) for d, v in GOLDEN["dimension_scores"].items()
    }
    assert assessment.passes_all_minimums
    assert assessment.evidence.failures == ()
    assert assessment.target.timestamp == FIXED_TIME
    assert assessment.target.locator_kind == "path"


@pytest.mark.golden
def test_golden_manual_justifications(golden_repo, settings, seeded_golden):
    assessment = _assess_golden(golden_repo, settings)
    assert assessment.rating("team_expertise").source == "manual"
    assert assessment.rating("community_standards").justification == "Output files follow the CF conventions."
    reproducibility = assessment.rating("reproducibility")
    assert reproducibility.source == "mixed"
    assert reproducibility.justification == "Results are regenerated from tagged releases."


@pytest.mark.golden
def test_golden_report_is_reproducible(golden_repo, settings, seeded_golden):
    rubric = builtin_rubric("fairst")
    first = emit_report(_assess_golden(golden_repo, settings), rubric)
    second = emit_report(_assess_golden(golden_repo, settings), rubric)
    assert first == second


@pytest.mark.golden
def test_golden_minimums(golden_repo, settings, seeded_golden):
    weights = WeightScheme.for_rubric(
        builtin_rubric("fairst"), WeightOverrides(dimension_minimums={"interoperable": 1, "scientific_basis": 2})
    )
    assessment = _assess_golden(golden_repo, settings, weights=weights)
    assert assessment.failing_dimensions() == ["scientific_basis"]
    strict = _assess_golden(golden_repo, settings, weights=weights, strict=True)
    assert strict.failing_dimensions() == ["interoperable", "scientific_basis"]


def test_offline_path_target_records_registry_failure(golden_repo, offline_settings):
    evidence = collect_evidence(str(golden_repo), "path", offline_settings)
    assert [f.collector for f in evidence.failures] == ["registry"]
    assert evidence.value("readme_present") is True
    assert not evidence.has("listed_in_meta_repository")


def test_local_tree_without_remote_needs_no_network(make_tree, settings):
    root = make_tree({"README.md": "# x\n", "src/x.py": "x = 1\n"}, tags=("v0.1.0",))
    evidence = collect_evidence(str(root), "path", settings)
    assert evidence.failures == ()
    assert evidence.value("vcs_present") is True


def test_pid_target_is_scored_with_pocme(settings, seed):
    seed_datacite_record(seed)
    rubric = builtin_rubric("pocme")
    answers = ManualAnswers.model_validate(
        {
            "answers": {
                "degree_of_openness": {"level": 4, "justification": "CC BY 4.0, no login"},
                "level_of_curation": {"level": 2, "justification": "checked by the data centre"},
            }
        }
    )
    assessment = assess_target(
        TargetSpec(locator=DOI, kind="pid"), rubric, settings, answers=answers, external_score=72
    )
    levels = {r.attribute_id: r.achieved_level for r in assessment.ratings}
    assert levels == {
        "published_with_identifier": 4,
        "repository_indexed": 3,
        "access_information": 4,
        "degree_of_openness": 4,
        "primary_data_formats": 3,
        "level_of_curation": 2,
        "formal_metadata": 4,
        "content_metadata": 1,
        "external_fair_score": 3,
    }
    assert assessment.target.kind == "data"
    assert assessment.score("publishing").score == Fraction(11, 3)
    assert assessment.evidence.facts["external_fair_score"].provenance.source == "external_score"


def test_external_score_option_overrides_answers(settings, seed):
    seed_datacite_record(seed)
    answers = ManualAnswers.model_validate({"external_score": 10})
    rubric = builtin_rubric("pocme")
    assessment = assess_target(TargetSpec(locator=DOI, kind="pid"), rubric, settings, answers=answers, external_score=90)
    assert assessment.rating("external_fair_score").achieved_level == 4
    assert assess_target(TargetSpec(locator=DOI, kind="pid"), rubric, settings, answers=answers).rating(
        "external_fair_score"
    ).achieved_level == 0


def test_external_score_range_is_checked(settings):
    with pytest.raises(InputError, match="outside 0..100"):
        assess_target(TargetSpec(locator=DOI, kind="pid"), builtin_rubric("pocme"), settings, external_score=101)


def test_weighted_overall_needs_dimension_weights(golden_repo, settings, seeded_golden):
    with pytest.raises(InputError, match="dimension weights"):
        _assess_golden(golden_repo, settings, mode=OverallMode.WEIGHTED)


@pytest.mark.parametrize(
    ("locator", "kind"),
    [("10.5281/zenodo.1234", "pid"), ("hdl:20.500.1/x", "pid"), ("https://github.com/a/b", "url")],
)
def test_infer_target_kind(locator, kind):
    assert infer_target_kind(locator) == kind


def test_infer_existing_path(tmp_path):
    assert infer_target_kind(str(tmp_path)) == "path"


def test_infer_rejects_garbage():
    with pytest.raises(InputError, match="neither an existing path"):
        infer_target_kind("no such thing")


def test_unreadable_path_is_a_collector_error(tmp_path, settings):
    with pytest.raises(CollectorError):
        collect_evidence(str(tmp_path / "missing"), "path", settings)


def test_clone_refused_offline(offline_settings):
    with pytest.raises(NetworkUnavailable, match="offline"):
        with clone_remote_repository("https://github.com/a/b", offline_settings):
            pass


def test_failed_clone_becomes_a_failure_entry(settings, monkeypatch, seed):
    def fake_run(args, **kwargs):
        return subprocess.CompletedProcess(args, 128, "", "fatal: repository not found")

    monkeypatch.setattr(subprocess, "run", fake_run)
    seed("https://www.re3data.org/api/beta/repositories?query=github.com", "<list></list>", accept="application/xml")
    evidence = collect_evidence("https://github.com/a/b", "url", settings)
    assert evidence.failures[0].collector == "repository"
    assert "repository not found" in evidence.failures[0].reason
    assert evidence.value("listed_in_meta_repository") is False


def test_clone_scans_the_checkout(settings, monkeypatch, seed):
    def fake_run(args, **kwargs):
        destination = args[-1]
        (Path(destination) / "README.md").write_text("# cloned\n", encoding="utf-8")
        return subprocess.CompletedProcess(args, 0, "", "")

    monkeypatch.setattr(subprocess, "run", fake_run)
    seed("https://www.re3data.org/api/beta/repositories?query=github.com", "<list></list>", accept="application/xml")
    evidence = collect_evidence("https://github.com/a/b", "url", settings)
    assert evidence.value("readme_present") is True
    assert evidence.failures == ()


def test_missing_git_is_a_collector_error(settings, monkeypatch):
    def fake_run(args, **kwargs):
        raise FileNotFoundError("git")

    monkeypatch.setattr(subprocess, "run", fake_run)
    with pytest.raises(CollectorError, match="git executable"):
        with clone_remote_repository("https://github.com/a/b", settings):
            pass
