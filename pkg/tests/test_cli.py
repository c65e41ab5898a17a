"""Tests for the command-line front end."""

from __future__ import annotations

import json

import pytest
from typer.testing import CliRunner

from qind import __version__, cli
from qind.cli import _report_stem, app
from qind.errors import CollectorError
from qind.pipeline import TargetSpec
from qind.rubric import builtin_rubric, serialize_rubric

from helpers import FIXTURES, REGISTRY_SEARCH_GITHUB, XML
from remote_fixtures import DATACITE_ACCEPT, DATACITE_URL, DOI, HANDLE_API, seed_datacite_record

STAMP = "2024-05-01T12:00:00+00:00"


@pytest.fixture
def runner(monkeypatch):
    monkeypatch.setenv("QIND_CACHE_TTL", "0")
    monkeypatch.setenv("QIND_RATE_LIMIT", "0")
    return CliRunner()


@pytest.fixture
def cache(settings):
    return str(settings.cache_dir)


def _assess(runner, *args):
    return runner.invoke(app, ["assess", "--timestamp", STAMP, *args])


def test_version(runner):
    result = runner.invoke(app, ["version"])
    assert result.exit_code == 0
    assert result.output.strip() == f"qind {__version__}"


def test_assess_golden_writes_reports(runner, golden_repo, cache, seeded_golden, tmp_path):
    out = tmp_path / "out"
    result = _assess(
        runner,
        "--repo", str(golden_repo),
        "--answers", str(FIXTURES / "golden-answers.json"),
        "--cache-dir", cache,
        "--label", "golden-tool",
        "--json", str(out / "report.json"),
        "--markdown", str(out / "report.md"),
        "--svg", str(out / "radar.svg"),
    )  # fmt: skip
    assert result.exit_code == 0, result.output
    document = json.loads((out / "report.json").read_text(encoding="utf-8"))
    assert document["summary"]["passes_all_minimums"] is True
    assert document["assessment"]["target"]["timestamp"] == "2024-05-01T12:00:00Z"
    assert (out / "report.md").read_text(encoding="utf-8").startswith("# Quality assessment: golden-tool")
    assert 'id="series-0"' in (out / "radar.svg").read_text(encoding="utf-8")


def test_assess_prints_json_without_outputs(runner, golden_repo, cache, seeded_golden):
    result = _assess(runner, "--repo", str(golden_repo), "--cache-dir", cache)
    assert result.exit_code == 0, result.output
    assert '"schema_version": "1.0"' in result.output


def test_assess_below_minimum_exits_one(runner, golden_repo, cache, seeded_golden, tmp_path):
    weights = tmp_path / "weights.json"
    weights.write_text(json.dumps({"dimension_minimums": {"interoperable": 3}}), encoding="utf-8")
    result = _assess(runner, "--repo", str(golden_repo), "--cache-dir", cache, "--weights", str(weights))
    assert result.exit_code == 1


def test_assess_collector_failure_exits_three(runner, golden_repo, cache, seed):
    seed(REGISTRY_SEARCH_GITHUB, "gone", status=410, accept=XML)
    result = _assess(runner, "--repo", str(golden_repo), "--cache-dir", cache, "--json", str(golden_repo / "r.json"))
    assert result.exit_code == 3
    document = json.loads((golden_repo / "r.json").read_text(encoding="utf-8"))
    assert document["assessment"]["evidence"]["failures"][0]["collector"] == "registry"


def test_offline_failures_do_not_change_the_exit_code(runner, golden_repo, cache):
    result = _assess(runner, "--repo", str(golden_repo), "--cache-dir", cache, "--offline")
    assert result.exit_code == 0


def test_assess_pid_defaults_to_pocme(runner, cache, seed, tmp_path):
    seed_datacite_record(seed)
    report = tmp_path / "pid.json"
    result = _assess(runner, "--pid", DOI, "--cache-dir", cache, "--external-score", "72", "--json", str(report))
    assert result.exit_code == 0, result.output
    document = json.loads(report.read_text(encoding="utf-8"))
    assert document["rubric"]["id"] == "pocme"
    assert document["summary"]["ratings"]["external_fair_score"]["level"] == 3


@pytest.mark.parametrize(
    "args",
    [
        [],
        ["--repo", ".", "--pid", DOI],
        ["--target", "no such thing"],
        ["--pid", DOI, "--external-score", "120"],
        ["--pid", DOI, "--rubric", "nope"],
        ["--pid", DOI, "--timestamp", "yesterday"],
    ],
)
def test_assess_input_errors_exit_two(runner, cache, args):
    result = _assess(runner, "--cache-dir", cache, "--offline", *args)
    assert result.exit_code == 2


def test_answers_with_unknown_attribute(runner, golden_repo, cache, tmp_path):
    answers = tmp_path / "answers.json"
    answers.write_text(json.dumps({"answers": {"telepathy": {"level": 1, "justification": "x"}}}), encoding="utf-8")
    result = _assess(runner, "--repo", str(golden_repo), "--cache-dir", cache, "--offline", "--answers", str(answers))
    assert result.exit_code == 2
    assert "telepathy" in result.output


def test_rubric_show_pocme(runner):
    result = runner.invoke(app, ["rubric", "show", "pocme"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert sum(line.startswith("## ") for line in lines) == 5
    assert sum(line.startswith("### ") for line in lines) == 9
    assert "### Level of Curation [level_of_curation, weight 1]" in lines


def test_rubric_show_fairst(runner):
    result = runner.invoke(app, ["rubric", "show", "fairst"])
    assert result.exit_code == 0
    assert "(5) Optimized" in result.output


def test_rubric_show_unknown(runner):
    assert runner.invoke(app, ["rubric", "show", "nope"]).exit_code == 2


def test_rubric_validate_builtin(runner):
    result = runner.invoke(app, ["rubric", "validate", "fairst"])
    assert result.exit_code == 0
    assert "0 error(s)" in result.output


def test_rubric_validate_broken_file(runner, tmp_path):
    document = json.loads(serialize_rubric(builtin_rubric("pocme")))
    document["dimensions"][0]["attributes"][0]["levels"].pop()
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(document), encoding="utf-8")
    result = runner.invoke(app, ["rubric", "validate", str(path)])
    assert result.exit_code == 1
    assert "error:" in result.output


def test_batch_writes_reports_and_summary(runner, golden_repo, cache, seeded_golden, tmp_path):
    manifest = tmp_path / "targets.json"
    manifest.write_text(
        json.dumps(
            [
                {"locator": golden_repo.name, "label": "Golden Tool", "answers": "answers.json"},
                {"locator": str(golden_repo), "kind": "path"},
            ]
        ),
        encoding="utf-8",
    )
    (tmp_path / "answers.json").write_text(
        (FIXTURES / "golden-answers.json").read_text(encoding="utf-8"), encoding="utf-8"
    )
    out = tmp_path / "batch"
    result = runner.invoke(app, ["batch", str(manifest), "--out-dir", str(out), "--cache-dir", cache, "--timestamp", STAMP])
    assert result.exit_code == 0, result.output
    assert (out / "001-golden-tool.json").exists()
    assert len(list(out.glob("002-*.json"))) == 1
    summary = json.loads((out / "summary.json").read_text(encoding="utf-8"))
    assert (summary["passing"], summary["total"]) == (2, 2)
    assert "2 of 2 targets" in (out / "summary.md").read_text(encoding="utf-8")


def test_batch_empty_manifest(runner, cache, tmp_path):
    manifest = tmp_path / "targets.json"
    manifest.write_text("[]", encoding="utf-8")
    out = tmp_path / "batch"
    result = runner.invoke(app, ["batch", str(manifest), "--out-dir", str(out), "--cache-dir", cache])
    assert result.exit_code == 0
    summary = json.loads((out / "summary.json").read_text(encoding="utf-8"))
    assert (summary["passing"], summary["total"]) == (0, 0)


def test_batch_refuses_mixed_rubrics(runner, golden_repo, cache, tmp_path):
    manifest = tmp_path / "targets.json"
    manifest.write_text(json.dumps([{"locator": str(golden_repo)}, {"locator": DOI}]), encoding="utf-8")
    result = runner.invoke(app, ["batch", str(manifest), "--out-dir", str(tmp_path / "b"), "--cache-dir", cache])
    assert result.exit_code == 2


def test_batch_bad_manifest(runner, cache, tmp_path):
    manifest = tmp_path / "targets.json"
    manifest.write_text('[{"where": "x"}]', encoding="utf-8")
    result = runner.invoke(app, ["batch", str(manifest), "--cache-dir", cache])
    assert result.exit_code == 2


def test_render_from_saved_reports(runner, golden_repo, cache, seeded_golden, tmp_path):
    report = tmp_path / "report.json"
    assert _assess(runner, "--repo", str(golden_repo), "--cache-dir", cache, "--json", str(report)).exit_code == 0
    svg = tmp_path / "again.svg"
    result = runner.invoke(app, ["render", str(report), str(report), "--out", str(svg)])
    assert result.exit_code == 0, result.output
    text = svg.read_text(encoding="utf-8")
    assert 'id="series-1"' in text
    assert 'id="minimum-overlay"' in text


def test_render_rejects_a_non_report(runner, tmp_path):
    path = tmp_path / "x.json"
    path.write_text("{}", encoding="utf-8")
    assert runner.invoke(app, ["render", str(path)]).exit_code == 2


def test_batch_counts_targets_that_could_not_be_assessed(runner, golden_repo, cache, seeded_golden, tmp_path):
    (tmp_path / "bad-answers.json").write_text(
        json.dumps({"answers": {"no_such_attribute": {"level": 1, "justification": "x"}}}), encoding="utf-8"
    )
    manifest = tmp_path / "targets.json"
    manifest.write_text(
        json.dumps(
            [
                {"locator": str(golden_repo)},
                {"locator": str(golden_repo), "label": "broken", "answers": "bad-answers.json"},
            ]
        ),
        encoding="utf-8",
    )
    out = tmp_path / "batch"
    result = runner.invoke(app, ["batch", str(manifest), "--out-dir", str(out), "--cache-dir", cache])
    assert result.exit_code == 2
    summary = json.loads((out / "summary.json").read_text(encoding="utf-8"))
    assert (summary["passing"], summary["total"]) == (1, 2)
    assert summary["errored"][0]["label"] == "broken"
    assert "no_such_attribute" in summary["errored"][0]["reason"]
    assert "## Not assessed" in (out / "summary.md").read_text(encoding="utf-8")
    assert [p.name for p in sorted(out.glob("0*.json"))] == ["001-golden-tool.json"]


def test_batch_collector_errors_exit_three(runner, cache, tmp_path, monkeypatch):
    def broken(*args, **kwargs):
        raise CollectorError("disk on fire")

    monkeypatch.setattr(cli, "assess_target", broken)
    manifest = tmp_path / "targets.json"
    manifest.write_text(json.dumps([{"locator": str(tmp_path)}]), encoding="utf-8")
    result = runner.invoke(app, ["batch", str(manifest), "--out-dir", str(tmp_path / "b"), "--cache-dir", cache])
    assert result.exit_code == 3
    summary = json.loads((tmp_path / "b" / "summary.json").read_text(encoding="utf-8"))
    assert (summary["passing"], summary["total"]) == (0, 1)


@pytest.mark.parametrize(
    ("entry", "stem"),
    [
        ({"locator": "/srv/checkouts/golden-tool", "kind": "path"}, "golden-tool"),
        ({"locator": "https://github.com/example-org/Golden_Tool.git", "kind": "url"}, "golden-tool"),
        ({"locator": DOI, "kind": "pid"}, "10-5281-zenodo-1234"),
        ({"locator": "/srv/x", "kind": "path", "label": "My Tool v2"}, "my-tool-v2"),
    ],
)
def test_report_names_identify_the_target(entry, stem):
    assert _report_stem(TargetSpec(**entry)) == stem


def test_unreadable_remote_answers_exit_three(runner, cache, seed, tmp_path):
    seed(HANDLE_API, "<html>maintenance</html>")
    seed(DATACITE_URL, "<html>maintenance</html>", accept=DATACITE_ACCEPT)
    report = tmp_path / "pid.json"
    result = _assess(runner, "--pid", DOI, "--cache-dir", cache, "--json", str(report))
    assert result.exit_code == 3
    failures = json.loads(report.read_text(encoding="utf-8"))["assessment"]["evidence"]["failures"]
    assert [f["collector"] for f in failures] == ["pid", "pid"]
