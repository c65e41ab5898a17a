"""
Command-line front end.

Exit codes:
    0  success (assess: every dimension meets its minimum)
    1  assess: a dimension is below its minimum; rubric validate: error findings
    2  input error (rubric, answers, weights, manifest, locator)
    3  collector or network failure in online mode (artifacts are still written)

batch exits 2 when a target could not be assessed because of its input, 3 when
any other target error occurred; the summary is written either way.
"""

from __future__ import annotations

import json
import logging
import re
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from pathlib import Path
from urllib.parse import urlparse
from typing import Optional

import typer
from pydantic import TypeAdapter, ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from qind import TOOL_NAME, __version__
from qind.collectors.answers import ManualAnswers, load_answers
from qind.collectors.checks import CHECKS, known_check_ids
from qind.config import Settings, parse_timestamp
from qind.errors import CollectorError, InputError, NetworkUnavailable, QindError
from qind.files import write_text_atomic
from qind.pipeline import TargetSpec, assess_target, infer_target_kind
from qind.report.batch import ErroredTarget, batch_summary, render_batch_summary
from qind.report.documents import emit_report, format_score, parse_report
from qind.report.radar import RadarConfig, render_radar
from qind.rubric.builtin import BUILTIN_RUBRIC_IDS, builtin_rubric
from qind.rubric.loader import describe_validation_error, parse_rubric, resolve_rubric
from qind.rubric.model import Rubric
from qind.rubric.validation import validate_rubric
from qind.scoring.model import Assessment, OverallMode
from qind.scoring.weights import WeightScheme, load_weights

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_BELOW_MINIMUM = 1
EXIT_INPUT = 2
EXIT_COLLECTOR = 3

app = typer.Typer(help="Quality indicator for research data and software publications.", no_args_is_help=True)
rubric_app = typer.Typer(help="Show or validate rubrics.", no_args_is_help=True)
app.add_typer(rubric_app, name="rubric")

console = Console(stderr=True)


class LocatorKind(str, Enum):
    path = "path"
    url = "url"
    pid = "pid"


def setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(message)s",
        handlers=[RichHandler(console=console, show_path=False)],
        force=True,
    )


def _fail(code: int, message: str) -> typer.Exit:
    console.print(f"[red]error:[/red] {message}", highlight=False)
    return typer.Exit(code=code)


def _settings(offline: bool, cache_dir: Optional[Path], timestamp: Optional[str]) -> Settings:
    settings = Settings.from_env()
    update: dict[str, object] = {}
    if offline:
        update["offline"] = True
    if cache_dir is not None:
        update["cache_dir"] = cache_dir
    if timestamp:
        try:
            update["timestamp"] = parse_timestamp(timestamp)
        except ValueError as exc:
            raise InputError(f"--timestamp: {exc}") from exc
    return settings.model_copy(update=update)


def _read(path: Path, what: str) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {what} {path}: {exc}") from exc


def _weights(path: Optional[Path], rubric: Rubric) -> WeightScheme:
    return load_weights(_read(path, "weights file"), rubric) if path else WeightScheme.for_rubric(rubric)


def _answers(path: Optional[Path]) -> Optional[ManualAnswers]:
    return load_answers(_read(path, "answers file")) if path else None


def _default_rubric(kind: str) -> str:
    return "pocme" if kind == "pid" else "fairst"


def _print_scores(assessment: Assessment, rubric: Rubric) -> None:
    table = Table(title=f"{assessment.target.display_name} ({rubric.reference})")
    table.add_column("Dimension")
    table.add_column("Score", justify="right")
    table.add_column("Minimum", justify="right")
    table.add_column("")
    for score in assessment.dimension_scores:
        table.add_row(
            rubric.dimension(score.dimension_id).title,
            format_score(score.score),
            format_score(score.minimum),
            "[green]✓[/green]" if score.meets_minimum else "[red]✗[/red]",
        )
    console.print(table)


def _has_failures(assessment: Assessment) -> bool:
    return bool(assessment.evidence and assessment.evidence.failures)


@app.callback()
def main(verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging.")) -> None:
    setup_logging(verbose)


@app.command()
def version() -> None:
    """Print the tool version."""
    typer.echo(f"{TOOL_NAME} {__version__}")


@app.command()
def assess(
    target: Optional[str] = typer.Option(None, "--target", "-t", help="Path, repository URL or PID."),
    kind: Optional[LocatorKind] = typer.Option(None, "--kind", help="Override target kind inference."),
    repo: Optional[str] = typer.Option(None, "--repo", help="Local repository path (same as --kind path)."),
    url: Optional[str] = typer.Option(None, "--url", help="Remote repository URL (same as --kind url)."),
    pid: Optional[str] = typer.Option(None, "--pid", help="DOI or handle (same as --kind pid)."),
    rubric_ref: Optional[str] = typer.Option(
        None, "--rubric", "-r", help="Built-in rubric id (pocme, fairst) or rubric file; pocme for PIDs, else fairst."
    ),
    answers_path: Optional[Path] = typer.Option(None, "--answers", help="Manual answers JSON."),
    weights_path: Optional[Path] = typer.Option(None, "--weights", help="Weights and minimums JSON."),
    json_out: Optional[Path] = typer.Option(None, "--json", help="Write the JSON report here."),
    markdown_out: Optional[Path] = typer.Option(None, "--markdown", help="Write the Markdown report here."),
    svg_out: Optional[Path] = typer.Option(None, "--svg", help="Write the radar SVG here."),
    offline: bool = typer.Option(False, "--offline", help="Serve remote data from the cache only."),
    cache_dir: Optional[Path] = typer.Option(None, "--cache-dir", help="HTTP cache directory."),
    overall: OverallMode = typer.Option(OverallMode.NONE, "--overall", help="Overall indicator mode."),
    strict: bool = typer.Option(False, "--strict", help="Require scores strictly above the minimums."),
    label: Optional[str] = typer.Option(None, "--label", help="Display name in reports and plots."),
    external_score: Optional[float] = typer.Option(
        None, "--external-score", help="Percentage from an external FAIR assessment (0-100)."
    ),
    timestamp: Optional[str] = typer.Option(None, "--timestamp", help="Fixed ISO-8601 assessment time."),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging."),
) -> None:
    """Assess one target and write the requested reports."""
    if verbose:
        setup_logging(True)
    given = [(value, k) for value, k in ((target, None), (repo, "path"), (url, "url"), (pid, "pid")) if value]
    if len(given) != 1:
        raise _fail(EXIT_INPUT, "give exactly one of --target, --repo, --url or --pid")
    locator, shortcut = given[0]

    try:
        settings = _settings(offline, cache_dir, timestamp)
        locator_kind = shortcut or (kind.value if kind else infer_target_kind(locator))
        rubric = resolve_rubric(rubric_ref or _default_rubric(locator_kind))
        weights = _weights(weights_path, rubric)
        assessment = assess_target(
            TargetSpec(locator=locator, kind=locator_kind, label=label),
            rubric,
            settings,
            answers=_answers(answers_path),
            weights=weights,
            mode=overall,
            strict=strict,
            external_score=external_score,
        )
    except InputError as exc:
        raise _fail(EXIT_INPUT, str(exc)) from exc
    except (CollectorError, NetworkUnavailable) as exc:
        raise _fail(EXIT_COLLECTOR, str(exc)) from exc

    if json_out:
        write_text_atomic(json_out, emit_report(assessment, rubric, "json"))
    if markdown_out:
        write_text_atomic(markdown_out, emit_report(assessment, rubric, "markdown"))
    if svg_out:
        write_text_atomic(svg_out, render_radar([assessment], RadarConfig.for_rubric(rubric, weights)))
    if not (json_out or markdown_out or svg_out):
        typer.echo(emit_report(assessment, rubric, "json"), nl=False)
    _print_scores(assessment, rubric)

    if _has_failures(assessment) and not settings.offline:
        for failure in assessment.evidence.failures:
            console.print(f"[yellow]collector {failure.collector} failed:[/yellow] {failure.reason}", highlight=False)
        raise typer.Exit(code=EXIT_COLLECTOR)
    raise typer.Exit(code=EXIT_OK if assessment.passes_all_minimums else EXIT_BELOW_MINIMUM)


def _slug(text: str) -> str:
    return re.sub(r"[^A-Za-z0-9]+", "-", text).strip("-").lower()[:60].strip("-") or "target"


def _report_stem(entry: TargetSpec) -> str:
    """Label, else the last path segment of a path or URL, else the whole PID."""
    if entry.label:
        return _slug(entry.label)
    if entry.kind == "path":
        return _slug(Path(entry.locator).resolve().name or entry.locator)
    if entry.kind == "url":
        segment = urlparse(entry.locator).path.rstrip("/").rsplit("/", 1)[-1].removesuffix(".git")
        return _slug(segment or entry.locator)
    return _slug(entry.locator)


def _manifest(path: Path) -> list[TargetSpec]:
    try:
        data = json.loads(_read(path, "manifest"))
    except json.JSONDecodeError as exc:
        raise InputError(f"manifest: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    try:
        entries = TypeAdapter(list[TargetSpec]).validate_python(data)
    except ValidationError as exc:
        raise InputError(f"manifest: {describe_validation_error(exc)}") from exc

    base = path.parent
    resolved = []
    for entry in entries:
        update: dict[str, object] = {}
        local = base / entry.locator
        if entry.kind in (None, "path") and not Path(entry.locator).is_absolute() and local.exists():
            update["locator"] = str(local)
        if entry.answers and not Path(entry.answers).is_absolute():
            update["answers"] = str(base / entry.answers)
        resolved.append(entry.model_copy(update=update))
    return resolved


@app.command()
def batch(
    manifest: Path = typer.Argument(..., help="JSON list of {locator, kind?, answers?, label?, rubric?}."),
    out_dir: Path = typer.Option(Path("qind-batch"), "--out-dir", "-o", help="Directory for reports and summary."),
    jobs: int = typer.Option(4, "--jobs", "-j", min=1, help="Targets assessed concurrently."),
    rubric_ref: Optional[str] = typer.Option(None, "--rubric", "-r", help="Rubric for entries that name none."),
    weights_path: Optional[Path] = typer.Option(None, "--weights", help="Weights and minimums JSON."),
    offline: bool = typer.Option(False, "--offline", help="Serve remote data from the cache only."),
    cache_dir: Optional[Path] = typer.Option(None, "--cache-dir", help="HTTP cache directory."),
    overall: OverallMode = typer.Option(OverallMode.NONE, "--overall", help="Overall indicator mode."),
    strict: bool = typer.Option(False, "--strict", help="Require scores strictly above the minimums."),
    timestamp: Optional[str] = typer.Option(None, "--timestamp", help="Fixed ISO-8601 assessment time."),
) -> None:
    """Assess every target of a manifest and summarize the KPI count."""
    try:
        settings = _settings(offline, cache_dir, timestamp)
        entries = _manifest(manifest)
        kinds = [entry.kind or infer_target_kind(entry.locator) for entry in entries]
        refs = {entry.rubric or rubric_ref or _default_rubric(k) for entry, k in zip(entries, kinds)}
        rubrics = {ref: resolve_rubric(ref) for ref in sorted(refs)}
        ids = sorted({r.id for r in rubrics.values()})
        if len(ids) > 1:
            raise InputError(f"manifest mixes rubrics: {', '.join(ids)}")
        rubric = next(iter(rubrics.values())) if rubrics else resolve_rubric(rubric_ref or "fairst")
        weights = _weights(weights_path, rubric)
        answers = [_answers(Path(entry.answers) if entry.answers else None) for entry in entries]
        entries = [entry.model_copy(update={"kind": kind}) for entry, kind in zip(entries, kinds)]
    except InputError as exc:
        raise _fail(EXIT_INPUT, str(exc)) from exc

    def run(index: int) -> Assessment | QindError:
        entry = entries[index]
        try:
            return assess_target(
                entry, rubric, settings, answers=answers[index], weights=weights, mode=overall, strict=strict
            )
        except QindError as exc:
            logger.error("%s: %s", entry.locator, exc)
            return exc

    with ThreadPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(run, range(len(entries))))

    assessments: list[Assessment] = []
    errored: list[ErroredTarget] = []
    for index, (entry, result) in enumerate(zip(entries, results), start=1):
        if isinstance(result, QindError):
            errored.append(ErroredTarget(target=entry.locator, label=entry.label, reason=str(result)))
            continue
        assessments.append(result)
        write_text_atomic(out_dir / f"{index:03d}-{_report_stem(entry)}.json", emit_report(result, rubric, "json"))

    try:
        summary = batch_summary(assessments, weights, strict=strict, errored=errored)
    except InputError as exc:
        raise _fail(EXIT_INPUT, str(exc)) from exc
    write_text_atomic(out_dir / "summary.json", render_batch_summary(summary, "json"))
    write_text_atomic(out_dir / "summary.md", render_batch_summary(summary, "markdown"))
    console.print(f"{summary.passing} of {summary.total} targets meet every minimum", highlight=False)
    if errored:
        console.print(f"[red]{len(errored)} target(s) could not be assessed[/red]", highlight=False)
        input_only = all(isinstance(r, InputError) for r in results if isinstance(r, QindError))
        raise typer.Exit(code=EXIT_INPUT if input_only else EXIT_COLLECTOR)
    raise typer.Exit(code=EXIT_OK)


def format_rubric(rubric: Rubric) -> str:
    """Level tables of a rubric as plain text."""
    lines = [f"{rubric.title} ({rubric.reference}, {rubric.kind}), levels 0-{rubric.max_level}", ""]
    for scale in rubric.scale:
        lines.append(f"  ({scale.level}) {scale.label}: {scale.description}".rstrip(": "))
    for dimension in rubric.dimensions:
        lines += ["", f"## {dimension.title}"]
        if dimension.description:
            lines.append(dimension.description)
        for attribute in dimension.attributes:
            lines += ["", f"### {attribute.title} [{attribute.id}, weight {format_score(attribute.default_weight)}]"]
            if attribute.baseline:
                lines.append(f"  0  {attribute.baseline}")
            for statement in attribute.levels:
                check = attribute.binding(statement.level) or "-"
                description = CHECKS[check].description if check in CHECKS else ""
                suffix = f"  <{check}: {description}>" if description else f"  <{check}>"
                lines.append(f"  {statement.level}  {statement.text}{suffix}")
    return "\n".join(lines) + "\n"


@rubric_app.command("show")
def rubric_show(reference: str = typer.Argument(..., help="Built-in id or rubric file.")) -> None:
    """Print the level tables of a rubric."""
    try:
        rubric = resolve_rubric(reference)
    except InputError as exc:
        raise _fail(EXIT_INPUT, str(exc)) from exc
    typer.echo(format_rubric(rubric), nl=False)


@rubric_app.command("validate")
def rubric_validate(reference: str = typer.Argument(..., help="Built-in id or rubric file.")) -> None:
    """Check a rubric and list every finding; exit 1 on errors."""
    try:
        if reference in BUILTIN_RUBRIC_IDS:
            rubric = builtin_rubric(reference)
        elif Path(reference).is_file():
            rubric = parse_rubric(_read(Path(reference), "rubric file"))
        else:
            rubric = resolve_rubric(reference)
    except InputError as exc:
        raise _fail(EXIT_INPUT, str(exc)) from exc

    report = validate_rubric(rubric, known_checks=known_check_ids())
    for finding in report.findings:
        typer.echo(f"{finding.severity}: {finding.path}: {finding.message}")
    typer.echo(f"{rubric.reference}: {len(report.errors)} error(s), {len(report.warnings)} warning(s)")
    raise typer.Exit(code=EXIT_OK if report.ok else EXIT_BELOW_MINIMUM)


@app.command()
def render(
    reports: list[Path] = typer.Argument(..., help="One or more JSON reports of the same rubric."),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="SVG path; standard output when omitted."),
    rubric_ref: Optional[str] = typer.Option(None, "--rubric", "-r", help="Rubric file for non-built-in rubrics."),
    weights_path: Optional[Path] = typer.Option(None, "--weights", help="Minimums for the overlay."),
    no_minimums: bool = typer.Option(False, "--no-minimums", help="Leave out the minimum overlay."),
) -> None:
    """Re-render the radar SVG from saved JSON reports."""
    try:
        assessments = [parse_report(_read(path, "report")) for path in reports]
        rubric = resolve_rubric(rubric_ref or assessments[0].target.rubric_id)
        config = RadarConfig.for_rubric(rubric, _weights(weights_path, rubric), show_minimums=not no_minimums)
        svg = render_radar(assessments, config)
    except InputError as exc:
        raise _fail(EXIT_INPUT, str(exc)) from exc
    if out:
        write_text_atomic(out, svg)
    else:
        typer.echo(svg, nl=False)
