"""Tests for the built-in rubrics, the rubric file format and rubric validation."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest

from qind.collectors.checks import known_check_ids
from qind.errors import RubricNotFoundError, RubricParseError, RubricValidationError
from qind.rubric import (
    BUILTIN_RUBRIC_IDS,
    MANUAL,
    builtin_rubric,
    load_rubric,
    parse_rubric,
    resolve_rubric,
    serialize_rubric,
    validate_rubric,
)

POCME_SHAPE = {
    "publishing": ["published_with_identifier", "repository_indexed", "access_information"],
    "openness": ["degree_of_openness", "primary_data_formats"],
    "curation": ["level_of_curation"],
    "metadata": ["formal_metadata", "content_metadata"],
    "external_view": ["external_fair_score"],
}

FAIRST_SHAPE = {
    "findable": ["open_publication_repository", "versioning", "persistent_identifier", "rich_metadata"],
    "accessible": ["access_conditions", "access_options", "technical_accessibility"],
    "interoperable": ["input_output_formats", "adaptability"],
    "reusable": ["reusability_conditions"],
    "scientific_basis": ["community_standards", "team_expertise", "scientific_embedding"],
    "technical_basis": [
        "project_management",
        "repository_structure",
        "code_structure",
        "reproducibility",
        "code_change_process",
        "security",
    ],
}


def _tiny_rubric(**changes) -> dict:
    document = {
        "id": "tiny",
        "title": "Tiny",
        "max_level": 2,
        "dimensions": [
            {
                "id": "only",
                "title": "Only",
                "attributes": [
                    {
                        "id": "a",
                        "title": "A",
                        "default_weight": 1,
                        "levels": [{"level": 1, "text": "one"}, {"level": 2, "text": "two"}],
                        "checks": [{"level": 1, "check": "readme_present"}, {"level": 2, "check": "manual"}],
                    }
                ],
            }
        ],
    }
    document.update(changes)
    return document


@pytest.mark.parametrize(("rubric_id", "shape", "max_level"), [("pocme", POCME_SHAPE, 4), ("fairst", FAIRST_SHAPE, 5)])
def test_builtin_shape(rubric_id, shape, max_level):
    rubric = builtin_rubric(rubric_id)
    assert rubric.max_level == max_level
    assert {d.id: [a.id for a in d.attributes] for d in rubric.dimensions} == shape
    assert [s.level for s in rubric.scale] == list(range(max_level + 1))
    for attribute in rubric.attributes():
        assert [s.level for s in attribute.levels] == list(range(1, max_level + 1))
        assert all(s.text.strip() for s in attribute.levels)


@pytest.mark.parametrize("rubric_id", BUILTIN_RUBRIC_IDS)
def test_builtin_rubrics_validate_cleanly_against_the_check_catalogue(rubric_id):
    report = validate_rubric(builtin_rubric(rubric_id), known_checks=known_check_ids())
    assert report.findings == ()


def test_fairst_scale_names():
    labels = [s.label for s in builtin_rubric("fairst").scale]
    assert labels == ["Non-existent", "Initial", "Repeatable", "Defined", "Managed", "Optimized"]


def test_external_score_attribute_has_half_weight():
    attribute = builtin_rubric("pocme").attribute("external_fair_score")
    assert attribute.default_weight == Fraction(1, 2)
    assert {b.check for b in attribute.checks} == {"external_score"}


def test_curation_is_judged_manually():
    curation = builtin_rubric("pocme").attribute("level_of_curation")
    assert all(b.check == MANUAL for b in curation.checks)


@pytest.mark.parametrize(
    ("rubric_id", "attribute_id", "level", "text"),
    [
        ("pocme", "primary_data_formats", 3, "Primary data stored in open formats"),
        ("pocme", "primary_data_formats", 2, "Primary data stored in common proprietary data formats"),
        ("pocme", "external_fair_score", 4, "81-100% Score reached"),
        ("pocme", "external_fair_score", 1, "21-40% Score reached"),
        (
            "pocme",
            "content_metadata",
            1,
            "Some content related metadata available, following a (generic) scheme (e.g. DataCite)",
        ),
        (
            "pocme",
            "access_information",
            2,
            "Metadata available, data access-information available only in human-readable form",
        ),
        ("pocme", "degree_of_openness", 3, "Like (2) + with justification AND/OR date of moratorium"),
        ("fairst", "versioning", 2, "The software uses structured (e.g. semantic) versioning."),
        ("fairst", "versioning", 5, "The versioning scheme allows for automatic tagging by CI/CD processes."),
        ("fairst", "persistent_identifier", 3, "A persistent identifier is provided."),
        ("fairst", "persistent_identifier", 5, "The PID is part of an established community standard."),
        ("fairst", "rich_metadata", 5, "An external quality assessment of the metadata exists."),
        ("fairst", "access_conditions", 3, "The license allows for open use of the software (e.g. OSI licenses)."),
        ("fairst", "open_publication_repository", 1, "The software is contained in an online repository."),
        ("fairst", "technical_accessibility", 2, "Installation scripts are provided."),
    ],
)
def test_statement_wording_is_kept_verbatim(rubric_id, attribute_id, level, text):
    statement = builtin_rubric(rubric_id).attribute(attribute_id).statement(level)
    assert statement is not None
    assert statement.text == text


@pytest.mark.parametrize(
    ("rubric_id", "attribute_id", "baseline"),
    [
        ("pocme", "formal_metadata", "No metadata available"),
        ("pocme", "external_fair_score", "0-20% Score reached"),
        ("fairst", "versioning", "No software versioning applied."),
        ("fairst", "access_conditions", "Not specified."),
    ],
)
def test_baseline_wording_is_kept_verbatim(rubric_id, attribute_id, baseline):
    assert builtin_rubric(rubric_id).attribute(attribute_id).baseline == baseline


@pytest.mark.parametrize("rubric_id", BUILTIN_RUBRIC_IDS)
def test_serialize_then_load_gives_the_same_rubric(rubric_id):
    rubric = builtin_rubric(rubric_id)
    assert load_rubric(serialize_rubric(rubric)) == rubric


def test_load_rejects_malformed_json():
    with pytest.raises(RubricParseError, match="line 1"):
        load_rubric("{not json")


def test_load_rejects_unknown_keys():
    with pytest.raises(RubricParseError, match="colour"):
        load_rubric(json.dumps(_tiny_rubric(colour="blue")))


def test_load_reports_invariant_violations():
    document = _tiny_rubric()
    document["dimensions"][0]["attributes"][0]["levels"].pop()
    with pytest.raises(RubricValidationError) as info:
        load_rubric(json.dumps(document))
    assert any("missing levels 2" in f.message for f in info.value.report.errors)


def test_parse_skips_invariant_checks():
    document = _tiny_rubric()
    document["dimensions"][0]["attributes"][0]["default_weight"] = 0
    rubric = parse_rubric(json.dumps(document))
    report = validate_rubric(rubric)
    assert not report.ok
    assert report.errors[0].path == "dimensions[0].attributes[0].default_weight"


@pytest.mark.parametrize(
    ("mutate", "message"),
    [
        (lambda d: d["dimensions"].append(dict(d["dimensions"][0])), "duplicate dimension id"),
        (lambda d: d["dimensions"][0]["attributes"][0]["levels"].append({"level": 2, "text": "again"}), "duplicate levels 2"),
        (lambda d: d["dimensions"][0]["attributes"][0]["levels"].append({"level": 3, "text": "extra"}), "outside 1..2"),
        (lambda d: d["dimensions"][0]["attributes"][0]["levels"].reverse(), "ascending"),
        (lambda d: d["dimensions"][0]["attributes"][0]["checks"].pop(), "missing check bindings"),
        (lambda d: d["dimensions"][0].update(attributes=[]), "has no attributes"),
        (lambda d: d.update(max_level=0), "at least 1"),
        (lambda d: d["dimensions"][0]["attributes"][0]["levels"][0].update(text=" "), "empty text"),
    ],
)
def test_validation_findings(mutate, message):
    document = _tiny_rubric()
    mutate(document)
    report = validate_rubric(parse_rubric(json.dumps(document)))
    assert not report.ok
    assert any(message in f.message for f in report.errors), report.errors


def test_unknown_check_is_a_warning_only():
    document = _tiny_rubric()
    document["dimensions"][0]["attributes"][0]["checks"][0]["check"] = "no_such_check"
    report = validate_rubric(parse_rubric(json.dumps(document)), known_checks=known_check_ids())
    assert report.ok
    assert [f.message for f in report.warnings] == ["unknown check 'no_such_check'"]


def test_resolve_builtin_and_file(tmp_path):
    assert resolve_rubric("fairst").id == "fairst"
    path = tmp_path / "tiny.json"
    path.write_text(json.dumps(_tiny_rubric()), encoding="utf-8")
    assert resolve_rubric(str(path)).reference == "tiny@1.0"


def test_resolve_unknown_reference():
    with pytest.raises(RubricNotFoundError, match="pocme, fairst"):
        resolve_rubric("nope")
