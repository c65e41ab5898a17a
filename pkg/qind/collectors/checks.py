"""
Automated checks bound to rubric levels.

Each check is a positive predicate over evidence facts, registered with the
``@check`` decorator under the id the rubric bindings use. A check lists the
facts it needs: if a required fact is absent (or none of its alternative facts
is present) the outcome is UNKNOWN without calling the predicate. Predicates
only ever combine facts with ``and``/``or`` over "present and true" tests, so
adding facts can never turn a satisfied check into an unsatisfied one.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Mapping
from dataclasses import dataclass

from qind.base import FrozenModel
from qind.collectors.formats import classify_format
from qind.collectors.licenses import any_osi_approved
from qind.collectors.pid import OPTIONAL_PROPERTIES
from qind.collectors.registry import QUALITY_CHECKED_REGISTRIES
from qind.config import Settings
from qind.errors import InputError
from qind.evidence import EvidenceSet, FactValue
from qind.scoring.model import Status
from qind.scoring.rating import map_external_score

logger = logging.getLogger(__name__)

_STRUCTURED_CITATION = {"citation-file", "codemeta"}
_PERSISTENT_KINDS = {"doi", "handle"}


@dataclass(frozen=True)
class CheckContext:
    """What a predicate sees: the facts, the settings and the level being judged."""

    facts: Mapping[str, FactValue]
    settings: Settings
    level: int

    def __getitem__(self, fact_id: str) -> FactValue:
        return self.facts[fact_id]

    def get(self, fact_id: str, default: FactValue = None) -> FactValue:
        return self.facts.get(fact_id, default)


Predicate = Callable[[CheckContext], "bool | None"]


@dataclass(frozen=True)
class Check:
    id: str
    description: str
    requires: tuple[str, ...]
    any_of: tuple[str, ...]
    predicate: Predicate


class CheckOutcome(FrozenModel):
    check_id: str
    status: Status
    evidence_refs: tuple[str, ...] = ()


CHECKS: dict[str, Check] = {}


def check(check_id: str, *requires: str, any_of: tuple[str, ...] = (), description: str = "") -> Callable[[Predicate], Predicate]:
    """Register a predicate as the automated check ``check_id``.

    Args:
        check_id: Id used in rubric check bindings.
        *requires: Facts that must all be present.
        any_of: Alternative facts of which at least one must be present.
        description: One line shown by ``rubric show``.
    """

    def register(predicate: Predicate) -> Predicate:
        if check_id in CHECKS:
            raise ValueError(f"check {check_id!r} registered twice")
        CHECKS[check_id] = Check(check_id, description, tuple(requires), tuple(any_of), predicate)
        return predicate

    return register


def known_check_ids() -> frozenset[str]:
    return frozenset(CHECKS)


def evaluate_check(check_id: str, evidence: EvidenceSet, settings: Settings, level: int = 1) -> CheckOutcome:
    """Run one check against the evidence.

    Unknown check ids (possible with custom rubric files) evaluate to UNKNOWN.
    """
    registered = CHECKS.get(check_id)
    if registered is None:
        logger.warning("No automated check named %r; level stays unknown", check_id)
        return CheckOutcome(check_id=check_id, status=Status.UNKNOWN)

    refs = tuple(f for f in registered.requires + registered.any_of if evidence.has(f))
    if any(not evidence.has(f) for f in registered.requires) or (
        registered.any_of and not any(evidence.has(f) for f in registered.any_of)
    ):
        return CheckOutcome(check_id=check_id, status=Status.UNKNOWN, evidence_refs=refs)

    facts = {fact_id: fact.value for fact_id, fact in evidence.facts.items()}
    result = registered.predicate(CheckContext(facts, settings, level))
    if result is None:
        status = Status.UNKNOWN
    else:
        status = Status.SATISFIED if result else Status.UNSATISFIED
    return CheckOutcome(check_id=check_id, status=status, evidence_refs=refs)


def _formats(ctx: CheckContext) -> list[str]:
    return [str(f) for f in ctx.get("data_formats") or ()]


def _declared(ctx: CheckContext) -> bool:
    return bool(ctx.get("identifier_kind") or ctx.get("declared_pid") or ctx.get("vcs_remote_url"))


def _persistent(ctx: CheckContext) -> bool:
    return ctx.get("identifier_kind") in _PERSISTENT_KINDS or bool(ctx.get("declared_pid"))


def _icons(ctx: CheckContext, tier: int) -> bool:
    count = ctx["quality_icon_count"]
    return ctx["listed_in_meta_repository"] is True and isinstance(count, int) and count >= ctx.settings.icon_cutoffs[tier]


# --- identifiers -------------------------------------------------------------


@check("identifier_declared", any_of=("identifier_kind", "declared_pid", "vcs_remote_url"),
       description="An identifier (URL or PID) is declared for the publication")  # fmt: skip
def _identifier_declared(ctx: CheckContext) -> bool:
    return _declared(ctx)


@check("handle_or_doi", "identifier_kind", description="The identifier is a handle or a DOI")
def _handle_or_doi(ctx: CheckContext) -> bool:
    return ctx["identifier_kind"] in _PERSISTENT_KINDS


@check("persistent_identifier_with_metadata", "identifier_kind", "resolves_globally", "metadata_record_present",
       description="Handle or DOI resolving globally with a metadata record")  # fmt: skip
def _pid_with_metadata(ctx: CheckContext) -> bool:
    return (
        ctx["identifier_kind"] in _PERSISTENT_KINDS
        and ctx["resolves_globally"] is True
        and ctx["metadata_record_present"] is True
    )


@check("doi_with_metadata", "identifier_kind", "resolves_globally", "metadata_record_present",
       description="DOI resolving globally with a DataCite record")  # fmt: skip
def _doi_with_metadata(ctx: CheckContext) -> bool:
    return ctx["identifier_kind"] == "doi" and ctx["resolves_globally"] is True and ctx["metadata_record_present"] is True


@check("identifier_with_metadata",
       any_of=("identifier_kind", "declared_pid", "vcs_remote_url", "citation_metadata_kind", "metadata_record_present"),
       description="A declared identifier accompanied by structured metadata")  # fmt: skip
def _identifier_with_metadata(ctx: CheckContext) -> bool:
    return _declared(ctx) and (
        ctx.get("citation_metadata_kind") in _STRUCTURED_CITATION or ctx.get("metadata_record_present") is True
    )


@check("persistent_identifier", any_of=("identifier_kind", "declared_pid"),
       description="A DOI or handle is declared")  # fmt: skip
def _persistent_identifier(ctx: CheckContext) -> bool:
    return _persistent(ctx)


@check("harvestable_pid", "metadata_record_present", any_of=("identifier_kind", "declared_pid"),
       description="The PID carries a harvestable metadata record")  # fmt: skip
def _harvestable_pid(ctx: CheckContext) -> bool:
    return _persistent(ctx) and ctx["metadata_record_present"] is True


# --- hosting and meta-repositories -------------------------------------------


@check("hosting_repository_known", any_of=("hosting_repository", "listed_in_meta_repository"),
       description="The hosting repository is known")  # fmt: skip
def _hosting_repository_known(ctx: CheckContext) -> bool:
    return bool(ctx.get("hosting_repository")) or ctx.get("listed_in_meta_repository") is True


@check("meta_repository_icons_basic", "listed_in_meta_repository", "quality_icon_count",
       description="Listed in an eligible meta-repository with basic quality icons")  # fmt: skip
def _icons_basic(ctx: CheckContext) -> bool:
    return _icons(ctx, 0)


@check("meta_repository_icons_medium", "listed_in_meta_repository", "quality_icon_count",
       description="Listed in an eligible meta-repository with medium quality icons")  # fmt: skip
def _icons_medium(ctx: CheckContext) -> bool:
    return _icons(ctx, 1)


@check("meta_repository_icons_high", "listed_in_meta_repository", "quality_icon_count",
       description="Listed in an eligible meta-repository with high quality icons")  # fmt: skip
def _icons_high(ctx: CheckContext) -> bool:
    return _icons(ctx, 2)


@check("listed_in_meta_repository", "listed_in_meta_repository", description="Listed in an eligible meta-repository")
def _listed(ctx: CheckContext) -> bool:
    return ctx["listed_in_meta_repository"] is True


@check("meta_repository_quality_checked", "listed_in_meta_repository",
       description="Listed in a meta-repository that reviews its entries")  # fmt: skip
def _quality_checked(ctx: CheckContext) -> bool:
    return ctx["listed_in_meta_repository"] is True and ctx.get("meta_repository") in QUALITY_CHECKED_REGISTRIES


# --- metadata records ----------------------------------------------------------


@check("metadata_record_present", "metadata_record_present", description="A metadata record exists")
def _metadata_record_present(ctx: CheckContext) -> bool:
    return ctx["metadata_record_present"] is True


@check("access_info_human_readable", "access_info_human_readable",
       description="Access information is given in human-readable form")  # fmt: skip
def _access_human(ctx: CheckContext) -> bool:
    return ctx["access_info_human_readable"] is True


@check("license_in_metadata", "access_info_human_readable", "license_in_metadata",
       description="Access information includes a license")  # fmt: skip
def _license_in_metadata(ctx: CheckContext) -> bool:
    return ctx["access_info_human_readable"] is True and ctx["license_in_metadata"] is True


@check("access_info_machine_readable", "access_info_machine_readable", "license_in_metadata",
       description="License and access information are machine-readable")  # fmt: skip
def _access_machine(ctx: CheckContext) -> bool:
    return ctx["access_info_machine_readable"] is True and ctx["license_in_metadata"] is True


@check("datacite_mandatory_complete", "datacite_mandatory_complete",
       description="All DataCite mandatory properties are filled")  # fmt: skip
def _mandatory(ctx: CheckContext) -> bool:
    return ctx["datacite_mandatory_complete"] is True


@check("datacite_recommended_complete", "datacite_mandatory_complete", "datacite_recommended_complete",
       description="DataCite mandatory and recommended properties are filled")  # fmt: skip
def _recommended(ctx: CheckContext) -> bool:
    return ctx["datacite_mandatory_complete"] is True and ctx["datacite_recommended_complete"] is True


@check("datacite_optional_complete", "datacite_mandatory_complete", "datacite_recommended_complete",
       "datacite_optional_count", description="Every DataCite property group is filled")  # fmt: skip
def _optional(ctx: CheckContext) -> bool:
    return (
        ctx["datacite_mandatory_complete"] is True
        and ctx["datacite_recommended_complete"] is True
        and ctx["datacite_optional_count"] == len(OPTIONAL_PROPERTIES)
    )


@check("content_metadata_present", "content_metadata_present",
       description="Subjects or descriptions document the content")  # fmt: skip
def _content_metadata(ctx: CheckContext) -> bool:
    return ctx["content_metadata_present"] is True


# --- data formats ----------------------------------------------------------------


@check("data_formats_declared", "data_formats", description="Data formats are declared")
def _formats_declared(ctx: CheckContext) -> bool:
    return bool(_formats(ctx))


@check("data_formats_common", "data_formats", description="Every declared format is a widely used one")
def _formats_common(ctx: CheckContext) -> bool:
    formats = _formats(ctx)
    return bool(formats) and all(classify_format(f) is not None for f in formats)


@check("open_data_formats", "data_formats", description="Every declared format is openly specified")
def _formats_open(ctx: CheckContext) -> bool:
    formats = _formats(ctx)
    return bool(formats) and all(classify_format(f) == "open" for f in formats)


# --- external assessment ----------------------------------------------------------


@check("external_score", "external_fair_score", description="Percentage from an external FAIR assessment")
def _external_score(ctx: CheckContext) -> bool | None:
    try:
        return map_external_score(ctx["external_fair_score"]) >= ctx.level
    except InputError as exc:
        logger.warning("Ignoring external score: %s", exc)
        return None


# --- repository presence and versioning ----------------------------------------


@check("online_repository", "vcs_remote_url", description="The code is hosted in an online repository")
def _online_repository(ctx: CheckContext) -> bool:
    return bool(ctx["vcs_remote_url"])


@check("readme_present", "readme_present", description="A README file exists")
def _readme(ctx: CheckContext) -> bool:
    return ctx["readme_present"] is True


@check("structured_citation_metadata", "citation_metadata_kind",
       description="CITATION.cff or codemeta.json is provided")  # fmt: skip
def _structured_citation(ctx: CheckContext) -> bool:
    return ctx["citation_metadata_kind"] in _STRUCTURED_CITATION


@check("version_tags_present", "tag_list", description="Releases are tagged")
def _tags(ctx: CheckContext) -> bool:
    return bool(ctx["tag_list"])


@check("semantic_versioning", "tag_list", "semver_tags_fraction", description="Tags follow semantic versioning")
def _semver(ctx: CheckContext) -> bool:
    fraction = ctx["semver_tags_fraction"]
    return (
        bool(ctx["tag_list"])
        and isinstance(fraction, (int, float))
        and fraction >= ctx.settings.semver_min_fraction
    )


@check("versioning_documented", "versioning_doc_present", description="The versioning scheme is described")
def _versioning_documented(ctx: CheckContext) -> bool:
    return ctx["versioning_doc_present"] is True


@check("ci_release_automation", "release_automation_in_ci", description="Releases are automated in CI")
def _release_automation(ctx: CheckContext) -> bool:
    return ctx["release_automation_in_ci"] is True


# --- rich metadata -------------------------------------------------------------------


@check("metadata_present", any_of=("citation_metadata_kind", "metadata_record_present"),
       description="Citation or repository metadata exists")  # fmt: skip
def _metadata_present(ctx: CheckContext) -> bool:
    kind = ctx.get("citation_metadata_kind")
    return bool(kind and kind != "none") or ctx.get("metadata_record_present") is True


@check("metadata_scheme_complete", any_of=("citation_metadata_complete", "datacite_mandatory_complete"),
       description="Metadata fills the required fields of its scheme")  # fmt: skip
def _metadata_complete(ctx: CheckContext) -> bool:
    return ctx.get("citation_metadata_complete") is True or ctx.get("datacite_mandatory_complete") is True


@check("metadata_harvestable", "metadata_record_present", "datacite_mandatory_complete",
       description="Complete metadata is harvestable from a registry")  # fmt: skip
def _metadata_harvestable(ctx: CheckContext) -> bool:
    return ctx["metadata_record_present"] is True and ctx["datacite_mandatory_complete"] is True


# --- licensing ---------------------------------------------------------------------------


@check("license_present", any_of=("license_files", "license_spdx_ids", "spdx_ids"), description="A license is given")
def _license_present(ctx: CheckContext) -> bool:
    return bool(ctx.get("license_files") or ctx.get("license_spdx_ids") or ctx.get("spdx_ids"))


@check("osi_license", any_of=("license_spdx_ids", "spdx_ids"), description="An OSI-approved license is used")
def _osi_license(ctx: CheckContext) -> bool:
    ids = [*(ctx.get("license_spdx_ids") or ()), *(ctx.get("spdx_ids") or ())]
    return any_osi_approved(ids)


@check("reuse_compliant", "reuse_compliant", description="Licensing follows the REUSE conventions")
def _reuse_compliant(ctx: CheckContext) -> bool:
    return ctx["reuse_compliant"] is True


@check("reuse_check_automated", "reuse_ci_check_present", description="REUSE compliance is checked automatically")
def _reuse_automated(ctx: CheckContext) -> bool:
    return ctx["reuse_ci_check_present"] is True


@check("locked_dependencies_tested", "lockfile_present", "tests_in_ci",
       description="Pinned dependencies are exercised by CI tests")  # fmt: skip
def _locked_tested(ctx: CheckContext) -> bool:
    return ctx["lockfile_present"] is True and ctx["tests_in_ci"] is True


# Checks that read a single boolean repository fact.
_FACT_CHECKS = {
    "contact_present": ("contact_present", "Contact information is provided"),
    "support_channel_present": ("support_channel_present", "A support channel is named"),
    "source_provided": ("source_files_present", "Source code is provided"),
    "install_docs_present": ("install_docs_present", "Installation is documented"),
    "test_cases_present": ("test_dir_present", "Test cases are provided"),
    "automated_tests": ("tests_in_ci", "Tests run in CI"),
    "install_script_present": ("install_script_present", "An installation script exists"),
    "build_automation_present": ("build_automation_present", "The build is automated"),
    "package_manifest_present": ("package_manifest_present", "A package manifest exists"),
    "container_recipe_present": ("container_recipe_present", "A container recipe exists"),
    "vcs_present": ("vcs_present", "A version control system is used"),
    "forge_hosted": ("forge_hosted", "The repository lives on a software forge"),
    "repository_nonempty": ("repository_nonempty", "The repository holds files"),
    "structured_layout": ("structured_layout", "Files are organised in directories"),
    "contribution_documented": ("contributing_present", "Contribution guidelines exist"),
    "code_style_config_present": ("code_style_config_present", "A code style is configured"),
    "style_check_in_ci": ("style_check_in_ci", "Code style is checked in CI"),
    "dependency_spec_present": ("dependency_spec_present", "Dependencies are declared"),
    "coverage_measured": ("coverage_config_present", "Test coverage is measured"),
    "pr_template_present": ("pr_template_present", "A pull request template exists"),
    "dependency_bot_present": ("dependency_bot_present", "Dependency updates are automated"),
    "security_scan_in_ci": ("security_scan_in_ci", "Security scans run in CI"),
}


def _fact_is_true(fact_id: str) -> Predicate:
    return lambda ctx: ctx[fact_id] is True


for _check_id, (_fact_id, _description) in _FACT_CHECKS.items():
    check(_check_id, _fact_id, description=_description)(_fact_is_true(_fact_id))
