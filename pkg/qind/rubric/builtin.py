"""
Built-in rubrics.

``pocme`` rates research data publications on five dimensions (Publishing,
Openness, Curation, Metadata, External View) with levels 0..4. ``fairst``
rates research software publications on six dimensions (the four FAIR ones
plus Scientific basis and Technical basis) with levels 0..5.

Level texts are frozen exactly as published, wording quirks included; only
typesetting markup was dropped. Each list below holds the statements for
levels 1..max_level; the level-0 sentence is kept as the attribute baseline.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from qind.errors import RubricNotFoundError
from qind.rubric.model import MANUAL, Attribute, CheckBinding, Dimension, LevelStatement, Rubric, ScaleLevel

BUILTIN_RUBRIC_IDS = ("pocme", "fairst")


def _attribute(
    attribute_id: str,
    title: str,
    baseline: str,
    statements: list[str],
    checks: list[str],
    weight: Fraction = Fraction(1),
) -> Attribute:
    return Attribute(
        id=attribute_id,
        title=title,
        default_weight=weight,
        baseline=baseline,
        levels=tuple(LevelStatement(level=n, text=text) for n, text in enumerate(statements, start=1)),
        checks=tuple(CheckBinding(level=n, check=check) for n, check in enumerate(checks, start=1)),
    )


_M = MANUAL

# --- POCME (research data) -------------------------------------------------

_POCME_SCALE = (
    ScaleLevel(level=0, label="Non-existent", description="no information available or not applied"),
    ScaleLevel(level=1, label="Most necessary", description="Most necessary information provided or measure taken"),
    ScaleLevel(
        level=2,
        label="Basic",
        description="Basic information provided or measure taken (sensible level of information/measures)",
    ),
    ScaleLevel(
        level=3,
        label="Advanced",
        description=(
            "Advanced information provided or measure taken, allowing to generally understand "
            "and (re)use the published data"
        ),
    ),
    ScaleLevel(
        level=4,
        label="Complete",
        description=(
            "Complete and accurate information provided or measure taken, to an extend that allows "
            "maximal understanding and usage of data"
        ),
    ),
)

_POCME_DIMENSIONS = (
    Dimension(
        id="publishing",
        title="Publishing",
        description="Identifiers, the place of publication and information on how the data can be accessed.",
        attributes=(
            _attribute(
                "published_with_identifier",
                "Published with Identifier",
                "No identifier (resource may only be found via personal communication)",
                [
                    "Basic Uniform Resource Identifier",
                    "Dataset is identifiable via internal handle (does not resolve globally, generally no metadata)",
                    "Dataset is basically identifiable via formalized, standardized, persistent identifier "
                    "(resolves globally, general metadata provided)",
                    "Dataset is identifiable via globally unique, formalized, standardized, persistent "
                    "identifier supported by general metadata (e.g. DOI).",
                ],
                ["identifier_declared", "handle_or_doi", "persistent_identifier_with_metadata", "doi_with_metadata"],
            ),
            _attribute(
                "repository_indexed",
                "Published via a Repository or Collection, that is indexed in a Meta-Repository (e.g. re3data)",
                "No information available, the data is not published via a repository/collection",
                [
                    "The data is published in a repository/ collection which is not listed in an eligible "
                    "meta-repository",
                    "The repository/collection is listed in an eligible meta-repository, basic no. of quality "
                    "indicators assigned by the meta-repository are achieved",
                    "The repository/collection is listed in an eligible meta-repository, medium no. of quality "
                    "indicators assigned by the meta-repository are achieved",
                    "The repository/collection is listed in an eligible meta-repository, high no. of quality "
                    "indicators assigned by the meta-repository are achieved",
                ],
                [
                    "hosting_repository_known",
                    "meta_repository_icons_basic",
                    "meta_repository_icons_medium",
                    "meta_repository_icons_high",
                ],
            ),
            _attribute(
                "access_information",
                "Published with Information on Access to the Data",
                "No metadata available",
                [
                    "Metadata available, but no data access-information available in the metadata",
                    "Metadata available, data access-information available only in human-readable form",
                    "Metadata available, data access-information available only in human readable form, "
                    "including general license information",
                    "Metadata available, data access-information available in human-readable and "
                    "machine-readable form*, including license information",
                ],
                [
                    "metadata_record_present",
                    "access_info_human_readable",
                    "license_in_metadata",
                    "access_info_machine_readable",
                ],
            ),
        ),
    ),
    Dimension(
        id="openness",
        title="Openness",
        description="Whether and under which conditions the published data is openly available.",
        attributes=(
            _attribute(
                "degree_of_openness",
                "General Degree of Openness",
                "No information on open accessibility/availability of the data at all",
                [
                    "Information available: no open accessibility/availability of the data. No justification, "
                    "no information on possible contact or restrictions",
                    "Like (1) + information on possible contact, restrictions or potential use cases on request "
                    "available",
                    "Like (2) + with justification AND/OR date of moratorium",
                    "Open accessibility with corresponding license (no login or contact needed or otherwise "
                    "with justification)",
                ],
                [_M, _M, _M, _M],
            ),
            _attribute(
                "primary_data_formats",
                "Primary Data Formats",
                "No primary data available in digital form",
                [
                    "Primary data generally available",
                    "Primary data stored in common proprietary data formats",
                    "Primary data stored in open formats",
                    "Primary data makes use of common, domain specific terminologies (e.g., codelists)",
                ],
                ["data_formats_declared", "data_formats_common", "open_data_formats", _M],
            ),
        ),
    ),
    Dimension(
        id="curation",
        title="Curation",
        description="How far the data and its documentation were checked, cleaned and reprocessed.",
        attributes=(
            _attribute(
                "level_of_curation",
                "Level of Curation",
                "Data is published in raw form without any curation or documentation (e.g. raw long-tail data)",
                [
                    "Data is published in raw form without curation but according to standard with basic "
                    "documentation like readme (e.g. automatic generated sensor data, long-tail data following "
                    "a basic scheme)",
                    "Data is published in cleaned form with some curation (e.g. brief checking, documentation "
                    "according to standard)",
                    "Data is published in cleaned form with enhanced curation and/ or reprocessing (e.g. "
                    "conversion to new formats, enhancement of documentation)",
                    "Data is published after undergoing extensive curation and/or reprocessing according to "
                    "discipline specific standards in order to enhance to max. quality (like (3) + additional "
                    "editing of deposited data for accuracy)",
                ],
                [_M, _M, _M, _M],
            ),
        ),
    ),
    Dimension(
        id="metadata",
        title="Metadata",
        description="Formal metadata for discovery and content metadata describing the data itself.",
        attributes=(
            _attribute(
                "formal_metadata",
                "Metadata to find/retrieve a Resource / Formal Metadata",
                "No metadata available",
                [
                    "Metadata available for/with the data publication that is not structured according to a "
                    "commonly accepted scheme (i.e. no scheme applied)",
                    "Metadata provided with the data publication that is structured in a basic way according "
                    "to a commonly accepted scheme (e.g. completed DataCite mandatory-properties/discovery ; "
                    "Dublin Core, etc.)",
                    "Metadata provided with the data publication that is structured in an advanced way, "
                    "according to a commonly accepted scheme (e.g., completed Datacite mandatory- and "
                    "recommended-properties for discovery + discovery-supporting basic content metadata "
                    "according to DataCite scheme)",
                    "Full Metadata provided with the data publication (complete DataCite mandatory- and "
                    "recommended- and optional-properties for discovery + comprehensive discovery-supporting "
                    "content metadata according to DataCite scheme)",
                ],
                [
                    "metadata_record_present",
                    "datacite_mandatory_complete",
                    "datacite_recommended_complete",
                    "datacite_optional_complete",
                ],
            ),
            _attribute(
                "content_metadata",
                "Content related Metadata",
                "No content related metadata available",
                [
                    "Some content related metadata available, following a (generic) scheme (e.g. DataCite)",
                    "Complete content related metadata available following a (generic) scheme (e.g. DataCite)",
                    "Some content related metadata available following standardized form or domain specific "
                    "scheme",
                    "Complete and curated content related metadata available following a standardized form "
                    "and domain specific scheme (see 3)",
                ],
                ["content_metadata_present", _M, _M, _M],
            ),
        ),
    ),
    Dimension(
        id="external_view",
        title="External View",
        description="Percentage score of a domain specific FAIR assessment tool, mapped onto the maturity scale.",
        attributes=(
            _attribute(
                "external_fair_score",
                "Score from Domain Specific Fair Assessment Tool",
                "0-20% Score reached",
                [
                    "21-40% Score reached",
                    "41-60% Score reached",
                    "61-80% Score reached",
                    "81-100% Score reached",
                ],
                ["external_score"] * 4,
                # kept low to limit the incentive for gaming the external tool
                weight=Fraction(1, 2),
            ),
        ),
    ),
)

# --- FAIR-ST (research software) ---------------------------------------------

_FAIRST_SCALE = (
    ScaleLevel(level=0, label="Non-existent", description="no information available"),
    ScaleLevel(
        level=1,
        label="Initial",
        description="initial information available being obtained in an ad-hoc, unorganized manner",
    ),
    ScaleLevel(
        level=2,
        label="Repeatable",
        description="the information is complete, being produced in a repeatable, yet intuitive manner",
    ),
    ScaleLevel(
        level=3,
        label="Defined",
        description="a process is established guaranteeing the complete compilation of the required information",
    ),
    ScaleLevel(
        level=4,
        label="Managed",
        description="the process being established is managed, i.e. monitoring/measuring is included",
    ),
    ScaleLevel(
        level=5,
        label="Optimized",
        description=(
            "practices are put in place optimizing the way the process is operated, leading to improved "
            "quality over time"
        ),
    ),
)

_FAIRST_DIMENSIONS = (
    Dimension(
        id="findable",
        title="Findable",
        description="Finding the software, identifying a given version and judging its fitness for use.",
        attributes=(
            _attribute(
                "open_publication_repository",
                "Open Publication Repository",
                "There is no information available on where to find the software.",
                [
                    "The software is contained in an online repository.",
                    "Some kind of description is available giving further information on the software in this "
                    "repository (e.g. readme file).",
                    "A structured meta data description (e.g. following DataCite) given for software is in this "
                    "repository.",
                    "The repository is listed in some overarching meta-repository (e.g. Helmholtz Research "
                    "Software Directory (RSD)).",
                    "The meta-repository is performing quality checks (e.g. re3data) for the used publication "
                    "repository.",
                ],
                [
                    "online_repository",
                    "readme_present",
                    "structured_citation_metadata",
                    "listed_in_meta_repository",
                    "meta_repository_quality_checked",
                ],
            ),
            _attribute(
                "versioning",
                "Versioning",
                "No software versioning applied.",
                [
                    "There is some kind of versioning for the software.",
                    "The software uses structured (e.g. semantic) versioning.",
                    "A description of the versioning scheme is available.",
                    "There is a documentation on release cycles for the software.",
                    "The versioning scheme allows for automatic tagging by CI/CD processes.",
                ],
                ["version_tags_present", "semantic_versioning", "versioning_documented", _M, "ci_release_automation"],
            ),
            _attribute(
                "persistent_identifier",
                "Persistent Identifier (PID)",
                "No PIDs given.",
                [
                    "A handle/URL is provided to identify the software.",
                    "The handle/URL is provided with a defined metadata scheme.",
                    "A persistent identifier is provided.",
                    "A PID allowing for automated harvesting of metadata information is provided.",
                    "The PID is part of an established community standard.",
                ],
                ["identifier_declared", "identifier_with_metadata", "persistent_identifier", "harvestable_pid", _M],
            ),
            _attribute(
                "rich_metadata",
                "Rich Metadata",
                "No metadata given.",
                [
                    "Some metadata information is provided with the software.",
                    "The metadata information is following a given metadata scheme complete.",
                    "A metadata curation process reflects changes/updates.",
                    "All metadata information following the given metadata scheme can be automatically harvested.",
                    "An external quality assessment of the metadata exists.",
                ],
                ["metadata_present", "metadata_scheme_complete", _M, "metadata_harvestable", _M],
            ),
        ),
    ),
    Dimension(
        id="accessible",
        title="Accessible",
        description="Legal and operational access to run the software, possibly as a service.",
        attributes=(
            _attribute(
                "access_conditions",
                "Access Conditions (organizational)",
                "Not specified.",
                [
                    "A contact is given which to inquire about the right to use the software.",
                    "The software has a license describing rights of use.",
                    "The license allows for open use of the software (e.g. OSI licenses).",
                    "There is a way to also obtain some kind of support in using the software.",
                    "There isa community, providing the opportunity of support and exchange concerning aspects "
                    "of using the software.",
                ],
                ["contact_present", "license_present", "osi_license", "support_channel_present", _M],
            ),
            _attribute(
                "access_options",
                "Access Options (process)",
                "There is only one specific form of accessing the software or no option at all.",
                [
                    "The software (source code or executable) is provided.",
                    "The sources or executables being provided include some documentation on how to "
                    "install/use the software.",
                    "Provided test cases allow to determine whether installation/execution worked as being "
                    "expected.",
                    "Provided checks make sure the software works correctly.",
                    "A software service is provided, i.e. are reported bugs taken into the development cycle.",
                ],
                ["source_provided", "install_docs_present", "test_cases_present", "automated_tests", _M],
            ),
            _attribute(
                "technical_accessibility",
                "Technical Accessibility (run/start)",
                "No information given.",
                [
                    "“How to install” information is provided.",
                    "Installation scripts are provided.",
                    "The software allows for (semi-)automated installation, e.g. a Makefile or manual package "
                    "(like Python modules).",
                    "Sources are provided such that a package manager or automated build tools , e.g. automake, "
                    "can be used.",
                    "A complete package that enables execution (e.g. container, app package) is available.",
                ],
                [
                    "install_docs_present",
                    "install_script_present",
                    "build_automation_present",
                    "package_manifest_present",
                    "container_recipe_present",
                ],
            ),
        ),
    ),
    Dimension(
        id="interoperable",
        title="Interoperable",
        description="Integrating the software into larger frameworks and automated pipelines.",
        attributes=(
            _attribute(
                "input_output_formats",
                "Input/Output Formats",
                "Not specified.",
                [
                    "Some description of input and output formats is provided.",
                    "The software builds on standard formats for input and output.",
                    "Additional options for varying input/output formats are provided.",
                    "The software builds on accepted community standards for input/output data.",
                    "The software provides in addition further tools for processing input/output data.",
                ],
                [_M, _M, _M, _M, _M],
            ),
            _attribute(
                "adaptability",
                "Adaptability/Flexibility of Use",
                "No information given.",
                [
                    "There is a way to use the software with one defined set of input data.",
                    "There are parameters to adjust the way the software is working.",
                    "There is some way of logging what is done during execution.",
                    "Documented API(s) are provided to integrate the software into one’s own framework.",
                    "There is documented way to integrate the software into open workflows, e.g. via "
                    "containers, web-services etc.",
                ],
                [_M, _M, _M, _M, _M],
            ),
        ),
    ),
    Dimension(
        id="reusable",
        title="Reusable",
        description="Being able and allowed to change, adapt and extend the code.",
        attributes=(
            _attribute(
                "reusability_conditions",
                "Reusability Conditions",
                "Not clear.",
                [
                    "The software uses a custom license allowing reuse.",
                    "The software uses a FOSS/OSI approved license including that license dependencies are at "
                    "least being checked manually.",
                    "The software uses an appropriate license for different file types (code, text, images etc.) "
                    "following e.g. the REUSE specification.",
                    "There is a process available for automatically checking e.g. the REUSE specification.",
                    "There is a process available such that all license dependencies are automatically controlled.",
                ],
                ["license_present", "osi_license", "reuse_compliant", "reuse_check_automated", _M],
            ),
        ),
    ),
    Dimension(
        id="scientific_basis",
        title="Scientific basis",
        description="Generic aspects of good scientific practice in developing the software.",
        attributes=(
            _attribute(
                "community_standards",
                "Community Standards",
                "No information given.",
                [
                    "The connection to known (scientific) standards is drawn.",
                    "The software follows standards of the relevant scientific community.",
                    "The software complies with relevant scientific standards of the field.",
                    "There is an indication on how further evolution of community standards will be addressed.",
                    "A closed feedback-loop is established, making sure that further evolutions of community "
                    "standards are being adopted.",
                ],
                [_M, _M, _M, _M, _M],
            ),
            _attribute(
                "team_expertise",
                "Team Expertise",
                "No information given.",
                [
                    "Clear expertise from a single, relevant domain is part of the software development team.",
                    "The software development team has access to expertise in several relevant domains.",
                    "The software development team has access to expertise in all relevant domains.",
                    "A fixed, established, interdisciplinary team works on the software.",
                    "An established and coordinated community of software developers works on the software.",
                ],
                [_M, _M, _M, _M, _M],
            ),
            _attribute(
                "scientific_embedding",
                "Scientific Embedding",
                "No information given.",
                [
                    "At least one scientific use case is documented.",
                    "A broader scientific context is documented including several examples.",
                    "The software development is at least loosely connected to some scientific initiative.",
                    "The software development is part of a larger scientific initiative.",
                    "The software development ispart of a larger scientific initiative with dedicated processes "
                    "for software development.",
                ],
                [_M, _M, _M, _M, _M],
            ),
        ),
    ),
    Dimension(
        id="technical_basis",
        title="Technical basis",
        description="Professional software engineering practice behind the software.",
        attributes=(
            _attribute(
                "project_management",
                "Project Management",
                "No information on project management and code history being provided.",
                [
                    "Some kind of version control is used.",
                    "A version control system is used.",
                    "A version control system being part of a code project management platform (e.g. GitHub, "
                    "GitLab) and an associated ticket system is in place.",
                    "A transparent process for ticket resolving, code review by other developer, and merge "
                    "requests is established.",
                    "A release process with guaranteed changelog generation, testing, and product provisioning "
                    "is established.",
                ],
                ["vcs_present", "vcs_present", "forge_hosted", _M, _M],
            ),
            _attribute(
                "repository_structure",
                "Repository Structure",
                "No information given.",
                [
                    "All files are provided in some structured/unstructured way inside the repository.",
                    "The repository is structured albeit maybe in a manner such that every contributor is free "
                    "to follow own way of organizing files.",
                    "A contribution mechanism is documented, e.g. CONTRIBUTORS.md file, as well as a defined "
                    "structure for the repository and a documented onboarding process.",
                    "A common template for the repository structure is available, as well as some kind of "
                    "identification of deviation.",
                    "A repository structure is enforced following community standards.",
                ],
                ["repository_nonempty", "structured_layout", "contribution_documented", _M, _M],
            ),
            _attribute(
                "code_structure",
                "Code Structure",
                "No information given.",
                [
                    "Every developer is free to use his/her own style of coding.",
                    "There are general recommendations for coding, albeit every developer being able to follow "
                    "his/her own style.",
                    "There is some harmonization of code style being enforced following common standards "
                    "including meaningful naming of functions/variables etc.",
                    "The code style is checked when accepting changes into the repository.",
                    "The code style is enforced via a review process (e.g. failed pipelines or auto-formatting).",
                ],
                ["source_provided", "code_style_config_present", _M, "style_check_in_ci", _M],
            ),
            _attribute(
                "reproducibility",
                "Reproducibility (Code)",
                "No tests, or duplicated code.",
                [
                    "The code follows a modular structure allowing for component reusability.",
                    "Clear system requirements are documented with min/max versions, albeit version pinning, "
                    "modularity etc. being enforced manually.",
                    "A package manager is used for dependency pinning and testing enforced.",
                    "Test coverage is measured, albeit tests may be written on a voluntary basis.",
                    "Automated testing for different system environments, requirements for minimal test "
                    "coverage, and provisioning of containerized packages is done.",
                ],
                [_M, "dependency_spec_present", "locked_dependencies_tested", "coverage_measured", _M],
            ),
            _attribute(
                "code_change_process",
                "Code change process",
                "No information",
                [
                    "Internal 4-eye principle for accepting changes",
                    "Code changes via transparent processes, e.g. merge/pull request",
                    "Approval of code changes via transparent processes and with a 4-eye principle",
                    "Integration of code changes into main development branch/releases only allowed for "
                    "specifically named/trained persons.",
                    "Software releases involve an external review (by someone outside of the core developer team)",
                ],
                [_M, "pr_template_present", _M, _M, _M],
            ),
            _attribute(
                "security",
                "Security",
                "No security concepts given.",
                [
                    "There are at least sporadic updates and dependency checks.",
                    "There is a systematic assessment of dependencies and documentation of the software stack.",
                    "Deployment is provided within a CI/CD framework for different environments including tools "
                    "for check for security leaks.",
                    "There is some process for monitoring dependency updates including reporting.",
                    "There are regular and automated security monitoring and an automated update process in "
                    "place allowing merges only of security checks have been passed.",
                ],
                ["dependency_bot_present", _M, "security_scan_in_ci", "dependency_bot_present", _M],
            ),
        ),
    ),
)


@cache
def builtin_rubric(rubric_id: str) -> Rubric:
    """Return one of the built-in rubrics.

    Args:
        rubric_id: ``pocme`` or ``fairst``.

    Raises:
        RubricNotFoundError: For any other id.
    """
    if rubric_id == "pocme":
        return Rubric(
            id="pocme",
            title="POCME quality indicator for research data publications",
            kind="data",
            max_level=4,
            scale=_POCME_SCALE,
            dimensions=_POCME_DIMENSIONS,
        )
    if rubric_id == "fairst":
        return Rubric(
            id="fairst",
            title="FAIR-ST quality indicator for research software publications",
            kind="software",
            max_level=5,
            scale=_FAIRST_SCALE,
            dimensions=_FAIRST_DIMENSIONS,
        )
    raise RubricNotFoundError(f"no built-in rubric {rubric_id!r} (known: {', '.join(BUILTIN_RUBRIC_IDS)})")
