"""
Local repository scanner.

Reads a working tree (and its ``.git`` directory, without running git) and
reports presence facts: version control and tags, documentation files,
citation metadata, CI configuration and what the CI runs, packaging, tests,
licenses and contribution infrastructure. Every fact records the relative
path that established it, or ``.`` when the fact is a negative.
"""

from __future__ import annotations

import fnmatch
import json
import logging
import os
import re
from collections.abc import Iterable
from datetime import datetime
from pathlib import Path
from urllib.parse import urlparse

import yaml

from qind.base import FrozenModel
from qind.collectors.licenses import detect_license_text
from qind.errors import CollectorError
from qind.evidence import EvidenceBuilder, EvidenceSet
from qind.files import read_text

logger = logging.getLogger(__name__)

COLLECTOR = "repository"

TEXT_LIMIT = 256 * 1024
SEMVER_RE = re.compile(
    r"^v?(0|[1-9]\d*)\.(0|[1-9]\d*)\.(0|[1-9]\d*)(?:-[0-9A-Za-z.\-]+)?(?:\+[0-9A-Za-z.\-]+)?$"
)
DOI_RE = re.compile(r"\b(10\.\d{4,9}/[^\s\"'<>\])]+)")
HANDLE_RE = re.compile(r"^(?:hdl:)?\d+(?:\.\d+)*/\S+$")
_EMAIL_RE = re.compile(r"(?<![\w.+\-])(?!git@)[\w.+\-]+@[\w\-]+\.[\w.\-]+")
_ROOT_LICENSE_RE = re.compile(r"^(LICEN[CS]E|COPYING)([.\-].*)?$", re.IGNORECASE)
_VCS_DIRS = {".git", ".hg", ".svn"}

KNOWN_FORGES = {
    "github.com",
    "gitlab.com",
    "bitbucket.org",
    "codeberg.org",
    "git.sr.ht",
    "gitea.com",
    "sourceforge.net",
    "codebase.helmholtz.cloud",
}

SOURCE_EXTENSIONS = {
    ".c", ".cc", ".cpp", ".cxx", ".h", ".hh", ".hpp", ".f", ".f90", ".f95", ".for", ".go", ".rs",
    ".java", ".kt", ".scala", ".py", ".pyx", ".r", ".jl", ".m", ".js", ".mjs", ".jsx", ".ts", ".tsx",
    ".rb", ".php", ".pl", ".lua", ".sh", ".cs", ".swift", ".hs", ".ml", ".ex", ".erl", ".clj", ".dart",
    ".ipynb", ".cu", ".vhd", ".sv",
}  # fmt: skip

CI_PATTERNS = (
    ".github/workflows/*.yml",
    ".github/workflows/*.yaml",
    ".gitlab-ci.yml",
    ".gitlab-ci.yaml",
    ".travis.yml",
    "azure-pipelines.yml",
    "jenkinsfile",
    ".circleci/config.yml",
    "appveyor.yml",
    ".appveyor.yml",
    "bitbucket-pipelines.yml",
    ".woodpecker.yml",
    ".woodpecker/*.yml",
    ".drone.yml",
)
INSTALL_SCRIPTS = (
    "install.sh", "install.ps1", "install.bat", "install.py", "setup.sh", "bootstrap.sh", "setup.py",
    "scripts/install*", "bin/install*",
)  # fmt: skip
PACKAGE_MANIFESTS = (
    "pyproject.toml", "setup.py", "setup.cfg", "package.json", "cargo.toml", "description", "go.mod",
    "pom.xml", "build.gradle", "build.gradle.kts", "*.gemspec", "composer.json", "project.toml",
    "environment.yml", "environment.yaml", "meta.yaml", "recipe/meta.yaml", "conda/meta.yaml",
    "*.cabal", "mix.exs", "pubspec.yaml", "*.nuspec", "*.csproj", "spack/package.py",
)  # fmt: skip
BUILD_FILES = (
    "makefile", "gnumakefile", "cmakelists.txt", "meson.build", "configure.ac", "configure", "setup.py",
    "build.gradle", "build.gradle.kts", "pom.xml", "cargo.toml", "justfile", "sconstruct", "build.xml",
    "wscript", "noxfile.py", "tox.ini",
)  # fmt: skip
CONTAINER_NAMES = (
    "dockerfile", "containerfile", "*.dockerfile", "dockerfile.*", "docker-compose.yml", "docker-compose.yaml",
    "compose.yml", "compose.yaml", "singularity", "*.def", "apptainer*",
)  # fmt: skip
STYLE_CONFIGS = (
    ".editorconfig", ".pre-commit-config.yaml", ".flake8", "ruff.toml", ".ruff.toml", ".pylintrc", "pylintrc",
    ".clang-format", ".clang-tidy", ".eslintrc*", "eslint.config.*", ".prettierrc*", "rustfmt.toml",
    ".rustfmt.toml", ".golangci.yml", ".golangci.yaml", ".stylelintrc*", ".lintr", ".jshintrc", ".rubocop.yml",
    "checkstyle.xml", ".isort.cfg", ".style.yapf",
)  # fmt: skip
DEPENDENCY_SPECS = (
    "requirements*.txt", "requirements/*.txt", "requirements/*.in", "requirements*.in", "environment.yml",
    "environment.yaml", "package.json", "cargo.toml", "go.mod", "description", "gemfile", "pom.xml",
    "build.gradle", "build.gradle.kts", "pipfile", "project.toml", "composer.json", "renv.lock",
    "conanfile.txt", "conanfile.py", "vcpkg.json",
)  # fmt: skip
LOCKFILES = (
    "poetry.lock", "pipfile.lock", "uv.lock", "pdm.lock", "package-lock.json", "yarn.lock", "pnpm-lock.yaml",
    "cargo.lock", "go.sum", "gemfile.lock", "composer.lock", "conda-lock.yml", "renv.lock", "manifest.toml",
)  # fmt: skip
COVERAGE_CONFIGS = (".coveragerc", "codecov.yml", ".codecov.yml", "codecov.yaml", ".codecov.yaml")
PR_TEMPLATES = (
    ".github/pull_request_template.md",
    ".github/pull_request_template/*",
    "pull_request_template.md",
    "docs/pull_request_template.md",
    ".gitlab/merge_request_templates/*",
)
DEPENDENCY_BOTS = (
    ".github/dependabot.yml",
    ".github/dependabot.yaml",
    "renovate.json",
    "renovate.json5",
    ".renovaterc",
    ".renovaterc.json",
    ".github/renovate.json",
    ".github/renovate.json5",
    ".gitlab/renovate.json",
)
CONTACT_FILES = ("authors*", "maintainers*", "codeowners", ".github/codeowners", "docs/codeowners", ".mailmap")
SUPPORT_FILES = ("support*", ".github/support*", ".github/issue_template/*", ".github/issue_template*", ".gitlab/issue_templates/*")  # fmt: skip
CONTRIBUTING_FILES = ("contributing*", "contributors*", ".github/contributing*", "docs/contributing*")
CHANGELOG_FILES = ("changelog*", "changes*", "history*", "news*", "release_notes*", "releasenotes*", "docs/changelog*")
VERSIONING_FILES = ("versioning*", "releasing*", "docs/versioning*", "docs/releasing*", "docs/release*")
TEST_DIRS = {"tests", "test", "testing", "spec", "__tests__"}
TEST_FILES = ("test_*.py", "*_test.py", "*_test.go", "*.test.js", "*.test.ts", "*.spec.js", "*.spec.ts", "*test.java")


def _token_re(*tokens: str) -> re.Pattern[str]:
    return re.compile("|".join(rf"(?<![\w\-]){token}(?![\w\-])" for token in tokens), re.IGNORECASE)


TESTS_IN_CI = _token_re(
    "pytest", "tox", "nox", r"npm (?:run )?test", "yarn test", r"make (?:test|check)", "ctest", "cargo test",
    "go test", r"mvn (?:test|verify)", r"(?:\./)?gradlew? test", "rcmdcheck", r"r cmd check", "testthat",
    "unittest", "julia-runtest", "dotnet test", "phpunit", "rspec",
)  # fmt: skip
STYLE_IN_CI = _token_re(
    "ruff", "flake8", "black", "pylint", "clang-format", "eslint", "prettier", "pre-commit", "rustfmt", "gofmt",
    "golangci-lint", "lintr", "cpplint", "checkstyle", "isort", "yapf", "rubocop", "stylelint",
)  # fmt: skip
COVERAGE_IN_CI = _token_re("coverage", "codecov", "coveralls", "--cov", "jacoco", "lcov", "tarpaulin", "covr")
RELEASE_IN_CI = _token_re(
    "semantic-release", "release-please", "commitizen", "cz bump", "bump2version", "bumpversion",
    "bump-my-version", "git tag", "standard-version", "changesets/action", "release-it", "tbump",
)  # fmt: skip
SECURITY_IN_CI = _token_re(
    "codeql", "bandit", "safety check", "pip-audit", "trivy", "snyk", "grype", "osv-scanner", "gitleaks",
    "semgrep", "dependency-check", "npm audit", "cargo audit", "govulncheck", "trufflehog", "scorecard",
    "sast", "dependency-scanning", "secret-detection",
)  # fmt: skip
REUSE_IN_CI = _token_re("reuse lint", "fsfe/reuse-action", "fsfe/reuse-tool", "reuse-tool")
VERSIONING_TEXT = re.compile(
    r"semantic versioning|semver\.org|calver|versioning scheme|versioning policy|release cycle", re.IGNORECASE
)
SUPPORT_TEXT = re.compile(
    r"/issues\b|issue tracker|mailing list|gitter\.im|matrix\.to|discourse|/discussions\b|slack|forum|helpdesk",
    re.IGNORECASE,
)
INSTALL_HEADING = re.compile(
    r"^\s{0,3}#{1,6}\s.*\b(install\w*|getting started|setup|quick ?start)\b"
    r"|^(install\w*|getting started|setup|quick ?start)[^\n]*\n[=\-~^]{3,}",
    re.IGNORECASE | re.MULTILINE,
)
CONTACT_HEADING = re.compile(r"^\s{0,3}#{1,6}\s.*\b(contact|maintainers?|authors?|support)\b", re.IGNORECASE | re.MULTILINE)


def is_semver(tag: str) -> bool:
    return SEMVER_RE.match(tag) is not None


class GitMetadata(FrozenModel):
    present: bool
    source: str = "."
    tags: tuple[str, ...] = ()
    remote_url: str | None = None


def _git_dir(root: Path) -> Path | None:
    dot_git = root / ".git"
    if dot_git.is_dir():
        return dot_git
    if dot_git.is_file():
        content = read_text(dot_git).strip()
        if content.startswith("gitdir:"):
            target = Path(content.partition(":")[2].strip())
            target = target if target.is_absolute() else (root / target)
            return target if target.is_dir() else None
    return None


def _remote_url(config_text: str) -> str | None:
    remotes: dict[str, str] = {}
    section = None
    for line in config_text.splitlines():
        line = line.strip()
        if line.startswith("["):
            match = re.match(r'\[remote\s+"([^"]+)"\]', line)
            section = match.group(1) if match else None
        elif section and "=" in line:
            key, _, value = line.partition("=")
            if key.strip().lower() == "url" and section not in remotes:
                remotes[section] = value.strip()
    return remotes.get("origin") or next(iter(remotes.values()), None)


def read_git_metadata(root: Path) -> GitMetadata:
    """Tags and remote URL straight from the ``.git`` directory.

    Mercurial and Subversion checkouts count as version control without tags.
    """
    git_dir = _git_dir(root)
    if git_dir is None or not (git_dir / "HEAD").is_file():
        for other in (".hg", ".svn"):
            if (root / other).is_dir():
                return GitMetadata(present=True, source=other)
        return GitMetadata(present=False)

    common = git_dir
    if (git_dir / "commondir").is_file():
        common = (git_dir / read_text(git_dir / "commondir").strip()).resolve()

    tags: set[str] = set()
    tags_dir = common / "refs" / "tags"
    if tags_dir.is_dir():
        tags.update(p.relative_to(tags_dir).as_posix() for p in tags_dir.rglob("*") if p.is_file())
    packed = common / "packed-refs"
    if packed.is_file():
        for line in read_text(packed).splitlines():
            if line.startswith(("#", "^")):
                continue
            _, _, ref = line.partition(" ")
            if ref.startswith("refs/tags/"):
                tags.add(ref.removeprefix("refs/tags/").strip())

    config = common / "config"
    remote = _remote_url(read_text(config)) if config.is_file() else None
    return GitMetadata(present=True, source=".git", tags=tuple(sorted(tags)), remote_url=remote)


def forge_host(remote_url: str | None) -> str | None:
    """Host name of an https or scp-style git remote."""
    if not remote_url:
        return None
    if "://" in remote_url:
        return (urlparse(remote_url).hostname or "").lower() or None
    match = re.match(r"^(?:[\w.\-]+@)?([\w.\-]+):", remote_url)
    return match.group(1).lower() if match else None


def is_forge(host: str | None) -> bool:
    if not host:
        return False
    return host in KNOWN_FORGES or any(word in host for word in ("gitlab", "gitea", "forgejo", "github"))


class CitationMetadata(FrozenModel):
    kind: str = "none"
    source: str = "."
    complete: bool = False
    pid: str | None = None
    contact: bool = False


def _pid_from(value: object) -> str | None:
    if isinstance(value, str):
        if match := DOI_RE.search(value):
            return match.group(1).rstrip(".")
        if HANDLE_RE.match(value.strip()):
            return value.strip()
    return None


def _read_cff(path: Path, relative: str) -> CitationMetadata:
    try:
        data = yaml.safe_load(read_text(path))
    except yaml.YAMLError as exc:
        logger.warning("Unparsable %s: %s", relative, exc)
        return CitationMetadata(kind="citation-file", source=relative)
    if not isinstance(data, dict):
        return CitationMetadata(kind="citation-file", source=relative)
    authors = data.get("authors") or []
    complete = all(data.get(key) for key in ("cff-version", "message", "title")) and bool(authors)
    pid = _pid_from(data.get("doi"))
    for identifier in data.get("identifiers") or []:
        if pid is None and isinstance(identifier, dict) and identifier.get("type") == "doi":
            pid = _pid_from(identifier.get("value"))
    contact = isinstance(authors, list) and any(isinstance(a, dict) and a.get("email") for a in authors)
    return CitationMetadata(kind="citation-file", source=relative, complete=complete, pid=pid, contact=contact)


def _read_codemeta(path: Path, relative: str) -> CitationMetadata:
    try:
        data = json.loads(read_text(path))
    except json.JSONDecodeError as exc:
        logger.warning("Unparsable %s: %s", relative, exc)
        return CitationMetadata(kind="codemeta", source=relative)
    if not isinstance(data, dict):
        return CitationMetadata(kind="codemeta", source=relative)
    complete = all(data.get(key) for key in ("name", "author", "license", "version"))
    identifiers = data.get("identifier")
    candidates = identifiers if isinstance(identifiers, list) else [identifiers, data.get("@id")]
    pid = next((p for p in map(_pid_from, candidates) if p), None)
    authors = data.get("author") or []
    authors = authors if isinstance(authors, list) else [authors]
    contact = any(isinstance(a, dict) and a.get("email") for a in authors)
    return CitationMetadata(kind="codemeta", source=relative, complete=complete, pid=pid, contact=contact)


class _Tree:
    """Relative posix paths of every file below the root, VCS directories excluded."""

    def __init__(self, root: Path):
        self.root = root
        self.files: list[str] = []

        def _raise(error: OSError) -> None:
            raise CollectorError(f"cannot read {error.filename}: {error.strerror}")

        for directory, dirnames, filenames in os.walk(root, onerror=_raise):
            dirnames[:] = sorted(d for d in dirnames if d not in _VCS_DIRS)
            base = Path(directory)
            for name in sorted(filenames):
                path = base / name
                if path.is_file():
                    self.files.append(path.relative_to(root).as_posix())
        self._lower = [(f.lower(), f) for f in self.files]

    def find(self, patterns: Iterable[str], *, anywhere: bool = False) -> list[str]:
        """Files matching any (lower-case) glob; ``anywhere`` matches basenames at any depth."""
        patterns = tuple(patterns)
        hits = []
        for lower, original in self._lower:
            if anywhere:
                name = lower.rsplit("/", 1)[-1]
                matched = any(fnmatch.fnmatchcase(name, pattern) for pattern in patterns)
            else:
                depth = lower.count("/")
                matched = any(
                    pattern.count("/") == depth and fnmatch.fnmatchcase(lower, pattern) for pattern in patterns
                )
            if matched:
                hits.append(original)
        return hits

    def first(self, patterns: Iterable[str], *, anywhere: bool = False) -> str | None:
        return next(iter(self.find(patterns, anywhere=anywhere)), None)

    def text(self, relative: str) -> str:
        return read_text(self.root / relative, limit=TEXT_LIMIT)

    def first_containing(self, candidates: Iterable[str], pattern: re.Pattern[str]) -> str | None:
        for relative in candidates:
            if pattern.search(self.text(relative)):
                return relative
        return None


def _requirements_pinned(tree: _Tree, paths: list[str]) -> str | None:
    for relative in paths:
        lines = [
            line.split("#", 1)[0].strip()
            for line in tree.text(relative).splitlines()
            if line.strip() and not line.lstrip().startswith(("#", "-"))
        ]
        lines = [line for line in lines if line]
        if lines and all("==" in line for line in lines):
            return relative
    return None


def scan_local_repository(path: str | os.PathLike, *, retrieved_at: datetime) -> EvidenceSet:
    """Collect presence facts from a local working tree.

    Args:
        path: Repository root. A plain directory is fine; it simply yields
            ``vcs_present = False``.
        retrieved_at: Timestamp recorded in the facts' provenance.

    Returns:
        The repository EvidenceSet.

    Raises:
        CollectorError: The path does not exist or cannot be read.
    """
    root = Path(path)
    if not root.is_dir():
        raise CollectorError(f"not a readable directory: {root}")
    if not os.access(root, os.R_OK | os.X_OK):
        raise CollectorError(f"permission denied: {root}")

    logger.info("Scanning repository %s", root)
    tree = _Tree(root)
    evidence = EvidenceBuilder(COLLECTOR, str(root), retrieved_at)

    def presence(fact_id: str, hit: str | None) -> None:
        evidence.add(fact_id, hit is not None, hit or ".")

    # version control
    git = read_git_metadata(root)
    evidence.add("vcs_present", git.present, git.source)
    evidence.add("tag_list", git.tags, git.source)
    semver = [tag for tag in git.tags if is_semver(tag)]
    evidence.add("semver_tags_fraction", len(semver) / len(git.tags) if git.tags else 0.0, git.source)
    evidence.add("vcs_remote_url", git.remote_url, ".git/config" if git.remote_url else git.source)
    evidence.add("forge_hosted", is_forge(forge_host(git.remote_url)), ".git/config" if git.remote_url else ".")

    # layout
    evidence.add("repository_nonempty", bool(tree.files), tree.files[0] if tree.files else ".")
    structured = next((f for f in tree.files if "/" in f and not f.startswith(".")), None)
    presence("structured_layout", structured)
    source_file = next((f for f in tree.files if os.path.splitext(f)[1].lower() in SOURCE_EXTENSIONS), None)
    presence("source_files_present", source_file)
    test_hit = next((f for f in tree.files if set(f.lower().split("/")[:-1]) & TEST_DIRS), None)
    presence("test_dir_present", test_hit or tree.first(TEST_FILES, anywhere=True))

    # documentation
    readme = tree.first(["readme*"])
    presence("readme_present", readme)
    contributing = tree.first(CONTRIBUTING_FILES)
    presence("contributing_present", contributing)
    presence("changelog_present", tree.first(CHANGELOG_FILES))
    docs = [f for f in tree.files if f.lower().startswith("docs/") and f.lower().endswith((".md", ".rst", ".txt"))]
    install_doc = tree.first(["install*", "docs/install*"])
    if install_doc is None and readme and INSTALL_HEADING.search(tree.text(readme)):
        install_doc = readme
    presence("install_docs_present", install_doc)
    versioning_doc = tree.first(VERSIONING_FILES)
    if versioning_doc is None:
        prose = [p for p in (readme, contributing, tree.first(CHANGELOG_FILES)) if p] + docs
        versioning_doc = tree.first_containing(prose, VERSIONING_TEXT)
    presence("versioning_doc_present", versioning_doc)

    # citation metadata
    citation = CitationMetadata()
    if cff := tree.first(["citation.cff"]):
        citation = _read_cff(root / cff, cff)
    elif codemeta := tree.first(["codemeta.json"]):
        citation = _read_codemeta(root / codemeta, codemeta)
    elif plain := tree.first(["citation", "citation.*"]):
        citation = CitationMetadata(kind="unstructured", source=plain)
    evidence.add("citation_metadata_kind", citation.kind, citation.source)
    evidence.add("citation_metadata_complete", citation.complete, citation.source)
    pid, pid_source = citation.pid, citation.source
    if pid is None and readme:
        if match := re.search(r"doi\.org/(10\.\d{4,9}/[^\s\"'<>\])]+)", tree.text(readme)):
            pid, pid_source = match.group(1).rstrip("."), readme
    evidence.add("declared_pid", pid, pid_source if pid else ".")

    # contact and support
    contact = tree.first(CONTACT_FILES)
    if contact is None and citation.contact:
        contact = citation.source
    if contact is None and readme:
        readme_text = tree.text(readme)
        if _EMAIL_RE.search(readme_text) or CONTACT_HEADING.search(readme_text):
            contact = readme
    presence("contact_present", contact)
    support = tree.first(SUPPORT_FILES)
    if support is None and readme and SUPPORT_TEXT.search(tree.text(readme)):
        support = readme
    presence("support_channel_present", support)

    # licenses
    license_files = tree.find(["licen[cs]e*", "copying*"]) + tree.find(["licenses/*"])
    license_files = [f for f in license_files if "/" in f or _ROOT_LICENSE_RE.match(f)]
    evidence.add("license_files", tuple(license_files), license_files[0] if license_files else ".")
    spdx_ids: set[str] = set()
    for relative in license_files:
        if relative.lower().startswith("licenses/"):
            spdx_ids.add(Path(relative).stem)
        elif detected := detect_license_text(tree.text(relative)):
            spdx_ids.add(detected)
    evidence.add("license_spdx_ids", tuple(sorted(spdx_ids)), license_files[0] if license_files else ".")

    # packaging and build
    presence("install_script_present", tree.first(INSTALL_SCRIPTS))
    presence("package_manifest_present", tree.first(PACKAGE_MANIFESTS))
    build = tree.first(BUILD_FILES)
    if build is None and (pyproject := tree.first(["pyproject.toml"])):
        build = pyproject if "[build-system]" in tree.text(pyproject) else None
    presence("build_automation_present", build)
    presence("container_recipe_present", tree.first(CONTAINER_NAMES, anywhere=True) or tree.first([".devcontainer/*"]))

    manifests = tree.find(["pyproject.toml", "setup.py", "setup.cfg"])
    dependency_spec = tree.first(DEPENDENCY_SPECS) or tree.first_containing(
        manifests, re.compile(r"dependencies|install_requires")
    )
    presence("dependency_spec_present", dependency_spec)
    lockfile = tree.first(LOCKFILES) or _requirements_pinned(tree, tree.find(["requirements*.txt"]))
    presence("lockfile_present", lockfile)

    # code style
    style = tree.first(STYLE_CONFIGS)
    if style is None:
        style = tree.first_containing(
            tree.find(["pyproject.toml", "setup.cfg", "tox.ini"]),
            re.compile(r"^\[(tool\.(black|ruff|isort|pylint|flake8|yapf)|flake8|pycodestyle|isort)\b", re.MULTILINE),
        )
    presence("code_style_config_present", style)

    # continuous integration
    ci_files = tree.find(CI_PATTERNS)
    presence("ci_config_present", ci_files[0] if ci_files else None)
    presence("tests_in_ci", tree.first_containing(ci_files, TESTS_IN_CI))
    presence("style_check_in_ci", tree.first_containing(ci_files, STYLE_IN_CI))
    presence("release_automation_in_ci", tree.first_containing(ci_files, RELEASE_IN_CI))
    presence("security_scan_in_ci", tree.first_containing(ci_files, SECURITY_IN_CI))
    reuse_ci = tree.first_containing(ci_files + tree.find([".pre-commit-config.yaml"]), REUSE_IN_CI)
    presence("reuse_ci_check_present", reuse_ci)
    coverage = tree.first(COVERAGE_CONFIGS) or tree.first_containing(ci_files, COVERAGE_IN_CI)
    if coverage is None:
        coverage = tree.first_containing(
            tree.find(["pyproject.toml", "setup.cfg", "tox.ini"]), re.compile(r"^\[(tool\.)?coverage", re.MULTILINE)
        )
    presence("coverage_config_present", coverage)

    # change process and security
    presence("pr_template_present", tree.first(PR_TEMPLATES))
    presence("dependency_bot_present", tree.first(DEPENDENCY_BOTS))

    result = evidence.build()
    logger.info("Repository %s: %d facts", root, len(result.facts))
    return result
