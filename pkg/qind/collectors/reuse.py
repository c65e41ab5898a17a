"""
Simplified REUSE compliance check.

A file counts as licensed when it carries an ``SPDX-License-Identifier`` tag,
has a ``<name>.license`` sidecar with one, or is covered by a ``REUSE.toml``
annotation or a ``.reuse/dep5`` paragraph. Every referenced license must exist
as ``LICENSES/<id>.<ext>``. Copyright tags are not checked; this approximates
``reuse lint`` rather than reproducing it.
"""

from __future__ import annotations

import fnmatch
import logging
import os
import re
import sys
from datetime import datetime
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:  # Python 3.10: API-identical backport
    import tomli as tomllib

from qind.collectors.licenses import any_osi_approved, find_spdx_tags, parse_expression
from qind.errors import CollectorError
from qind.evidence import EvidenceBuilder, EvidenceSet
from qind.files import read_text

logger = logging.getLogger(__name__)

COLLECTOR = "reuse"

BINARY_PROBE = 8192
_VCS_DIRS = {".git", ".hg", ".svn"}
_SKIP_DIRS = _VCS_DIRS | {"LICENSES", ".reuse"}
_ROOT_LICENSE_RE = re.compile(r"^(LICEN[CS]E|COPYING)([.\-].*)?$", re.IGNORECASE)


def is_binary(path: Path) -> bool:
    """Null-byte heuristic on the first 8 KiB."""
    with open(path, "rb") as handle:
        return b"\0" in handle.read(BINARY_PROBE)


def _glob_to_regex(pattern: str) -> re.Pattern[str]:
    # REUSE.toml globbing: ``*`` stays within a directory, ``**`` crosses them.
    parts: list[str] = []
    index = 0
    while index < len(pattern):
        if pattern.startswith("**", index):
            parts.append(".*")
            index += 2
        elif pattern[index] == "*":
            parts.append("[^/]*")
            index += 1
        elif pattern[index] == "\\" and index + 1 < len(pattern):
            parts.append(re.escape(pattern[index + 1]))
            index += 2
        else:
            parts.append(re.escape(pattern[index]))
            index += 1
    return re.compile("".join(parts) + r"\Z")


class _Annotation:
    def __init__(self, patterns: list[re.Pattern[str]], license_ids: list[str], override: bool):
        self.patterns = patterns
        self.license_ids = license_ids
        self.override = override

    def covers(self, relative: str) -> bool:
        return any(pattern.match(relative) for pattern in self.patterns)


def _load_reuse_toml(path: Path) -> list[_Annotation]:
    data = tomllib.loads(path.read_text(encoding="utf-8"))
    annotations: list[_Annotation] = []
    for entry in data.get("annotations", []):
        paths = entry.get("path", [])
        if isinstance(paths, str):
            paths = [paths]
        expression = entry.get("SPDX-License-Identifier", "")
        if isinstance(expression, list):
            expression = " AND ".join(expression)
        annotations.append(
            _Annotation(
                [_glob_to_regex(p) for p in paths],
                parse_expression(expression),
                entry.get("precedence", "closest") == "override",
            )
        )
    return annotations


def _load_dep5(path: Path) -> list[tuple[list[str], list[str]]]:
    """``(file patterns, license ids)`` of each ``Files:`` paragraph."""
    paragraphs: list[tuple[list[str], list[str]]] = []
    for block in re.split(r"\n\s*\n", read_text(path)):
        fields: dict[str, str] = {}
        current = None
        for line in block.splitlines():
            if line[:1].isspace() and current:
                fields[current] += " " + line.strip()
            elif ":" in line:
                current, _, value = line.partition(":")
                current = current.strip().lower()
                fields[current] = value.strip()
        if "files" in fields and "license" in fields:
            paragraphs.append((fields["files"].split(), parse_expression(fields["license"])))
    return paragraphs


def _iter_files(root: Path):
    for directory, dirnames, filenames in os.walk(root):
        skip = _SKIP_DIRS if Path(directory) == root else _VCS_DIRS
        dirnames[:] = sorted(d for d in dirnames if d not in skip)
        for name in sorted(filenames):
            path = Path(directory) / name
            if path.is_symlink() or not path.is_file():
                continue
            yield path, path.relative_to(root).as_posix()


def _ignored(relative: str) -> bool:
    if "/" not in relative and _ROOT_LICENSE_RE.match(relative):
        return True
    return relative.endswith(".license") or relative in {"REUSE.toml", ".reuse/dep5"}


def check_reuse_compliance(path: str | os.PathLike, *, retrieved_at: datetime) -> EvidenceSet:
    """Check the REUSE conventions of a source tree.

    Args:
        path: Repository root.
        retrieved_at: Timestamp recorded in the facts' provenance.

    Returns:
        Facts ``reuse_compliant``, ``reuse_offending_paths``,
        ``reuse_missing_licenses``, ``spdx_ids`` and ``osi_approved``.

    Raises:
        CollectorError: The path is not a readable directory.
    """
    root = Path(path)
    if not root.is_dir():
        raise CollectorError(f"not a directory: {root}")
    evidence = EvidenceBuilder(COLLECTOR, str(root), retrieved_at)

    licenses_dir = root / "LICENSES"
    available = {p.stem for p in licenses_dir.iterdir() if p.is_file()} if licenses_dir.is_dir() else set()

    offending: list[str] = []
    annotations: list[_Annotation] = []
    if (root / "REUSE.toml").is_file():
        try:
            annotations = _load_reuse_toml(root / "REUSE.toml")
        except (tomllib.TOMLDecodeError, UnicodeDecodeError, AttributeError, TypeError, OSError) as exc:
            logger.warning("Unreadable REUSE.toml in %s: %s", root, exc)
            offending.append("REUSE.toml")
    dep5 = _load_dep5(root / ".reuse" / "dep5") if (root / ".reuse" / "dep5").is_file() else []

    referenced: set[str] = set()
    try:
        for file_path, relative in _iter_files(root):
            if _ignored(relative):
                continue
            sidecar = file_path.with_name(file_path.name + ".license")
            if sidecar.is_file():
                ids = find_spdx_tags(read_text(sidecar))
            elif is_binary(file_path):
                ids = []
            else:
                ids = find_spdx_tags(read_text(file_path, limit=BINARY_PROBE))

            matching = [a for a in annotations if a.covers(relative)]
            if matching and (matching[-1].override or not ids):
                ids = matching[-1].license_ids
            if not ids:
                for patterns, license_ids in reversed(dep5):
                    if any(fnmatch.fnmatchcase(relative, p) for p in patterns):
                        ids = license_ids
                        break

            if ids:
                referenced.update(ids)
            else:
                offending.append(relative)
    except OSError as exc:
        raise CollectorError(f"cannot read {root}: {exc}") from exc

    missing = sorted(referenced - available)
    spdx_ids = sorted(referenced | available)
    source = "LICENSES" if licenses_dir.is_dir() else "."
    if offending:
        logger.info("%d files without license information in %s", len(offending), root)
    evidence.add("reuse_compliant", not offending and not missing, source)
    evidence.add("reuse_offending_paths", tuple(offending), source)
    evidence.add("reuse_missing_licenses", tuple(missing), source)
    evidence.add("spdx_ids", tuple(spdx_ids), source)
    evidence.add("osi_approved", any_osi_approved(spdx_ids), source)
    return evidence.build()
