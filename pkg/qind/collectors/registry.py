"""
Meta-repository lookup against the re3data registry.

A repository is found either by its ``r3d…`` id or by matching the host of a
repository URL against the ``repositoryURL`` of the records returned by a
registry search. The quality icons re3data shows for a listed repository are
counted from the record.
"""

from __future__ import annotations

import logging
import re
from datetime import datetime
from typing import Any
from urllib.parse import quote, urlparse
from xml.parsers.expat import ExpatError

import xmltodict

from qind.collectors.http import RemoteFetcher
from qind.errors import NetworkUnavailable
from qind.evidence import EvidenceBuilder, EvidenceSet

logger = logging.getLogger(__name__)

COLLECTOR = "registry"
REGISTRY = "re3data"
XML = "application/xml"
MAX_CANDIDATES = 10

R3D_ID_RE = re.compile(r"\br3d\d{9}\b")

# re3data performs a curated review of every listed repository.
QUALITY_CHECKED_REGISTRIES = frozenset({REGISTRY})


def _strip_prefix(path: Any, key: str, value: Any) -> tuple[str, Any]:
    return key.rsplit(":", 1)[-1], value


def parse_registry_xml(text: str) -> dict[str, Any]:
    """Parse a registry XML document with namespace prefixes removed from tag names."""
    return xmltodict.parse(text, postprocessor=_strip_prefix)


def _as_list(value: Any) -> list[Any]:
    if value is None:
        return []
    return value if isinstance(value, list) else [value]


def _text(value: Any) -> str:
    if isinstance(value, dict):
        value = value.get("#text", "")
    return str(value or "").strip()


def quality_icons(repository: dict[str, Any]) -> list[str]:
    """Names of the quality indicators a re3data record earns."""
    icons = []
    access = [
        _text(entry.get(key))
        for field, key in (("databaseAccess", "databaseAccessType"), ("dataAccess", "dataAccessType"))
        for entry in _as_list(repository.get(field))
        if isinstance(entry, dict)
    ]
    if "open" in {a.lower() for a in access}:
        icons.append("open_access")
    licenses = [
        _text(entry.get("dataLicenseName")) for entry in _as_list(repository.get("dataLicense")) if isinstance(entry, dict)
    ]
    if any(name and name.lower() not in {"copyrights", "other"} for name in licenses):
        icons.append("data_license")
    if any(_text(p).lower() not in {"", "none"} for p in _as_list(repository.get("pidSystem"))):
        icons.append("pid_system")
    if any(_text(c) for c in _as_list(repository.get("certificate"))):
        icons.append("certificate")
    if _as_list(repository.get("policy")):
        icons.append("policy")
    if _text(repository.get("versioning")).lower() == "yes":
        icons.append("versioning")
    return icons


def _parse(url: str) -> tuple[str, str]:
    parsed = urlparse(url if "://" in url else f"https://{url}")
    host = (parsed.hostname or "").lower().removeprefix("www.")
    return host, parsed.path.rstrip("/").lower()


def _host(url: str) -> str:
    return _parse(url)[0]


def hosts_match(a: str, b: str) -> bool:
    return bool(a and b) and (a == b or a.endswith("." + b) or b.endswith("." + a))


def urls_match(locator: str, repository_url: str) -> bool:
    """Same host (subdomains allowed); a record URL with a path must prefix the locator path."""
    host, path = _parse(locator)
    record_host, record_path = _parse(repository_url)
    if not hosts_match(host, record_host):
        return False
    return not record_path or path == record_path or path.startswith(record_path + "/")


class _Lookup:
    def __init__(self, fetcher: RemoteFetcher):
        self.fetcher = fetcher
        self.base = fetcher.settings.registry_base
        self.retrieved_at: datetime | None = None

    def get_xml(self, url: str) -> dict[str, Any] | None:
        response = self.fetcher.get(url, accept=XML)
        self.retrieved_at = response.retrieved_at
        if response.status == 404:
            return None
        if not response.ok:
            raise NetworkUnavailable(f"{url}: HTTP {response.status}")
        try:
            return parse_registry_xml(response.body)
        except ExpatError as exc:
            raise self.fetcher.reject(response, f"malformed XML: {exc}") from exc

    def record(self, r3d_id: str) -> tuple[str, dict[str, Any]] | None:
        url = f"{self.base}/api/v1/repository/{r3d_id}"
        document = self.get_xml(url)
        if document is None:
            return None
        root = document.get("re3data")
        repository = root.get("repository") if isinstance(root, dict) else None
        if isinstance(repository, list):
            repository = repository[0] if repository else None
        return (url, repository) if isinstance(repository, dict) else None

    def search(self, host: str) -> list[str]:
        document = self.get_xml(f"{self.base}/api/beta/repositories?query={quote(host)}") or {}
        listing = document.get("list")
        if not isinstance(listing, dict):
            return []
        ids = [_text(entry.get("id")) for entry in _as_list(listing.get("repository")) if isinstance(entry, dict)]
        return [i for i in ids if i][:MAX_CANDIDATES]


def lookup_meta_repository(locator: str, fetcher: RemoteFetcher) -> EvidenceSet:
    """Look a repository up in the registry.

    Args:
        locator: A repository URL or a registry id (``r3d100010134``).
        fetcher: Cached HTTP access.

    Returns:
        Facts ``listed_in_meta_repository``, ``meta_repository``,
        ``meta_repository_id``, ``quality_icon_count`` and ``quality_icons``.
        On a remote failure only a failure entry is recorded.
    """
    settings = fetcher.settings
    evidence = EvidenceBuilder(COLLECTOR, locator, settings.now())
    if REGISTRY not in settings.eligible_meta_repositories:
        logger.info("%s is not an eligible meta-repository; skipping lookup", REGISTRY)
        evidence.add("listed_in_meta_repository", False, ".")
        return evidence.build()

    lookup = _Lookup(fetcher)
    found: tuple[str, dict[str, Any]] | None = None
    try:
        if match := R3D_ID_RE.search(locator):
            found = lookup.record(match.group(0))
        else:
            host = _host(locator)
            for candidate in lookup.search(host):
                record = lookup.record(candidate)
                if record and any(
                    urls_match(locator, _text(u)) for u in _as_list(record[1].get("repositoryURL"))
                ):
                    found = record
                    break
    except NetworkUnavailable as exc:
        logger.warning("Registry lookup for %s failed: %s", locator, exc)
        evidence.fail(str(exc))
        return evidence.build()

    stamp = lookup.retrieved_at
    if found is None:
        logger.info("%s is not listed in %s", locator, REGISTRY)
        evidence.add("listed_in_meta_repository", False, locator, stamp)
        evidence.add("quality_icon_count", 0, locator, stamp)
        return evidence.build()

    url, repository = found
    icons = quality_icons(repository)
    evidence.add("listed_in_meta_repository", True, url, stamp)
    evidence.add("meta_repository", REGISTRY, url, stamp)
    evidence.add("meta_repository_id", _text(repository.get("re3data.orgIdentifier")) or None, url, stamp)
    evidence.add("quality_icon_count", len(icons), url, stamp)
    evidence.add("quality_icons", tuple(icons), url, stamp)
    logger.info("%s listed in %s with %d quality icons", locator, REGISTRY, len(icons))
    return evidence.build()
