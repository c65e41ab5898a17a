"""
Persistent identifier collector.

Classifies an identifier (DOI, handle or plain URL), checks global resolution
through the handle proxy API and, for DOIs, harvests the DataCite record to
judge metadata completeness against the DataCite property groups.
"""

from __future__ import annotations

import logging
import re
from typing import Any, Literal
from urllib.parse import quote

from qind.collectors.http import CachedResponse, RemoteFetcher
from qind.errors import InputError, MalformedResponse, NetworkUnavailable
from qind.evidence import EvidenceBuilder, EvidenceSet

logger = logging.getLogger(__name__)

COLLECTOR = "pid"

IdentifierKind = Literal["url", "handle", "doi"]

DATACITE_ACCEPT = "application/vnd.api+json"

MANDATORY_PROPERTIES = ("doi", "creators", "titles", "publisher", "publicationYear", "resourceTypeGeneral")
RECOMMENDED_PROPERTIES = ("subjects", "contributors", "dates", "relatedIdentifiers", "descriptions", "geoLocations")
OPTIONAL_PROPERTIES = ("language", "identifiers", "sizes", "formats", "version", "rightsList", "fundingReferences")

_DOI_RE = re.compile(r"^(?:doi:|https?://(?:dx\.)?doi\.org/)?(10\.\d{4,9}/\S+)$", re.IGNORECASE)
_HANDLE_RE = re.compile(r"^(?:hdl:|https?://hdl\.handle\.net/)?(\d+(?:\.\d+)*/\S+)$", re.IGNORECASE)
_URL_RE = re.compile(r"^https?://[^\s/]+", re.IGNORECASE)
_LICENSE_URI = re.compile(r"creativecommons\.org|opensource\.org|spdx\.org|opendatacommons\.org|/licen[cs]es?/", re.I)
_LICENSE_TEXT = re.compile(r"licen[cs]e|\bCC[ -]?BY\b|\bCC0\b|public domain", re.IGNORECASE)


def classify_identifier(identifier: str) -> tuple[IdentifierKind, str]:
    """Return the identifier kind and its normalized form.

    Raises:
        InputError: Neither a DOI, a handle nor an http(s) URL.
    """
    text = identifier.strip()
    if match := _DOI_RE.match(text):
        return "doi", match.group(1)
    if match := _HANDLE_RE.match(text):
        return "handle", match.group(1)
    if _URL_RE.match(text):
        return "url", text
    raise InputError(f"not a DOI, handle or URL: {identifier!r}")


def _filled(value: Any) -> bool:
    if isinstance(value, dict):
        return any(_filled(v) for v in value.values())
    if isinstance(value, (list, tuple)):
        return any(_filled(v) for v in value)
    return value not in (None, "", 0)


def datacite_property_status(attributes: dict[str, Any]) -> dict[str, bool]:
    """Presence of every DataCite property the completeness checks look at."""
    status: dict[str, bool] = {}
    for name in MANDATORY_PROPERTIES + RECOMMENDED_PROPERTIES + OPTIONAL_PROPERTIES:
        if name == "resourceTypeGeneral":
            value = (attributes.get("types") or {}).get("resourceTypeGeneral")
        elif name == "identifiers":
            value = attributes.get("identifiers") or attributes.get("alternateIdentifiers")
        else:
            value = attributes.get(name)
        status[name] = _filled(value)
    return status


def _publisher_name(publisher: Any) -> str | None:
    if isinstance(publisher, dict):
        publisher = publisher.get("name")
    return publisher.strip() if isinstance(publisher, str) and publisher.strip() else None


def _rights_facts(rights_list: list[dict[str, Any]]) -> dict[str, bool]:
    entries = [entry for entry in rights_list if isinstance(entry, dict)]
    return {
        "access_info_human_readable": any(_filled(entry.get("rights")) for entry in entries),
        "access_info_machine_readable": any(
            _filled(entry.get("rightsUri")) or _filled(entry.get("rightsIdentifier")) for entry in entries
        ),
        "license_in_metadata": any(
            _filled(entry.get("rightsIdentifier"))
            or _LICENSE_URI.search(entry.get("rightsUri") or "")
            or _LICENSE_TEXT.search(entry.get("rights") or "")
            for entry in entries
        ),
    }


def _decode(fetcher: RemoteFetcher, response: CachedResponse) -> dict[str, Any]:
    try:
        return response.json_object()
    except ValueError as exc:
        raise fetcher.reject(response, f"undecodable JSON: {exc}") from exc


def _datacite_attributes(fetcher: RemoteFetcher, response: CachedResponse) -> dict[str, Any]:
    data = _decode(fetcher, response).get("data") or {}
    attributes = data.get("attributes") if isinstance(data, dict) else None
    if not isinstance(attributes, dict):
        raise fetcher.reject(response, "no DataCite attributes object")
    return attributes


def _check_resolution(evidence: EvidenceBuilder, fetcher: RemoteFetcher, kind: str, value: str) -> None:
    resolver = fetcher.settings.doi_resolver if kind == "doi" else fetcher.settings.handle_resolver
    url = f"{resolver}/api/handles/{quote(value, safe='/')}"
    try:
        response = fetcher.get(url)
    except NetworkUnavailable as exc:
        logger.warning("Cannot resolve %s: %s", value, exc)
        evidence.fail(str(exc))
        return
    if response.status == 404:
        evidence.add("resolves_globally", False, url, response.retrieved_at)
    elif response.ok:
        try:
            code = _decode(fetcher, response).get("responseCode")
        except MalformedResponse as exc:
            evidence.fail(str(exc))
            return
        evidence.add("resolves_globally", code == 1, url, response.retrieved_at)
    else:
        evidence.fail(f"{url}: HTTP {response.status}")


def _harvest_datacite(evidence: EvidenceBuilder, fetcher: RemoteFetcher, doi: str) -> None:
    url = f"{fetcher.settings.datacite_base}/dois/{quote(doi, safe='/')}"
    try:
        response = fetcher.get(url, accept=DATACITE_ACCEPT)
    except NetworkUnavailable as exc:
        logger.warning("Cannot fetch DataCite record for %s: %s", doi, exc)
        evidence.fail(str(exc))
        return
    stamp = response.retrieved_at
    if response.status == 404:
        # Not a DataCite DOI; other registration agencies are not consulted.
        logger.info("No DataCite record for %s", doi)
        evidence.add("datacite_record_found", False, url, stamp)
        return
    if not response.ok:
        evidence.fail(f"{url}: HTTP {response.status}")
        return

    try:
        attributes = _datacite_attributes(fetcher, response)
    except MalformedResponse as exc:
        evidence.fail(str(exc))
        return
    status = datacite_property_status(attributes)
    missing = tuple(name for name, present in status.items() if not present)
    evidence.add("datacite_record_found", True, url, stamp)
    evidence.add("metadata_record_present", True, url, stamp)
    evidence.add("datacite_mandatory_complete", all(status[p] for p in MANDATORY_PROPERTIES), url, stamp)
    evidence.add("datacite_recommended_complete", all(status[p] for p in RECOMMENDED_PROPERTIES), url, stamp)
    evidence.add("datacite_optional_count", sum(status[p] for p in OPTIONAL_PROPERTIES), url, stamp)
    evidence.add("datacite_missing_properties", missing, url, stamp)
    for fact_id, value in _rights_facts(attributes.get("rightsList") or []).items():
        evidence.add(fact_id, value, url, stamp)
    evidence.add("content_metadata_present", status["subjects"] or status["descriptions"], url, stamp)
    formats = tuple(str(f).strip() for f in attributes.get("formats") or [] if str(f).strip())
    evidence.add("data_formats", formats, url, stamp)
    evidence.add("hosting_repository", _publisher_name(attributes.get("publisher")), url, stamp)
    evidence.add("landing_url", attributes.get("url") or None, url, stamp)
    logger.info("DataCite %s: %d properties missing", doi, len(missing))


def fetch_pid_metadata(identifier: str, fetcher: RemoteFetcher) -> EvidenceSet:
    """Classify, resolve and harvest metadata for a PID or URL.

    Remote problems never raise: they are recorded as failures and the facts
    they would have established stay absent.

    Args:
        identifier: DOI (bare, ``doi:`` or doi.org URL), handle or URL.
        fetcher: Cached HTTP access; offline settings make it cache-only.

    Returns:
        The PID EvidenceSet.

    Raises:
        InputError: The identifier cannot be classified.
    """
    kind, value = classify_identifier(identifier)
    evidence = EvidenceBuilder(COLLECTOR, identifier, fetcher.settings.now())
    evidence.add("identifier", value, identifier)
    evidence.add("identifier_kind", kind, identifier)
    if kind == "url":
        return evidence.build()

    _check_resolution(evidence, fetcher, kind, value)
    if kind == "doi":
        _harvest_datacite(evidence, fetcher, value)
    return evidence.build()

