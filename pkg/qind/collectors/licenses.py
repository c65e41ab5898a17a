"""SPDX license tables: OSI approval, tag parsing and full-text fingerprints."""

from __future__ import annotations

import re
from collections.abc import Iterable

# SPDX ids of OSI-approved licenses (current ids plus the deprecated
# GPL/LGPL/AGPL short forms still common in the wild).
OSI_APPROVED = frozenset(
    {
        "0BSD",
        "AAL",
        "AFL-3.0",
        "AGPL-3.0",
        "AGPL-3.0-only",
        "AGPL-3.0-or-later",
        "Apache-1.1",
        "Apache-2.0",
        "APSL-2.0",
        "Artistic-2.0",
        "BlueOak-1.0.0",
        "BSD-1-Clause",
        "BSD-2-Clause",
        "BSD-2-Clause-Patent",
        "BSD-3-Clause",
        "BSD-3-Clause-LBNL",
        "BSL-1.0",
        "CAL-1.0",
        "CDDL-1.0",
        "CECILL-2.1",
        "CERN-OHL-P-2.0",
        "CERN-OHL-S-2.0",
        "CERN-OHL-W-2.0",
        "ECL-2.0",
        "EFL-2.0",
        "EPL-1.0",
        "EPL-2.0",
        "EUPL-1.1",
        "EUPL-1.2",
        "GPL-2.0",
        "GPL-2.0-only",
        "GPL-2.0-or-later",
        "GPL-3.0",
        "GPL-3.0-only",
        "GPL-3.0-or-later",
        "HPND",
        "ISC",
        "LGPL-2.0-only",
        "LGPL-2.0-or-later",
        "LGPL-2.1",
        "LGPL-2.1-only",
        "LGPL-2.1-or-later",
        "LGPL-3.0",
        "LGPL-3.0-only",
        "LGPL-3.0-or-later",
        "LPPL-1.3c",
        "MIT",
        "MIT-0",
        "MPL-1.1",
        "MPL-2.0",
        "MPL-2.0-no-copyleft-exception",
        "MS-PL",
        "MS-RL",
        "MulanPSL-2.0",
        "NCSA",
        "OFL-1.1",
        "OSL-3.0",
        "PHP-3.01",
        "PostgreSQL",
        "Python-2.0",
        "QPL-1.0",
        "UCL-1.0",
        "Unicode-DFS-2016",
        "Unlicense",
        "UPL-1.0",
        "W3C",
        "Zlib",
        "ZPL-2.0",
        "ZPL-2.1",
    }
)

_OSI_FOLDED = {license_id.casefold(): license_id for license_id in OSI_APPROVED}

SPDX_TAG_RE = re.compile(
    r"(?:^|[^a-zA-Z0-9\-])SPDX-License-Identifier\s*:\s*([a-zA-Z0-9 :\(\)\.\+\-]+)",
    re.IGNORECASE,
)
_ID_RE = re.compile(r"^(?:LicenseRef-|DocumentRef-)?[A-Za-z0-9][A-Za-z0-9.\-+:]*$")
_OPERATORS = {"AND", "OR", "WITH"}

# Phrases that identify a license text, checked in order; first match wins.
# Titles are only looked for near the top, since GPL-3.0 mentions the AGPL.
_TITLE_SPAN = 600
_TITLES: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("AGPL-3.0-only", ("gnu affero general public license", "version 3")),
    ("LGPL-3.0-only", ("gnu lesser general public license", "version 3")),
    ("LGPL-2.1-only", ("gnu lesser general public license", "version 2.1")),
    ("GPL-3.0-only", ("gnu general public license", "version 3")),
    ("GPL-2.0-only", ("gnu general public license", "version 2")),
    ("Apache-2.0", ("apache license", "version 2.0")),
    ("MPL-2.0", ("mozilla public license", "2.0")),
    ("EUPL-1.2", ("european union public licence", "v. 1.2")),
    ("EPL-2.0", ("eclipse public license", "2.0")),
    ("BSL-1.0", ("boost software license", "version 1.0")),
    ("CC0-1.0", ("cc0 1.0 universal",)),
    ("CC-BY-4.0", ("attribution 4.0 international",)),
)
_BODIES: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("Unlicense", ("this is free and unencumbered software released into the public domain",)),
    (
        "BSD-3-Clause",
        ("redistribution and use in source and binary forms", "neither the name of"),
    ),
    ("BSD-2-Clause", ("redistribution and use in source and binary forms",)),
    ("ISC", ("permission to use, copy, modify, and/or distribute this software for any purpose",)),
    ("MIT", ("permission is hereby granted, free of charge, to any person obtaining a copy",)),
    ("Zlib", ("this software is provided 'as-is', without any express or implied",)),
)


def is_osi_approved(license_id: str) -> bool:
    return license_id.casefold() in _OSI_FOLDED


def any_osi_approved(license_ids: Iterable[str]) -> bool:
    return any(is_osi_approved(license_id) for license_id in license_ids)


def parse_expression(expression: str) -> list[str]:
    """Split an SPDX license expression into its license and exception ids."""
    tokens = expression.replace("(", " ").replace(")", " ").split()
    return [token for token in tokens if token.upper() not in _OPERATORS and _ID_RE.match(token)]


def find_spdx_tags(text: str) -> list[str]:
    """All license ids named in ``SPDX-License-Identifier`` tags of ``text``."""
    found: list[str] = []
    for match in SPDX_TAG_RE.finditer(text):
        for license_id in parse_expression(match.group(1)):
            if license_id not in found:
                found.append(license_id)
    return found


def detect_license_text(text: str) -> str | None:
    """Best-effort SPDX id for a full license text (LICENSE, COPYING)."""
    if tags := find_spdx_tags(text[:2048]):
        return tags[0]
    folded = " ".join(text.casefold().split())
    head = folded[:_TITLE_SPAN]
    for license_id, phrases in _TITLES:
        if all(phrase in head for phrase in phrases):
            return license_id
    for license_id, phrases in _BODIES:
        if all(phrase in folded for phrase in phrases):
            return license_id
    return None
