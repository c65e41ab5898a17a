"""Tests for SPDX tag parsing, license text detection and the REUSE check."""

from __future__ import annotations

import pytest

from qind.collectors.licenses import detect_license_text, find_spdx_tags, is_osi_approved, parse_expression
from qind.collectors.reuse import check_reuse_compliance

from helpers import FIXED_TIME

MIT_TAG = "# SPDX-License-Identifier: MIT\n"


def _reuse(root):
    return check_reuse_compliance(root, retrieved_at=FIXED_TIME)


@pytest.mark.parametrize(
    ("expression", "ids"),
    [
        ("MIT", ["MIT"]),
        ("(MIT OR Apache-2.0) AND BSD-3-Clause", ["MIT", "Apache-2.0", "BSD-3-Clause"]),
        ("GPL-2.0-or-later WITH Classpath-exception-2.0", ["GPL-2.0-or-later", "Classpath-exception-2.0"]),
        ("LicenseRef-Proprietary", ["LicenseRef-Proprietary"]),
    ],
)
def test_parse_expression(expression, ids):
    assert parse_expression(expression) == ids


def test_find_spdx_tags_deduplicates_in_order():
    text = "// SPDX-License-Identifier: Apache-2.0\n/* SPDX-License-Identifier: MIT OR Apache-2.0 */\n"
    assert find_spdx_tags(text) == ["Apache-2.0", "MIT"]


def test_tags_need_a_word_boundary():
    assert find_spdx_tags("XSPDX-License-Identifier: MIT") == []


@pytest.mark.parametrize(("license_id", "approved"), [("MIT", True), ("apache-2.0", True), ("CC-BY-4.0", False), ("LicenseRef-X", False)])
def test_osi_approval(license_id, approved):
    assert is_osi_approved(license_id) is approved


@pytest.mark.parametrize(
    ("text", "license_id"),
    [
        ("Permission is hereby granted, free of charge, to any person obtaining a copy of this software", "MIT"),
        ("                 GNU AFFERO GENERAL PUBLIC LICENSE\n                    Version 3, 19 November 2007", "AGPL-3.0-only"),
        ("This is free and unencumbered software released into the public domain.", "Unlicense"),
        ("SPDX-License-Identifier: EUPL-1.2\n", "EUPL-1.2"),
        ("All rights reserved.", None),
    ],
)
def test_detect_license_text(text, license_id):
    assert detect_license_text(text) == license_id


def test_compliant_tree(make_tree):
    root = make_tree(
        {
            "LICENSES/MIT.txt": "MIT License\n",
            "src/app.py": MIT_TAG + "print('hi')\n",
            "logo.png": b"\x89PNG\r\n\x1a\n\x00\x00",
            "logo.png.license": "SPDX-License-Identifier: MIT\n",
        }
    )
    evidence = _reuse(root)
    assert evidence.value("reuse_compliant") is True
    assert evidence.value("reuse_offending_paths") == ()
    assert evidence.value("spdx_ids") == ("MIT",)
    assert evidence.value("osi_approved") is True
    assert evidence.facts["reuse_compliant"].provenance.source == "LICENSES"


def test_untagged_file_and_missing_license_text(make_tree):
    root = make_tree({"src/app.py": "# SPDX-License-Identifier: GPL-3.0-or-later\n", "README.md": "# Tool\n"})
    evidence = _reuse(root)
    assert evidence.value("reuse_compliant") is False
    assert evidence.value("reuse_offending_paths") == ("README.md",)
    assert evidence.value("reuse_missing_licenses") == ("GPL-3.0-or-later",)


def test_binary_without_sidecar_offends(make_tree):
    root = make_tree({"LICENSES/MIT.txt": "MIT\n", "data.bin": b"\x00\x01\x02"})
    assert _reuse(root).value("reuse_offending_paths") == ("data.bin",)


def test_reuse_toml_annotations(make_tree):
    root = make_tree(
        {
            "LICENSES/CC0-1.0.txt": "CC0\n",
            "LICENSES/MIT.txt": "MIT\n",
            "REUSE.toml": (
                "version = 1\n\n"
                "[[annotations]]\n"
                'path = ["data/**"]\n'
                'SPDX-License-Identifier = "CC0-1.0"\n'
            ),
            "data/raw/a.csv": "x,y\n1,2\n",
            "src/main.py": MIT_TAG,
        }
    )
    evidence = _reuse(root)
    assert evidence.value("reuse_compliant") is True
    assert evidence.value("spdx_ids") == ("CC0-1.0", "MIT")


@pytest.mark.parametrize(
    "content",
    [
        b"\xff\xfeversion = 1\n",
        b"version = 1\n[[annotations\n",
        b"version = 1\nannotations = [\"data/**\"]\n",
    ],
)
def test_unreadable_reuse_toml_offends(make_tree, content):
    root = make_tree({"LICENSES/MIT.txt": "MIT\n", "REUSE.toml": content, "a.py": MIT_TAG})
    evidence = _reuse(root)
    assert evidence.value("reuse_compliant") is False
    assert "REUSE.toml" in evidence.value("reuse_offending_paths")


def test_dep5_paragraphs(make_tree):
    root = make_tree(
        {
            "LICENSES/CC-BY-4.0.txt": "CC BY\n",
            ".reuse/dep5": (
                "Format: https://www.debian.org/doc/packaging-manuals/copyright-format/1.0/\n\n"
                "Files: docs/*\n"
                "Copyright: 2024 Example\n"
                "License: CC-BY-4.0\n"
            ),
            "docs/guide.md": "# Guide\n",
        }
    )
    evidence = _reuse(root)
    assert evidence.value("reuse_compliant") is True
    assert evidence.value("osi_approved") is False


def test_root_license_file_is_not_checked_itself(make_tree):
    root = make_tree({"LICENSE": "MIT License\n", "LICENSES/MIT.txt": "MIT\n", "a.py": MIT_TAG})
    assert _reuse(root).value("reuse_compliant") is True


def test_empty_tree_is_vacuously_compliant(make_tree):
    assert _reuse(make_tree({})).value("reuse_compliant") is True


def test_golden_tree_is_compliant(golden_repo):
    evidence = _reuse(golden_repo)
    assert evidence.value("reuse_compliant") is True
    assert evidence.value("spdx_ids") == ("MIT",)
