"""Shared fixtures: fixed clock, seeded HTTP cache and throwaway repositories."""

from __future__ import annotations

import shutil
from pathlib import Path

import pytest
import requests

from qind.collectors.http import JSON, store_cached_response
from qind.config import Settings

from helpers import FIXTURES, FIXED_TIME, GOLDEN_REMOTE, REGISTRY_SEARCH_GITHUB, XML, write_git_dir, write_tree


@pytest.fixture(autouse=True)
def no_network(monkeypatch):
    """Any live HTTP request fails the test; remote data comes from the seeded cache."""

    def refuse(self, method, url, *args, **kwargs):
        raise AssertionError(f"unexpected network access: {method} {url}")

    monkeypatch.setattr(requests.Session, "request", refuse)


@pytest.fixture
def settings(tmp_path) -> Settings:
    return Settings(cache_dir=tmp_path / "cache", cache_ttl=0, rate_limit=0, timestamp=FIXED_TIME)


@pytest.fixture
def offline_settings(settings) -> Settings:
    return settings.model_copy(update={"offline": True})


@pytest.fixture
def seed(settings):
    """Store a canned response in the test cache: ``seed(url, body, status=..., accept=...)``."""

    def store(url: str, body, *, status: int = 200, accept: str = JSON) -> Path:
        return store_cached_response(
            settings.cache_dir, url, body, status=status, accept=accept, retrieved_at=FIXED_TIME
        )

    return store


@pytest.fixture
def make_tree(tmp_path):
    """Build a repository tree from ``{relative path: content}`` under a fresh directory."""
    counter = iter(range(1_000))

    def build(files: dict[str, str | bytes], **git) -> Path:
        root = tmp_path / f"tree-{next(counter)}"
        root.mkdir()
        write_tree(root, files)
        if git:
            write_git_dir(root, **git)
        return root

    return build


@pytest.fixture
def golden_repo(tmp_path) -> Path:
    root = tmp_path / "golden-tool"
    shutil.copytree(FIXTURES / "golden-repo", root)
    write_git_dir(root, remote=GOLDEN_REMOTE, tags=("v1.0.0", "v1.2.3"))
    return root


@pytest.fixture
def seeded_golden(seed):
    """The registry search for github.com answers with an empty list."""
    seed(REGISTRY_SEARCH_GITHUB, "<list></list>", accept=XML)
