"""
Cached, rate-limited HTTP access for the remote collectors.

Every response is stored as one JSON file in the cache directory, named by the
SHA-256 of ``METHOD URL ACCEPT``. Offline mode serves cache hits only; a miss
raises NetworkUnavailable. Test suites seed the cache with
``store_cached_response`` and never touch the network.
"""

from __future__ import annotations

import hashlib
import json
import logging
import threading
import time
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

import requests
import tenacity
from pydantic import ValidationError

from qind.base import FrozenModel
from qind.config import Settings
from qind.errors import MalformedResponse, NetworkUnavailable
from qind.files import write_text_atomic

logger = logging.getLogger(__name__)

JSON = "application/json"

_politeness_lock = threading.Lock()
_last_request = 0.0


class CachedResponse(FrozenModel):
    url: str
    method: str = "GET"
    accept: str = JSON
    status: int
    body: str
    final_url: str | None = None
    retrieved_at: datetime

    @property
    def ok(self) -> bool:
        return 200 <= self.status < 300

    def json(self) -> Any:
        return json.loads(self.body)

    def json_object(self) -> dict[str, Any]:
        """The body as a JSON object.

        Raises:
            ValueError: The body is not JSON, or not a JSON object.
        """
        data = json.loads(self.body)
        if not isinstance(data, dict):
            raise ValueError(f"expected a JSON object, got {type(data).__name__}")
        return data


class _RetryableStatus(Exception):
    def __init__(self, status: int):
        super().__init__(f"HTTP {status}")
        self.status = status


def cache_key(url: str, method: str = "GET", accept: str = JSON) -> str:
    return hashlib.sha256(f"{method.upper()} {url} {accept}".encode()).hexdigest()


def cache_path(cache_dir: Path, url: str, method: str = "GET", accept: str = JSON) -> Path:
    return Path(cache_dir) / f"{cache_key(url, method, accept)}.json"


def store_cached_response(
    cache_dir: str | Path,
    url: str,
    body: str | dict | list,
    *,
    status: int = 200,
    method: str = "GET",
    accept: str = JSON,
    final_url: str | None = None,
    retrieved_at: datetime | None = None,
) -> Path:
    """Write a response into the cache in the on-disk format the fetcher reads.

    Args:
        cache_dir: Cache directory.
        url: Requested URL.
        body: Response text; dicts and lists are JSON-encoded.
        status: HTTP status code.
        method: HTTP method.
        accept: The Accept header the request is made with.
        final_url: URL after redirects.
        retrieved_at: Retrieval time, now by default.

    Returns:
        Path of the cache file.
    """
    if not isinstance(body, str):
        body = json.dumps(body, sort_keys=True)
    entry = CachedResponse(
        url=url,
        method=method.upper(),
        accept=accept,
        status=status,
        body=body,
        final_url=final_url,
        retrieved_at=retrieved_at or datetime.now(timezone.utc).replace(microsecond=0),
    )
    return write_text_atomic(cache_path(Path(cache_dir), url, method, accept), entry.model_dump_json(indent=2) + "\n")


class RemoteFetcher:
    """GET with an on-disk cache, a politeness interval and retries on 429/5xx.

    Args:
        settings: Cache location, TTL, offline flag, timeout and rate limit.
        session: Optional requests session to reuse.
    """

    def __init__(self, settings: Settings, session: requests.Session | None = None):
        self.settings = settings
        self.session = session or requests.Session()
        self.session.headers.update({"User-Agent": settings.user_agent})

    def get(self, url: str, accept: str = JSON) -> CachedResponse:
        """Fetch ``url``, from cache when possible.

        Non-2xx responses other than 429/5xx are returned (and cached) as
        they are; callers decide what a 404 means.

        Raises:
            NetworkUnavailable: Offline cache miss, transport failure or
                retries exhausted.
        """
        path = cache_path(self.settings.cache_dir, url, "GET", accept)
        cached = self._read_cache(path)
        if cached is not None and (self.settings.offline or self._fresh(cached)):
            logger.debug("Cache hit for %s", url)
            return cached
        if self.settings.offline:
            raise NetworkUnavailable(f"offline and no cached response for {url}")

        try:
            response = self._send(url, accept)
        except _RetryableStatus as exc:
            raise NetworkUnavailable(f"{url}: {exc} after retries") from exc
        except requests.RequestException as exc:
            raise NetworkUnavailable(f"{url}: {exc}") from exc

        logger.info("GET %s -> %d", url, response.status_code)
        store_cached_response(
            self.settings.cache_dir,
            url,
            response.text,
            status=response.status_code,
            accept=accept,
            final_url=response.url if response.url != url else None,
        )
        cached = self._read_cache(path)
        if cached is None:
            raise NetworkUnavailable(f"{url}: cache entry could not be written")
        return cached

    def reject(self, response: CachedResponse, reason: str) -> MalformedResponse:
        """Drop an undecodable response from the cache and describe it.

        The caller raises the returned error, so the next run fetches again.
        """
        path = cache_path(self.settings.cache_dir, response.url, response.method, response.accept)
        path.unlink(missing_ok=True)
        logger.warning("Discarded undecodable response from %s: %s", response.url, reason)
        return MalformedResponse(f"{response.url}: {reason}")

    def _fresh(self, cached: CachedResponse) -> bool:
        if self.settings.cache_ttl == 0:
            return True
        age = datetime.now(timezone.utc) - cached.retrieved_at
        return age.total_seconds() < self.settings.cache_ttl

    @staticmethod
    def _read_cache(path: Path) -> CachedResponse | None:
        try:
            return CachedResponse.model_validate_json(path.read_text(encoding="utf-8"))
        except FileNotFoundError:
            return None
        except (OSError, ValidationError) as exc:
            logger.warning("Ignoring unreadable cache entry %s: %s", path, exc)
            return None

    def _wait_politely(self) -> None:
        global _last_request
        with _politeness_lock:
            delay = self.settings.rate_limit - (time.monotonic() - _last_request)
            if delay > 0:
                time.sleep(delay)
            _last_request = time.monotonic()

    @tenacity.retry(
        retry=tenacity.retry_if_exception_type(_RetryableStatus),
        wait=tenacity.wait_exponential(multiplier=1, min=2, max=30),
        stop=tenacity.stop_after_attempt(4),
        reraise=True,
    )
    def _send(self, url: str, accept: str) -> requests.Response:
        self._wait_politely()
        response = self.session.get(url, headers={"Accept": accept}, timeout=self.settings.timeout)
        if response.status_code == 429 or response.status_code >= 500:
            raise _RetryableStatus(response.status_code)
        return response
