"""
Runtime configuration.

Settings are read from ``QIND_*`` environment variables, optionally seeded from
a ``.env`` file in the working directory. Command-line options override
individual fields through ``Settings.model_copy(update=...)``.
"""

from __future__ import annotations

import os
from datetime import datetime, timezone
from pathlib import Path

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

from qind.errors import InputError

DEFAULT_DATACITE_BASE = "https://api.datacite.org"
DEFAULT_REGISTRY_BASE = "https://www.re3data.org"
DEFAULT_DOI_RESOLVER = "https://doi.org"
DEFAULT_HANDLE_RESOLVER = "https://hdl.handle.net"

_TRUTHY = {"1", "true", "yes", "on"}


class Settings(BaseModel):
    """Everything the collectors and the CLI need to know about their environment."""

    model_config = ConfigDict(frozen=True)

    cache_dir: Path = Field(default_factory=lambda: Path.home() / ".cache" / "qind")
    offline: bool = False
    datacite_base: str = DEFAULT_DATACITE_BASE
    registry_base: str = DEFAULT_REGISTRY_BASE
    doi_resolver: str = DEFAULT_DOI_RESOLVER
    handle_resolver: str = DEFAULT_HANDLE_RESOLVER
    cache_ttl: int = 7 * 24 * 3600  # seconds, 0 = never expire
    rate_limit: float = 1.0  # seconds between live requests
    timeout: float = 20.0
    user_agent: str = "qind/1.0 (research output quality indicator)"
    timestamp: datetime | None = None

    # Eligibility and cutoffs used by the built-in checks.
    eligible_meta_repositories: tuple[str, ...] = ("re3data",)
    icon_cutoffs: tuple[int, int, int] = (1, 3, 5)
    semver_min_fraction: float = 0.8

    @classmethod
    def from_env(cls, env_file: str | os.PathLike | None = None) -> Settings:
        """Build settings from the process environment.

        Args:
            env_file: Optional explicit ``.env`` path; by default ``.env`` in the
                working directory is loaded if present.

        Returns:
            A frozen Settings instance.

        Raises:
            InputError: If a variable holds an unparsable value.
        """
        load_dotenv(env_file or os.path.join(os.getcwd(), ".env"))

        values: dict[str, object] = {}
        if cache_dir := os.getenv("QIND_CACHE_DIR"):
            values["cache_dir"] = Path(cache_dir).expanduser()
        if offline := os.getenv("QIND_OFFLINE"):
            values["offline"] = offline.strip().lower() in _TRUTHY
        for field, variable in (
            ("datacite_base", "QIND_DATACITE_BASE"),
            ("registry_base", "QIND_REGISTRY_BASE"),
            ("doi_resolver", "QIND_DOI_RESOLVER"),
            ("handle_resolver", "QIND_HANDLE_RESOLVER"),
        ):
            if base := os.getenv(variable):
                values[field] = base.rstrip("/")
        try:
            if ttl := os.getenv("QIND_CACHE_TTL"):
                values["cache_ttl"] = int(ttl)
            if rate := os.getenv("QIND_RATE_LIMIT"):
                values["rate_limit"] = float(rate)
            if timeout := os.getenv("QIND_TIMEOUT"):
                values["timeout"] = float(timeout)
            if stamp := os.getenv("QIND_TIMESTAMP"):
                values["timestamp"] = parse_timestamp(stamp)
        except ValueError as exc:
            raise InputError(f"bad environment setting: {exc}") from exc
        return cls(**values)

    def now(self) -> datetime:
        """The assessment clock: the fixed timestamp if configured, else UTC now."""
        if self.timestamp is not None:
            return self.timestamp
        return datetime.now(timezone.utc).replace(microsecond=0)


def parse_timestamp(text: str) -> datetime:
    """Parse an ISO-8601 timestamp; naive values are taken as UTC."""
    stamp = datetime.fromisoformat(text.strip().replace("Z", "+00:00"))
    if stamp.tzinfo is None:
        stamp = stamp.replace(tzinfo=timezone.utc)
    return stamp
