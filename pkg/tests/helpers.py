"""Constants and tree builders shared by the test modules."""

from __future__ import annotations

from datetime import datetime, timezone
from pathlib import Path

FIXTURES = Path(__file__).parent / "fixtures"
FIXED_TIME = datetime(2024, 5, 1, 12, tzinfo=timezone.utc)
GOLDEN_REMOTE = "https://github.com/example-org/golden-tool.git"
REGISTRY_SEARCH_GITHUB = "https://www.re3data.org/api/beta/repositories?query=github.com"
XML = "application/xml"


def write_tree(root: Path, files: dict[str, str | bytes]) -> Path:
    for relative, content in files.items():
        path = root / relative
        path.parent.mkdir(parents=True, exist_ok=True)
        if isinstance(content, bytes):
            path.write_bytes(content)
        else:
            path.write_text(content, encoding="utf-8")
    return root


def write_git_dir(root: Path, *, remote: str | None = None, tags: tuple[str, ...] = ()) -> None:
    """Minimal ``.git`` layout: HEAD, an optional origin remote and lightweight tags."""
    git = root / ".git"
    (git / "refs" / "heads").mkdir(parents=True, exist_ok=True)
    (git / "HEAD").write_text("ref: refs/heads/main\n", encoding="utf-8")
    config = "[core]\n\trepositoryformatversion = 0\n"
    if remote:
        config += f'[remote "origin"]\n\turl = {remote}\n\tfetch = +refs/heads/*:refs/remotes/origin/*\n'
    (git / "config").write_text(config, encoding="utf-8")
    tags_dir = git / "refs" / "tags"
    tags_dir.mkdir(parents=True, exist_ok=True)
    for index, tag in enumerate(tags):
        (tags_dir / tag).write_text(f"{index + 1:040x}\n", encoding="utf-8")
