"""On-disk store of computed results, one JSON record per line.

Each line carries a sha256 of its own canonical payload; a line that fails
to parse or to match its checksum is treated as absent and is dropped on the
next write.  Writes go through a temporary file and ``os.replace`` so
concurrent processes never observe a half-written store.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Any

log = logging.getLogger(__name__)

CACHE_ENV = "QSCHUBERT_CACHE_DIR"
STORE_NAME = "constants.ndjson"


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "qschubert"


def canonical(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def make_key(flag: str, operation: str, inputs: Any) -> str:
    return canonical({"flag": flag, "op": operation, "inputs": inputs})


def _checksum(key: str, record: Any) -> str:
    return hashlib.sha256(canonical({"key": key, "record": record}).encode()).hexdigest()


class ConstantCache:
    """Keyed store ``key -> record``; every failure degrades to a miss."""

    def __init__(self, directory: Path | str | None = None, enabled: bool = True):
        self.directory = Path(directory) if directory is not None else default_cache_dir()
        self.enabled = enabled

    @property
    def path(self) -> Path:
        return self.directory / STORE_NAME

    def _load(self) -> dict[str, Any]:
        out: dict[str, Any] = {}
        try:
            with open(self.path, encoding="utf-8") as fh:
                lines = fh.readlines()
        except FileNotFoundError:
            return out
        except OSError as exc:
            log.warning("cache unreadable (%s); recomputing", exc)
            return out
        for line in lines:
            try:
                entry = json.loads(line)
                key, record, digest = entry["key"], entry["record"], entry["sha256"]
            except (ValueError, KeyError, TypeError):
                log.warning("dropping malformed cache line")
                continue
            if digest != _checksum(key, record):
                log.warning("dropping cache record with bad checksum")
                continue
            out[key] = record
        return out

    def _store(self, entries: dict[str, Any]) -> None:
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".constants.", suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                for key in sorted(entries):
                    rec = entries[key]
                    # record keeps its key order so a hit prints exactly like a fresh result
                    line = {"key": key, "record": rec, "sha256": _checksum(key, rec)}
                    fh.write(json.dumps(line, separators=(",", ":")) + "\n")
            os.replace(tmp, self.path)
        except OSError as exc:
            log.warning("could not write cache (%s)", exc)

    def get(self, key: str) -> Any | None:
        if not self.enabled:
            return None
        return self._load().get(key)

    def put(self, key: str, record: Any) -> None:
        if not self.enabled:
            return
        entries = self._load()
        entries[key] = record
        self._store(entries)

    def invalidate(self, key: str | None = None) -> None:
        """Drop one key, or the whole store when ``key`` is None."""
        if not self.enabled:
            return
        entries = {} if key is None else self._load()
        entries.pop(key, None)
        self._store(entries)
