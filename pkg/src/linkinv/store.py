"""Append-only JSON-lines cache of computed invariants.

One line per entry: ``{"key", "version", "time", "value"}``.  Writers take
an exclusive ``flock`` on the file; readers take a shared one.  The newest
line for a key wins.  Lines that fail to parse are skipped with a warning.
"""

from __future__ import annotations

import fcntl
import hashlib
import json
import logging
import os
import random
import time
from pathlib import Path

__all__ = ["ENGINE_VERSION", "CACHE_ENV", "Store", "cache_key", "default_path"]

ENGINE_VERSION = "linkinv-1"
CACHE_ENV = "LINKINV_CACHE"

log = logging.getLogger(__name__)


def default_path() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "linkinv" / "cache.jsonl"


def cache_key(code: str, invariant: str, params: dict | None = None) -> str:
    blob = json.dumps([code, invariant, params or {}], sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class Store:
    def __init__(self, path: str | os.PathLike | None = None, version: str = ENGINE_VERSION):
        self.path = Path(path) if path is not None else default_path()
        self.version = version

    def _read(self) -> dict[str, dict]:
        if not self.path.exists():
            return {}
        out = {}
        with open(self.path, "r", encoding="utf-8") as fh:
            fcntl.flock(fh, fcntl.LOCK_SH)
            try:
                for n, line in enumerate(fh, 1):
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        entry = json.loads(line)
                        key = entry["key"]
                    except (ValueError, KeyError, TypeError):
                        log.warning("skipping corrupt cache line %d in %s", n, self.path)
                        continue
                    out[key] = entry
            finally:
                fcntl.flock(fh, fcntl.LOCK_UN)
        return out

    def get(self, key: str):
        """Cached value for ``key``, or None (also on version mismatch)."""
        entry = self._read().get(key)
        if entry is None or entry.get("version") != self.version:
            return None
        return entry.get("value")

    def put(self, key: str, value) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        line = json.dumps(
            {"key": key, "version": self.version, "time": time.time(), "value": value},
            sort_keys=True,
        )
        with open(self.path, "a", encoding="utf-8") as fh:
            fcntl.flock(fh, fcntl.LOCK_EX)
            try:
                fh.write(line + "\n")
                fh.flush()
            finally:
                fcntl.flock(fh, fcntl.LOCK_UN)

    def fetch(self, key: str, compute, spot_check: float = 0.0):
        """Cached value or ``compute()`` (stored).  With probability
        ``spot_check`` a hit is recomputed and must agree."""
        hit = self.get(key)
        if hit is not None:
            if spot_check and random.random() < spot_check:
                fresh = compute()
                if fresh != hit:
                    raise RuntimeError(f"cache entry {key[:12]} disagrees with recomputation")
            return hit
        value = compute()
        self.put(key, value)
        return value

    def stats(self) -> dict:
        entries = self._read()
        current = sum(1 for e in entries.values() if e.get("version") == self.version)
        size = self.path.stat().st_size if self.path.exists() else 0
        return {"path": str(self.path), "keys": len(entries), "current": current, "bytes": size}

    def clear(self) -> None:
        if self.path.exists():
            self.path.unlink()
