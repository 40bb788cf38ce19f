"""On-disk memo of JSON payloads keyed by (operation, n, code version)."""

from __future__ import annotations

import json
import logging
import os
import re
import tempfile
from pathlib import Path
from typing import Any, Callable

from . import __version__

log = logging.getLogger(__name__)

CACHE_ENV = "SHPF_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "shpf"


class Cache:
    def __init__(self, root: Path | str | None = None, version: str = __version__, enabled: bool = True):
        self.root = Path(root) if root is not None else default_cache_dir()
        self.version = version
        self.enabled = enabled
        self.hits = 0
        self.misses = 0

    def _path(self, operation: str, n: int) -> Path:
        safe = re.sub(r"[^A-Za-z0-9_.-]+", "_", operation)
        return self.root / f"{safe}-n{n}-v{self.version}.json"

    def get(self, operation: str, n: int) -> Any | None:
        if not self.enabled:
            return None
        path = self._path(operation, n)
        if not path.exists():
            return None
        try:
            entry = json.loads(path.read_text())
            if entry["key"] != {"operation": operation, "n": n, "version": self.version}:
                raise ValueError("key mismatch")
            return entry["payload"]
        except (ValueError, KeyError, TypeError) as exc:
            log.warning("discarding corrupt cache entry %s (%s)", path, exc)
            path.unlink(missing_ok=True)
            return None

    def put(self, operation: str, n: int, payload: Any) -> None:
        if not self.enabled:
            return
        self.root.mkdir(parents=True, exist_ok=True)
        entry = {"key": {"operation": operation, "n": n, "version": self.version}, "payload": payload}
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(entry, fh)
            os.replace(tmp, self._path(operation, n))
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise

    def memo(self, operation: str, n: int, compute: Callable[[], Any]) -> Any:
        payload = self.get(operation, n)
        if payload is not None:
            self.hits += 1
            return payload
        self.misses += 1
        payload = compute()
        self.put(operation, n, payload)
        return payload
