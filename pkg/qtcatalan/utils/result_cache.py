"""
Result Cache - JSON files on disk, one per (verb, parameters)
Entries carry the SHA-256 of their canonical payload and are re-verified on read
"""

import hashlib
import logging
import os
import tempfile
import threading
from pathlib import Path
from typing import Any, Callable, Dict, Optional

from pydantic import ValidationError

from qtcatalan.config.settings import settings
from qtcatalan.schemas import CacheEntry, canonical_json, content_hash

logger = logging.getLogger(__name__)


def canonical_params(params: Dict[str, Any]) -> str:
    return canonical_json(params)


class ResultCache:
    """
    Directory of cached results.

    Layout: <root>/<verb>/<sha256(params)[:16]>.json. Writes go through a
    temporary file and os.replace under a lock, so readers never see a
    partial file.
    """

    def __init__(self, root: Optional[Path] = None):
        self.root = Path(root or settings.CACHE_DIR)
        self.root.mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()

    def path_for(self, verb: str, params: Dict[str, Any]) -> Path:
        digest = hashlib.sha256(canonical_params(params).encode('utf-8')).hexdigest()[:16]
        return self.root / verb / f"{digest}.json"

    def get(self, verb: str, params: Dict[str, Any]) -> Optional[Any]:
        """Cached payload, or None when absent, unreadable or corrupted"""
        path = self.path_for(verb, params)
        if not path.exists():
            return None
        try:
            entry = CacheEntry.model_validate_json(path.read_text(encoding='utf-8'))
        except (OSError, ValidationError, ValueError) as e:
            logger.error(f"Unreadable cache file {path}, recomputing: {e}")
            return None
        if entry.verb != verb or entry.params != canonical_params(params):
            logger.error(f"Cache file {path} belongs to {entry.verb} {entry.params}, recomputing")
            return None
        if not entry.is_intact():
            logger.error(f"Hash mismatch in cache file {path}, recomputing")
            return None
        logger.debug(f"Cache hit: {verb} {entry.params}")
        return entry.payload

    def put(self, verb: str, params: Dict[str, Any], payload: Any) -> Path:
        path = self.path_for(verb, params)
        entry = CacheEntry(verb=verb, params=canonical_params(params), sha256=content_hash(payload), payload=payload)
        text = canonical_json(entry.model_dump())
        with self._lock:
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=path.parent, suffix='.tmp')
            try:
                with os.fdopen(fd, 'w', encoding='utf-8') as f:
                    f.write(text)
                os.replace(tmp, path)
            except OSError:
                Path(tmp).unlink(missing_ok=True)
                raise
        logger.debug(f"Cached {verb} at {path}")
        return path

    def get_or_compute(self, verb: str, params: Dict[str, Any], compute: Callable[[], Any]) -> Any:
        payload = self.get(verb, params)
        if payload is None:
            payload = compute()
            self.put(verb, params, payload)
        return payload
