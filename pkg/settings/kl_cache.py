"""
KL Table Cache Module

JSON files on disk holding one Kazhdan-Lusztig table per rank, so the
larger tables are computed once. Every file carries a format version;
anything missing, unreadable, stale or inconsistent is reported as a miss
and the caller recomputes.
"""

import json
import logging
import os
from contextlib import contextmanager
from typing import Any, Dict, Optional

from settings.settings import get_cache_dir

logger = logging.getLogger(__name__)

# Cache format version for migrations
KL_CACHE_VERSION = 1


def get_cache_path(m: int, cache_dir: Optional[str] = None) -> str:
    """Get the cache file path for rank m, ensuring the directory exists"""
    directory = cache_dir or get_cache_dir()
    os.makedirs(directory, exist_ok=True)
    return os.path.join(directory, f"kl_S{m}.json")


@contextmanager
def atomic_write(path: str):
    """Context manager yielding a temp file handle that replaces path on success"""
    tmp_path = f"{path}.tmp"
    handle = open(tmp_path, "w", encoding="utf-8")
    try:
        yield handle
        handle.close()
        os.replace(tmp_path, path)
    except Exception:
        handle.close()
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise


def load_kl_payload(m: int, cache_dir: Optional[str] = None) -> Optional[Dict[str, Any]]:
    """Return the cached payload for rank m, or None on any kind of miss"""
    path = get_cache_path(m, cache_dir)
    if not os.path.exists(path):
        logger.info(f"KL cache miss for S_{m}: {path} not found")
        return None
    try:
        with open(path, "r", encoding="utf-8") as f:
            payload = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        logger.warning(f"KL cache for S_{m} unreadable ({e}); recomputing")
        return None
    if not isinstance(payload, dict):
        logger.warning(f"KL cache for S_{m} is not a JSON object; recomputing")
        return None
    if payload.get("format_version") != KL_CACHE_VERSION:
        logger.warning(
            f"KL cache for S_{m} has format version {payload.get('format_version')!r}, "
            f"expected {KL_CACHE_VERSION}; recomputing"
        )
        return None
    if payload.get("m") != m:
        logger.warning(f"KL cache file for S_{m} holds rank {payload.get('m')!r}; recomputing")
        return None
    logger.info(f"KL cache hit for S_{m}")
    return payload


def save_kl_payload(m: int, payload: Dict[str, Any], cache_dir: Optional[str] = None) -> bool:
    """Write a payload for rank m; failures are logged and reported, never raised"""
    path = get_cache_path(m, cache_dir)
    body = dict(payload)
    body["format_version"] = KL_CACHE_VERSION
    try:
        with atomic_write(path) as f:
            json.dump(body, f, sort_keys=True, separators=(",", ":"))
        logger.info(f"KL table for S_{m} cached at {path}")
        return True
    except (OSError, TypeError) as e:
        logger.warning(f"Could not cache KL table for S_{m}: {e}")
        return False


def clear_cache(cache_dir: Optional[str] = None) -> int:
    """Delete every cached table; returns the number of files removed"""
    directory = cache_dir or get_cache_dir()
    if not os.path.isdir(directory):
        return 0
    removed = 0
    for name in os.listdir(directory):
        if name.startswith("kl_S") and name.endswith(".json"):
            os.remove(os.path.join(directory, name))
            removed += 1
    return removed
