"""On-disk cache of oracle results, keyed by canonical form and field.

Enabled by setting ``BEI_CACHE_DIR``; one JSON file per key, written
atomically through a temporary file and ``os.replace``.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from dataclasses import asdict
from pathlib import Path
from typing import Optional

from .graph import Graph
from .oracle import DEFAULT_MAX_N, OracleGuardError, OracleResult, hochster_depth_dim

log = logging.getLogger(__name__)

ENV_VAR = "BEI_CACHE_DIR"
_STORED = ("depth", "dim", "pd", "cm", "num_vars", "field")


def cache_dir() -> Optional[Path]:
    value = os.environ.get(ENV_VAR)
    return Path(value) if value else None


def cache_key(g: Graph, field: str) -> str:
    from .enumeration import canonical_id

    return f"{canonical_id(g)}|{field}"


def _path(directory: Path, key: str) -> Path:
    return directory / (hashlib.sha256(key.encode()).hexdigest()[:32] + ".json")


def load(key: str, directory: Optional[Path] = None) -> Optional[dict]:
    directory = directory or cache_dir()
    if directory is None:
        return None
    path = _path(directory, key)
    if not path.exists():
        return None
    try:
        entry = json.loads(path.read_text())
        if entry.get("key") != key or any(k not in entry["value"] for k in _STORED):
            raise ValueError("entry does not match its key")
        return entry["value"]
    except (OSError, ValueError, TypeError, KeyError) as exc:
        log.warning("ignoring unreadable cache entry %s (%s); recomputing", path, exc)
        return None


def store(key: str, value: dict, directory: Optional[Path] = None) -> None:
    directory = directory or cache_dir()
    if directory is None:
        return
    directory.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump({"key": key, "value": value}, fh, sort_keys=True)
        os.replace(tmp, _path(directory, key))
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cached_oracle(g: Graph, field: str = "gf2", max_n: int = DEFAULT_MAX_N,
                  force: bool = False) -> OracleResult:
    """``hochster_depth_dim`` behind the cache. Hits carry no witness (witness fields are -1)."""
    if g.n > max_n and not force:
        raise OracleGuardError(f"oracle is guarded at n <= {max_n} (got n={g.n}); use force")
    directory = cache_dir()
    if directory is None:
        return hochster_depth_dim(g, field=field, max_n=max_n, force=force)
    key = cache_key(g, field)
    hit = load(key, directory)
    if hit is not None:
        return OracleResult(witness_sigma=-1, witness_j=-1, sigmas_examined=0,
                            **{k: hit[k] for k in _STORED})
    result = hochster_depth_dim(g, field=field, max_n=max_n, force=force)
    store(key, {k: v for k, v in asdict(result).items() if k in _STORED}, directory)
    return result
