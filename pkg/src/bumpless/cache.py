"""Content-addressed disk cache for reduced Groebner bases.

Entries are keyed by a hash of the ring (variable names plus slot
layout) and the canonical text of the generators, so a hit can never
be stale: different input, different key.  Writes go through a
temporary file in the cache directory and an atomic rename, which
keeps concurrent writers from tearing each other's entries.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path


def cache_root() -> Path:
    override = os.environ.get("BUMPLESS_CACHE_DIR")
    if override:
        return Path(override)
    base = os.environ.get("XDG_CACHE_HOME")
    if base:
        return Path(base) / "bumpless"
    return Path.home() / ".cache" / "bumpless"


def _entry_path(names, layout, gen_texts) -> Path:
    payload = json.dumps(
        {"names": list(names), "layout": list(layout), "gens": list(gen_texts)},
        separators=(",", ":"),
    )
    digest = hashlib.sha256(payload.encode()).hexdigest()
    return cache_root() / f"gb-{digest}.json"


def load_basis(names, layout, gen_texts) -> list[str] | None:
    path = _entry_path(names, layout, gen_texts)
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, ValueError):
        return None
    if not isinstance(data, list) or not all(isinstance(s, str) for s in data):
        return None
    return data


def store_basis(names, layout, gen_texts, basis_texts) -> None:
    path = _entry_path(names, layout, gen_texts)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(list(basis_texts), fh)
        os.replace(tmp, path)
    except OSError:
        pass
