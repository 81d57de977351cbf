"""On-disk JSON cache of computed numbers, keyed by a hash of the query."""

from __future__ import annotations

import hashlib
import json
import os

from .coloring import ColoringFormatError, parse_coloring
from .search import RamseyQuery, RamseyResult, validate_witness


def cache_dir() -> str:
    return os.environ.get("GALLAI_CACHE_DIR") or os.path.join(os.path.expanduser("~"), ".cache", "gallai-ramsey")


def query_hash(q: RamseyQuery) -> str:
    return hashlib.sha256(q.key().encode()).hexdigest()


def _path(q: RamseyQuery, root=None) -> str:
    return os.path.join(root or cache_dir(), query_hash(q)[:2], query_hash(q) + ".json")


def load(q: RamseyQuery, root=None) -> RamseyResult | None:
    """Cached result for ``q``, or None if absent or if its witness no longer checks out."""
    path = _path(q, root)
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, ValueError):
        return None
    if data.get("query") != q.to_json():
        return None
    witness = None
    if data.get("witness") is not None:
        try:
            witness = parse_coloring(data["witness"])
        except ColoringFormatError:
            return None
        if not validate_witness(witness, q):
            return None
    value = data.get("value")
    bracket = tuple(data["bracket"]) if data.get("bracket") is not None else None
    if value is not None and witness is not None and witness.n != value - 1:
        return None
    return RamseyResult(value, bracket, witness, data.get("stats", {}))


def store(q: RamseyQuery, res: RamseyResult, root=None) -> str | None:
    """Write a fully decided result; results with undecided steps are not cached."""
    if "undecided" in res.stats.get("decisions", {}).values():
        return None
    path = _path(q, root)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(res.to_json(q), fh, sort_keys=True, indent=1)
    os.replace(tmp, path)
    return path
