"""File formats.

Weights and spaces are JSON or TOML mappings
``{dim, head, tail_exponent, normalized[, p]}``; sequences are JSON
``{"dim": d, "entries": [[k_1, ..., k_d, value], ...]}``.  Floats are written
with ``repr`` (shortest round-tripping form), so re-reading a file yields
bit-identical numbers.  Infinities, which JSON lacks, are written as the
strings ``"inf"`` / ``"-inf"``.
"""

from __future__ import annotations

import hashlib
import json
import math
import sys
from pathlib import Path

from .norms import SparseSequence
from .weights import SpaceParams, Weight

if sys.version_info >= (3, 11):
    import tomllib
else:  # pragma: no cover
    import tomli as tomllib


def load_mapping(path: str | Path) -> dict:
    path = Path(path)
    if path.suffix.lower() == ".toml":
        with path.open("rb") as fh:
            return tomllib.load(fh)
    with path.open("r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError(f"{path}: expected a JSON object")
    return data


def load_space(path: str | Path) -> SpaceParams:
    return SpaceParams.from_dict(load_mapping(path))


def load_weight(path: str | Path) -> Weight:
    return Weight.from_dict(load_mapping(path))


def load_sequence(path: str | Path) -> SparseSequence:
    return SparseSequence.from_dict(load_mapping(path))


def jsonable(obj):
    """Recursively replace non-finite floats and tuples for JSON output."""
    if isinstance(obj, float):
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        if math.isnan(obj):
            return "nan"
        return obj
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


def dumps(obj) -> str:
    return json.dumps(jsonable(obj), indent=2, allow_nan=False)


def write_json(path: str | Path, obj) -> None:
    Path(path).write_text(dumps(obj) + "\n", encoding="utf-8")


def digest(paths: dict[str, str | Path]) -> str:
    """SHA-256 over the named input files, in sorted role order."""
    h = hashlib.sha256()
    for role in sorted(paths):
        h.update(role.encode())
        h.update(b"\0")
        h.update(Path(paths[role]).read_bytes())
        h.update(b"\0")
    return h.hexdigest()
