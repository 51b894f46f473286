"""On-disk cache of nest tables, one JSON file per k.

File ``nest-table-k{k}.json`` holds canonical JSON (sorted keys, compact
separators, one trailing newline)::

    {"k":K,"rows":[[n,"trgs","tight nest","clone at K",h,flavor],...],
     "schema":"dycknest.nest-table","version":1}

``h`` is null at the root; ``flavor`` is "k" when h moves with k, "fixed"
otherwise, null at the root.  A file with another version or k, or that
fails to parse, is rebuilt.  The directory defaults to
``~/.cache/dycknest`` and is overridden by ``DYCKNEST_CACHE_DIR``.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .castling import clone_of, generate_table, h_sequence, render_clone
from .dyck import render_nest

CACHE_SCHEMA = "dycknest.nest-table"
CACHE_VERSION = 1
ENV_VAR = "DYCKNEST_CACHE_DIR"

Row = list  # [n, trgs, tight nest, clone, h, flavor]


def cache_dir(override: str | Path | None = None) -> Path:
    if override is not None:
        return Path(override)
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else Path.home() / ".cache" / "dycknest"


def cache_path(k: int, directory: str | Path | None = None) -> Path:
    return cache_dir(directory) / f"nest-table-k{k}.json"


def build_rows(k: int) -> list[Row]:
    table = generate_table(k)
    hs = {hv.n: hv for hv in h_sequence(k)} if k >= 2 else {}
    rows = []
    for row in table.rows:
        hv = hs.get(row.n)
        rows.append([
            row.n,
            str(row.trgs),
            render_nest(row.tight),
            render_clone(clone_of(row.blown)),
            None if hv is None else hv.h,
            None if hv is None else ("k" if hv.depends_on_k else "fixed"),
        ])
    return rows


def encode(k: int, rows: list[Row]) -> str:
    doc = {"schema": CACHE_SCHEMA, "version": CACHE_VERSION, "k": k, "rows": rows}
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _read(path: Path, k: int) -> list[Row] | None:
    try:
        doc = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if (
        not isinstance(doc, dict)
        or doc.get("schema") != CACHE_SCHEMA
        or doc.get("version") != CACHE_VERSION
        or doc.get("k") != k
        or not isinstance(doc.get("rows"), list)
    ):
        return None
    return doc["rows"]


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


def load_rows(k: int, directory: str | Path | None = None, use_cache: bool = True) -> tuple[list[Row], bool]:
    """Rows for k and whether they came from the cache.

    Cold results go through the same encoding as the file, so a cache hit
    and a cold run hand back identical data.
    """
    if not use_cache:
        return json.loads(encode(k, build_rows(k)))["rows"], False
    path = cache_path(k, directory)
    rows = _read(path, k)
    if rows is not None:
        return rows, True
    text = encode(k, build_rows(k))
    try:
        _write(path, text)
    except OSError:
        pass  # an unwritable cache only costs time
    return json.loads(text)["rows"], False
