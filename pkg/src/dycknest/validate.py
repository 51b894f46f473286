"""Standalone checks for serialized certificates.

Nothing here imports the constructors: vertices, adjacency and counts are
recomputed from the JSON alone.  Middle-levels certificates use the plain
inclusion labelling (levels k and k+1 of the Boolean lattice).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb
from pathlib import Path

HAMILTON_SCHEMA = "dycknest.hamilton"
TWO_FACTOR_SCHEMA = "dycknest.two-factor"


@dataclass
class Verdict:
    ok: bool
    problems: list[str] = field(default_factory=list)

    def fail(self, message: str) -> "Verdict":
        self.ok = False
        self.problems.append(message)
        return self


def _ones(bits: str) -> set[int]:
    return {i for i, c in enumerate(bits) if c == "1"}


def _adjacent(graph: str, u: str, w: str) -> bool:
    if graph == "odd":
        return not (_ones(u) & _ones(w))
    a, b = (u, w) if u.count("1") < w.count("1") else (w, u)
    return b.count("1") == a.count("1") + 1 and _ones(a) <= _ones(b)


def _vertex_ok(graph: str, k: int, v: str) -> bool:
    if len(v) != 2 * k + 1 or set(v) - {"0", "1"}:
        return False
    weight = v.count("1")
    return weight == k if graph == "odd" else weight in (k, k + 1)


def _order(graph: str, k: int) -> int:
    n = comb(2 * k + 1, k)
    return n if graph == "odd" else 2 * n


def _check_cycle(graph: str, k: int, cycle: list[str], verdict: Verdict, name: str) -> None:
    if len(cycle) < 3:
        verdict.fail(f"{name}: fewer than three vertices")
        return
    for v in cycle:
        if not _vertex_ok(graph, k, v):
            verdict.fail(f"{name}: {v!r} is not a vertex")
            return
    if len(set(cycle)) != len(cycle):
        verdict.fail(f"{name}: repeated vertex")
    for i, v in enumerate(cycle):
        w = cycle[(i + 1) % len(cycle)]
        if not _adjacent(graph, v, w):
            verdict.fail(f"{name}: {v} and {w} are not adjacent")
            return


def check_hamilton(data: dict) -> Verdict:
    """Spanning, 2-regular and connected: a single closed walk through every vertex once."""
    v = Verdict(True)
    if data.get("schema") != HAMILTON_SCHEMA:
        return v.fail(f"unexpected schema {data.get('schema')!r}")
    graph, k, cycle = data.get("graph"), data.get("k"), data.get("cycle", [])
    if graph not in ("odd", "middle") or not isinstance(k, int) or k < 1:
        return v.fail("graph or k missing")
    _check_cycle(graph, k, cycle, v, "cycle")
    if len(set(cycle)) != _order(graph, k):
        v.fail(f"cycle visits {len(set(cycle))} of {_order(graph, k)} vertices")
    return v


def check_two_factor(data: dict) -> Verdict:
    """Disjoint cycles of the stated length covering every vertex."""
    v = Verdict(True)
    if data.get("schema") != TWO_FACTOR_SCHEMA:
        return v.fail(f"unexpected schema {data.get('schema')!r}")
    graph, k, cycles = data.get("graph"), data.get("k"), data.get("cycles", [])
    if graph not in ("odd", "middle") or not isinstance(k, int) or k < 1:
        return v.fail("graph or k missing")
    expected = (2 * k + 1) * (1 if graph == "odd" else 2)
    seen: set[str] = set()
    for i, cyc in enumerate(cycles):
        _check_cycle(graph, k, cyc, v, f"cycle {i}")
        if len(cyc) != expected:
            v.fail(f"cycle {i} has length {len(cyc)}, expected {expected}")
        if seen & set(cyc):
            v.fail(f"cycle {i} meets an earlier cycle")
        seen |= set(cyc)
    if len(seen) != _order(graph, k):
        v.fail(f"cycles cover {len(seen)} of {_order(graph, k)} vertices")
    return v


def check_file(path: str | Path) -> Verdict:
    data = json.loads(Path(path).read_text())
    schema = data.get("schema")
    if schema == HAMILTON_SCHEMA:
        return check_hamilton(data)
    if schema == TWO_FACTOR_SCHEMA:
        return check_two_factor(data)
    return Verdict(False, [f"unknown schema {schema!r}"])
