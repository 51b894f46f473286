"""Serialization of listings, graphs and certificates.

Every JSON document carries ``schema`` and ``version``; the matching JSON
Schema files live in ``dycknest/schemas``.  Middle-levels vertices are
written in the plain inclusion labelling.
"""

from __future__ import annotations

import json
from importlib import resources
from typing import Any

from .cache import build_rows
from .dyck import reversed_complement
from .hamilton import HamiltonCertificate
from .oddgraph import Graph, arc_factorization, to_inclusion
from .rgs import gamma_rank, parent_rank
from .twofactor import TwoFactor
from .validate import HAMILTON_SCHEMA, TWO_FACTOR_SCHEMA

SCHEMA_VERSION = 1
TRGS_SCHEMA = "dycknest.trgs"
GRAPH_SCHEMA = "dycknest.graph"


def dumps(doc: Any) -> str:
    """Canonical JSON text: sorted keys, compact separators, trailing newline."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def schema(name: str) -> dict:
    """The JSON Schema document for a schema id such as ``dycknest.graph``."""
    fname = name.split(".", 1)[1] + ".schema.json"
    return json.loads(resources.files("dycknest.schemas").joinpath(fname).read_text())


# -- TRGS listing --------------------------------------------------------------

def trgs_rows(k: int, table: list[list] | None = None) -> list[dict]:
    """One record per rank below C_k: string, parent, gamma, h, tight nest and
    clone at k.  ``table`` takes cached nest-table rows."""
    if table is None:
        table = build_rows(k)
    rows = []
    for n, trgs, nest, clone, h, flavor in table:
        rows.append({
            "n": n,
            "trgs": trgs,
            "rho": None if n == 0 else parent_rank(n),
            "gamma": None if n == 0 else gamma_rank(n),
            "h": h,
            "h_depends_on_k": None if flavor is None else flavor == "k",
            "nest": nest,
            "clone": clone,
        })
    return rows


def trgs_document(k: int, rows: list[dict]) -> dict:
    return {"schema": TRGS_SCHEMA, "version": SCHEMA_VERSION, "k": k, "rows": rows}


def _cell(value) -> str:
    return "-" if value is None or value == "" else str(value)


def render_h(h: int | None, depends_on_k: bool | None) -> str:
    """h as printed in the clone tables: ``k-2`` style when it moves with k."""
    if h is None:
        return "-"
    if not depends_on_k:
        return str(h)
    return "k" if h == 0 else f"k{h:+d}"


def trgs_text(rows: list[dict]) -> str:
    header = ("n", "b(n)", "rho", "gamma", "h", "F(n)", "clone")
    table = [header] + [
        (
            str(r["n"]), r["trgs"], _cell(r["rho"]), _cell(r["gamma"]),
            _cell(r["h"]), r["nest"], _cell(r["clone"]),
        )
        for r in rows
    ]
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    return "".join(
        "  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() + "\n" for row in table
    )


# -- graphs --------------------------------------------------------------------

def _label(kind: str, v: str) -> str:
    return v if kind == "odd" else to_inclusion(v)


def graph_arcs(kind: str, k: int, cap: int | None = None) -> list[dict]:
    """Colored arcs.  For M_k every edge gets the color of its projected arc
    read from the lower endpoint, and the reverse color from the upper one."""
    coloring = arc_factorization(k, cap)
    if kind == "odd":
        return [
            {"tail": a.tail, "head": a.head, "position": a.position, "color": a.color}
            for v in sorted(coloring) for a in coloring[v].values()
        ]
    out = []
    for u in sorted(coloring):
        for a in coloring[u].values():
            # the lift of u -> head ends at the upper vertex over head
            w = reversed_complement(a.head)
            lo, hi = _label(kind, u), _label(kind, w)
            out.append({"tail": lo, "head": hi, "position": a.position, "color": a.color})
            out.append({"tail": hi, "head": lo, "position": a.position, "color": k - a.color})
    return sorted(out, key=lambda r: (r["tail"], r["color"]))


def graph_document(kind: str, k: int, graph: Graph, arcs: list[dict] | None = None) -> dict:
    verts = sorted(_label(kind, v) for v in graph.vertices)
    edges = sorted(tuple(sorted((_label(kind, u), _label(kind, w)))) for u, w in graph.edges())
    doc = {
        "schema": GRAPH_SCHEMA,
        "version": SCHEMA_VERSION,
        "graph": kind,
        "k": k,
        "vertices": verts,
        "edges": [list(e) for e in edges],
    }
    if arcs is not None:
        doc["arcs"] = arcs
    return doc


def graph_text(doc: dict) -> str:
    lines = [f"{doc['graph']} k={doc['k']}: {len(doc['vertices'])} vertices, {len(doc['edges'])} edges"]
    lines += [f"{u} {w}" for u, w in doc["edges"]]
    for a in doc.get("arcs", []):
        lines.append(f"arc {a['tail']} -> {a['head']} position {a['position']} color {a['color']}")
    return "\n".join(lines) + "\n"


def graph_dot(doc: dict) -> str:
    name = f"{doc['graph']}_k{doc['k']}"
    lines = [f"graph {name} {{"]
    lines += [f'  "{v}";' for v in doc["vertices"]]
    if "arcs" in doc:
        # one line per edge, labelled by the two arc colors
        colors = {(a["tail"], a["head"]): a["color"] for a in doc["arcs"]}
        for u, w in doc["edges"]:
            lines.append(f'  "{u}" -- "{w}" [label="{colors[(u, w)]}/{colors[(w, u)]}"];')
    else:
        lines += [f'  "{u}" -- "{w}";' for u, w in doc["edges"]]
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- certificates --------------------------------------------------------------

def two_factor_document(factor: TwoFactor, kind: str = "odd") -> dict:
    return {
        "schema": TWO_FACTOR_SCHEMA,
        "version": SCHEMA_VERSION,
        "graph": kind,
        "k": factor.k,
        "cycles": [[_label(kind, v) for v in cyc] for cyc in factor.cycles],
    }


def hamilton_document(cert: HamiltonCertificate) -> dict:
    return {
        "schema": HAMILTON_SCHEMA,
        "version": SCHEMA_VERSION,
        "graph": cert.graph,
        "k": cert.k,
        "cycle": [_label(cert.graph, v) for v in cert.cycle],
        "hyperedges": [
            {"label": e.label, "ranks": list(e.ranks), "positions": list(e.positions)}
            for e in cert.hyperedges
        ],
    }
