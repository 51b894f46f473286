"""Odd graphs O_k and middle-levels graphs M_k.

Vertices of O_k are binary strings of length 2k+1 and weight k; two are
adjacent when their supports are disjoint.  Every vertex is a rotation of
exactly one anchored word 0f, f a k-blown Dyck word, so rotating the
matching anchored nest gives each vertex a nest view.  An arc leaves a
vertex through one of its k+1 zero positions; its color is the nest entry
there (0 at the anchor, j at a first appearance j_1), and the arc back
through the same position has color k - j.

M_k has levels L_k and L_{k+1}.  Here w in L_{k+1} is joined to u in L_k
when u is contained in the reversal of w, which makes the map (identity on
L_k, reversed complement on L_{k+1}) a 2-to-1 covering of O_k.  Reversing
the upper level turns this into the usual inclusion graph.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator, Sequence

from .castling import generate_table
from .dyck import is_dyck, reversed_complement, word_to_nest
from .rgs import catalan

DEFAULT_MAX_K = 9


class CapExceeded(RuntimeError):
    """Raised when a construction would exceed the configured order cap."""


def max_k() -> int:
    return int(os.environ.get("DYCKNEST_MAX_K", DEFAULT_MAX_K))


def check_cap(k: int, cap: int | None = None) -> None:
    cap = max_k() if cap is None else cap
    if k > cap:
        raise CapExceeded(f"k={k} exceeds the cap {cap}")


# -- bit helpers -------------------------------------------------------------

def complement(bits: str) -> str:
    return bits.translate(str.maketrans("01", "10"))


def rotate_left(seq, shift: int):
    if not seq:
        return seq
    shift %= len(seq)
    return seq[shift:] + seq[:shift]


def support(bits: str) -> frozenset[int]:
    return frozenset(i for i, c in enumerate(bits) if c == "1")


def level(n: int, weight: int) -> list[str]:
    """All binary strings of length n and the given weight, in lexicographic order."""
    out = []
    for ones in combinations(range(n), weight):
        chars = ["0"] * n
        for i in ones:
            chars[i] = "1"
        out.append("".join(chars))
    return sorted(out)


# -- classes -----------------------------------------------------------------

@dataclass(frozen=True)
class VertexView:
    bits: str
    rank: int  # class index n: the TRGS rank of the anchored word
    shift: int  # left rotation of the anchored string
    nest: tuple[int, ...]  # rotated anchored nest

    @property
    def right_shift(self) -> int:
        return (-self.shift) % len(self.bits)


@dataclass(frozen=True)
class RotationClass:
    rank: int
    k: int
    word: str  # anchored word 0f
    nest: tuple[int, ...]  # anchored nest 0F

    def words(self) -> list[str]:
        return [rotate_left(self.word, s) for s in range(2 * self.k + 1)]

    def nests(self) -> list[tuple[int, ...]]:
        return [rotate_left(self.nest, s) for s in range(2 * self.k + 1)]


@lru_cache(maxsize=16)
def _classes(k: int) -> tuple[RotationClass, ...]:
    table = generate_table(k)
    return tuple(
        RotationClass(row.n, k, "0" + row.word, (0,) + row.blown) for row in table.rows
    )


@lru_cache(maxsize=16)
def _rank_of_anchored(k: int) -> dict[str, int]:
    return {c.word: c.rank for c in _classes(k)}


def anchor_class(n: int, k: int) -> RotationClass:
    if not 0 <= n < catalan(k):
        raise ValueError(f"rank {n} is outside [0, C_{k})")
    return _classes(k)[n]


def anchor_of(bits: str) -> int:
    """The left shift s with bits = rotate_left(anchored, s)."""
    n = len(bits)
    for start in range(n):
        r = rotate_left(bits, start)
        if r[0] == "0" and is_dyck(r[1:]):
            return (n - start) % n
    raise ValueError(f"{bits} is not a vertex of an odd graph")


def view(bits: str) -> VertexView:
    k = (len(bits) - 1) // 2
    if len(bits) != 2 * k + 1 or bits.count("1") != k:
        raise ValueError(f"{bits} is not a weight-{k} string of length {2 * k + 1}")
    shift = anchor_of(bits)
    anchored = rotate_left(bits, -shift)
    rank = _rank_of_anchored(k)[anchored]
    nest = rotate_left((0,) + word_to_nest(anchored[1:]), shift)
    return VertexView(bits, rank, shift, nest)


def appearance_profile(chi: Sequence[int]) -> str:
    """Binary vertex of a rotated anchored nest: reading cyclically from the
    0, first appearances and the 0 give 0-bits, second appearances 1-bits."""
    chi = tuple(chi)
    if chi.count(0) != 1:
        raise ValueError("a rotated nest holds exactly one 0")
    n = len(chi)
    start = chi.index(0)
    out = ["0"] * n
    seen = set()
    for step in range(1, n):
        i = (start + step) % n
        v = chi[i]
        if v in seen:
            out[i] = "1"
        elif v < 1:
            raise ValueError("entries besides the anchor must be positive")
        seen.add(v)
    bits = "".join(out)
    if sorted(seen) != list(range(1, (n - 1) // 2 + 1)) or bits.count("1") != (n - 1) // 2:
        raise ValueError(f"{chi} is not a rotated anchored nest")
    return bits


def color_position(chi: Sequence[int], j: int) -> int:
    """Position of the 0 (j = 0) or of the first appearance j_1, read cyclically from the 0."""
    chi = tuple(chi)
    n = len(chi)
    start = chi.index(0)
    if j == 0:
        return start
    for step in range(1, n):
        i = (start + step) % n
        if chi[i] == j:
            return i
    raise ValueError(f"no entry {j} in {chi}")


def flip_at(bits: str, p: int) -> str:
    """The O_k neighbor through zero position p."""
    if bits[p] != "0":
        raise ValueError(f"position {p} of {bits} is not a 0-bit")
    c = complement(bits)
    return c[:p] + "0" + c[p + 1 :]


def arc_neighbor(chi: Sequence[int], j: int) -> tuple[int, ...]:
    """The rotated nest reached from chi along its arc of color j."""
    chi = tuple(chi)
    k = (len(chi) - 1) // 2
    if not 0 <= j <= k:
        raise ValueError(f"color {j} outside [0, {k}]")
    p = color_position(chi, j)
    other = view(flip_at(appearance_profile(chi), p)).nest
    if color_position(other, k - j) != p:
        raise AssertionError(f"arc of color {j} from {chi} lands off the supplementary position")
    return other


def arc_color(bits: str, p: int) -> int:
    """Color of the arc leaving ``bits`` through zero position p."""
    if bits[p] != "0":
        raise ValueError(f"position {p} of {bits} is not a 0-bit")
    return view(bits).nest[p]


# -- graphs ------------------------------------------------------------------

@dataclass
class Graph:
    vertices: list[str]
    adjacency: dict[str, list[str]] = field(default_factory=dict)

    def edges(self) -> Iterator[tuple[str, str]]:
        for v in self.vertices:
            for w in self.adjacency[v]:
                if v < w:
                    yield v, w

    def degree_set(self) -> set[int]:
        return {len(self.adjacency[v]) for v in self.vertices}

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency.values()) // 2


def odd_neighbors(bits: str) -> list[str]:
    return [flip_at(bits, p) for p, c in enumerate(bits) if c == "0"]


def build_odd(k: int, cap: int | None = None) -> Graph:
    if k < 1:
        raise ValueError("k must be positive")
    check_cap(k, cap)
    verts = level(2 * k + 1, k)
    return Graph(verts, {v: sorted(odd_neighbors(v)) for v in verts})


def middle_neighbors(bits: str) -> list[str]:
    """Neighbors in M_k: u in L_k meets every w with u contained in rev(w)."""
    k = (len(bits) - 1) // 2
    if bits.count("1") == k:
        # w = reverse of u plus one extra 1
        rev = bits[::-1]
        return [rev[:i] + "1" + rev[i + 1 :] for i, c in enumerate(rev) if c == "0"]
    rev = bits[::-1]
    return [rev[:i] + "0" + rev[i + 1 :] for i, c in enumerate(rev) if c == "1"]


def middle_adjacent(u: str, w: str) -> bool:
    if u.count("1") > w.count("1"):
        u, w = w, u
    if w.count("1") != u.count("1") + 1 or len(u) != len(w):
        return False
    return support(u) <= support(w[::-1])


def psi(bits: str) -> str:
    """The covering map M_k -> O_k."""
    k = (len(bits) - 1) // 2
    return bits if bits.count("1") == k else reversed_complement(bits)


def to_inclusion(bits: str) -> str:
    """Relabel a vertex so that adjacency becomes plain inclusion."""
    k = (len(bits) - 1) // 2
    return bits if bits.count("1") == k else bits[::-1]


def build_middle(k: int, cap: int | None = None) -> Graph:
    if k < 1:
        raise ValueError("k must be positive")
    check_cap(k, cap)
    verts = level(2 * k + 1, k) + level(2 * k + 1, k + 1)
    return Graph(verts, {v: sorted(middle_neighbors(v)) for v in verts})


@dataclass(frozen=True)
class Arc:
    tail: str
    head: str
    position: int
    color: int


def arc_factorization(k: int, cap: int | None = None) -> dict[str, dict[int, Arc]]:
    """Per vertex, its outgoing arc of every color; both invariants are checked."""
    check_cap(k, cap)
    coloring: dict[str, dict[int, Arc]] = {}
    for v in level(2 * k + 1, k):
        nest = view(v).nest
        out = {}
        for p, c in enumerate(v):
            if c == "0":
                color = nest[p]
                if color in out:
                    raise AssertionError(f"{v} has two arcs of color {color}")
                out[color] = Arc(v, flip_at(v, p), p, color)
        if sorted(out) != list(range(k + 1)):
            raise AssertionError(f"{v} misses a color: {sorted(out)}")
        coloring[v] = out
    for v, arcs in coloring.items():
        for color, arc in arcs.items():
            back = coloring[arc.head][k - color]
            if back.head != v or back.position != arc.position:
                raise AssertionError(f"edge {v}-{arc.head} is not edge-supplementary")
    return coloring


def vertex_count(k: int) -> int:
    return comb(2 * k + 1, k)
