"""Hamilton cycles in O_k and M_k from flippable tuples.

Each vertical list L(n) is a (2k+1)-cycle of the uniform 2-factor.  A
pattern set is a small family of Dyck words with one marked position each;
when the initial words of some lists are u m v for the members m of one
set, the rows of those lists flipping at the marked positions form edges
that close into an alternating cycle with a few extra O_k edges.  Taking
the symmetric difference with that cycle merges the lists into one cycle.
A spanning tree of such hyperedges, built recursively over Dyck words,
merges all C_k lists into a Hamilton cycle.

Marked positions are counted from the right end of the Dyck word; in the
anchored string of length 2k+1 that is index 2k - position.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product

from .castling import generate_table
from .dyck import dyck_words, is_dyck, reversed_complement
from .oddgraph import check_cap, middle_adjacent, support, vertex_count
from .rgs import catalan
from .twofactor import lift_cycle, uniform_two_factor, vertical_list


class HamiltonError(RuntimeError):
    pass


# -- pattern sets ------------------------------------------------------------

@dataclass(frozen=True)
class Member:
    word: str
    phi: int  # marked position, from the right

    def wrap(self, prefix: str, suffix: str) -> "Member":
        return Member(prefix + self.word + suffix, self.phi + len(suffix))

    def underline(self) -> "Member":
        return Member(reversed_complement(self.word), len(self.word) - 1 - self.phi)


@dataclass(frozen=True)
class Hyperedge:
    label: str
    members: tuple[Member, ...]

    def wrap(self, prefix: str, suffix: str) -> "Hyperedge":
        return Hyperedge(
            f"{prefix}({self.label}){suffix}" if prefix or suffix else self.label,
            tuple(m.wrap(prefix, suffix) for m in self.members),
        )

    def underline(self) -> "Hyperedge":
        return Hyperedge(f"_{self.label}", tuple(m.underline() for m in self.members))

    def __len__(self) -> int:
        return len(self.members)


def s1(w: str = "") -> Hyperedge:
    if not is_dyck(w):
        raise ValueError(f"{w!r} is not a Dyck word")
    name = f"S1({w})" if w else "S1"
    return Hyperedge(name, (Member(f"0{w}00111", 1), Member(f"0{w}01101", 4), Member(f"0{w}01011", 0)))


S2 = Hyperedge("S2", (Member("00110011", 6), Member("00100111", 0), Member("00010111", 2)))
S3 = Hyperedge("S3", (Member("000111", 0), Member("010011", 1), Member("010101", 5)))
S4 = Hyperedge("S4", (Member("000111", 0), Member("001011", 1), Member("010011", 3), Member("010101", 5)))


def pattern_sets(w: str = "") -> dict[str, Hyperedge]:
    """S1(w), S2, S3, S4 and their underlined versions."""
    base = {"S1": s1(w), "S2": S2, "S3": S3, "S4": S4}
    out = dict(base)
    for name, e in base.items():
        out["_" + name] = e.underline()
    return out


@dataclass(frozen=True)
class Embedding:
    role: str  # e.g. "S4[0]" or "_S1(01)[2]"
    prefix: int  # |u|
    position: int  # marked position of the whole word, from the right
    parity_ok: bool  # plain members at even |u|, underlined at odd |u|


def _s1_role(s: str) -> tuple[int, str] | None:
    """Match s against 0 w 00111 / 0 w 01101 / 0 w 01011 with w a Dyck word."""
    if len(s) < 6 or s[0] != "0":
        return None
    w, tail = s[1:-5], s[-5:]
    for index, t in enumerate(("00111", "01101", "01011")):
        if tail == t and is_dyck(w):
            return index, w
    return None


def locate_pattern(f: str) -> list[Embedding]:
    """Every way to read the Dyck word f as u m v with m a pattern member."""
    out = []
    fixed = {name: e for name, e in pattern_sets().items() if "S1" not in name}
    n = len(f)
    for i in range(n):
        for j in range(i + 1, n + 1):
            s = f[i:j]
            suffix = n - j
            for name, e in fixed.items():
                for idx, m in enumerate(e.members):
                    if m.word == s:
                        under = name.startswith("_")
                        out.append(Embedding(f"{name}[{idx}]", i, m.phi + suffix, (i % 2 == 1) == under))
            for under in (False, True):
                hit = _s1_role(reversed_complement(s) if under else s)
                if hit is None:
                    continue
                idx, w = hit
                m = s1(w).members[idx]
                if under:
                    m = m.underline()
                name = ("_" if under else "") + (f"S1({w})" if w else "S1")
                out.append(Embedding(f"{name}[{idx}]", i, m.phi + suffix, (i % 2 == 1) == under))
    return out


# -- the recursive spanning tree ---------------------------------------------

def _wrap_all(edges, prefix: str, suffix: str) -> list[Hyperedge]:
    return [e.wrap(prefix, suffix) for e in edges]


def _under_all(edges) -> list[Hyperedge]:
    return [e.underline() for e in edges]


@lru_cache(maxsize=None)
def _words(k: int) -> tuple[str, ...]:
    return tuple(dyck_words(k))


@lru_cache(maxsize=None)
def tree_t(k: int) -> tuple[Hyperedge, ...]:
    """Spanning tree of the hypergraph on all Dyck words of length 2k."""
    if k < 3:
        raise ValueError("spanning trees start at k = 3")
    if k == 3:
        return (s1(), S3)
    tau = S3.wrap("", "01" * (k - 3))
    tau = Hyperedge("tau", tau.members)
    return tuple(
        list(tree_f(k)) + [tau] + _wrap_all(tree_e(k - 1), "01", "") + _wrap_all(tree_f(k - 1), "01", "")
    )


@lru_cache(maxsize=None)
def tree_e(k: int) -> tuple[Hyperedge, ...]:
    """Spanning tree on E_k: S4 for k = 3, 01 D_{k-1} beyond."""
    if k <= 2:
        return ()
    if k == 3:
        return (S4,)
    return tuple(_wrap_all(tree_t(k - 1), "01", ""))


@lru_cache(maxsize=None)
def tree_f(k: int) -> tuple[Hyperedge, ...]:
    """Spanning tree on F_k, the Dyck words not starting with 01."""
    if k <= 3:
        return ()
    if k == 4:
        return (s1("01"), S2, S3.underline().wrap("0", "1"), s1().wrap("", "01"))
    edges = _wrap_all(tree_t(k - 2), "0011", "")
    for j in range(3, k + 1):
        for v in _words(k - j):
            edges.append(s1("01" * (j - 3)).wrap("", v))
            edges += _wrap_all(_under_all(tree_e(j - 1)), "0", "1" + v)
            edges += _wrap_all(_under_all(tree_f(j - 1)), "0", "1" + v)
    return tuple(edges)


@dataclass(frozen=True)
class TreeEdge:
    label: str
    ranks: tuple[int, ...]
    positions: tuple[int, ...]  # from the right, per member


@dataclass
class SpanningTree:
    k: int
    edges: list[TreeEdge]

    def rank_sets(self) -> list[tuple[int, ...]]:
        return [e.ranks for e in self.edges]


class TreeError(HamiltonError):
    pass


def spanning_tree(k: int) -> SpanningTree:
    """H'_k with its members as list ranks, checked conflict-free and spanning."""
    rank_of = generate_table(k).rank_of_word()
    edges = []
    for e in tree_t(k):
        ranks = []
        for m in e.members:
            if m.word not in rank_of:
                raise TreeError(f"{m.word} from {e.label} is not a Dyck word of length {2 * k}")
            ranks.append(rank_of[m.word])
        edges.append(TreeEdge(e.label, tuple(ranks), tuple(m.phi for m in e.members)))
    tree = SpanningTree(k, edges)
    check_tree(tree)
    return tree


def check_tree(tree: SpanningTree) -> None:
    k = tree.k
    total = catalan(k)
    used: dict[int, list[tuple[int, int]]] = {}
    for idx, e in enumerate(tree.edges):
        if len(set(e.ranks)) != len(e.ranks):
            raise TreeError(f"hyperedge {e.label} repeats a list")
        for r, p in zip(e.ranks, e.positions):
            used.setdefault(r, []).append((idx, p))
    for a in range(len(tree.edges)):
        for b in range(a + 1, len(tree.edges)):
            common = set(tree.edges[a].ranks) & set(tree.edges[b].ranks)
            if len(common) > 1:
                raise TreeError(f"{tree.edges[a].label} and {tree.edges[b].label} share {sorted(common)}")
    for r, uses in used.items():
        positions = [p for _, p in uses]
        if len(set(positions)) != len(positions):
            raise TreeError(f"list {r} is flipped twice at one position")
    parent = list(range(total))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in tree.edges:
        for r in e.ranks[1:]:
            a, b = find(e.ranks[0]), find(r)
            if a == b:
                raise TreeError(f"hyperedge {e.label} closes a cycle")
            parent[a] = b
    if len({find(x) for x in range(total)}) != 1:
        raise TreeError("the hyperedges do not span every list")


# -- flipping cycles ---------------------------------------------------------

def disjoint(u: str, w: str) -> bool:
    return not (support(u) & support(w))


def _key(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class FlippableTuple:
    n: int
    position: int  # from the right
    rows: tuple[str, str]


def flippable_tuple(n: int, j: int, k: int) -> FlippableTuple:
    """The pair of consecutive rows of L(n) flipping at position j from the right."""
    if not 0 <= j <= 2 * k:
        raise ValueError(f"position {j} outside [0, {2 * k}]")
    vl = vertical_list(n, k)
    left = 2 * k - j
    i = vl.positions.index(left)
    return FlippableTuple(n, j, (vl.rows[i], vl.rows[(i + 1) % len(vl.rows)]))


@dataclass(frozen=True)
class FlippingCycle:
    label: str
    ranks: tuple[int, ...]
    vertices: tuple[str, ...]  # a_1 b_1 a_2 b_2 ...: (a_i, b_i) tuple edges, (b_i, a_{i+1}) links

    def tuple_edges(self) -> list[tuple[str, str]]:
        v = self.vertices
        return [(v[i], v[i + 1]) for i in range(0, len(v), 2)]

    def links(self) -> list[tuple[str, str]]:
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(1, len(v), 2)]


def flipping_cycle(edge: TreeEdge, k: int, factor_edges: set[tuple[str, str]] | None = None) -> FlippingCycle:
    """Alternating cycle through the hyperedge's flippable tuples, by search."""
    tuples = [flippable_tuple(n, p, k).rows for n, p in zip(edge.ranks, edge.positions)]
    if len({frozenset(t) for t in tuples}) != len(tuples) or len({v for t in tuples for v in t}) != 2 * len(tuples):
        raise HamiltonError(f"tuples of {edge.label} are not pairwise disjoint")
    first, rest = tuples[0], tuples[1:]
    for order in permutations(range(len(rest))):
        seq = [first] + [rest[i] for i in order]
        for flips in product((False, True), repeat=len(seq)):
            oriented = [(b, a) if f else (a, b) for (a, b), f in zip(seq, flips)]
            ok = True
            for i in range(len(oriented)):
                x, y = oriented[i][1], oriented[(i + 1) % len(oriented)][0]
                if not disjoint(x, y) or (factor_edges is not None and _key(x, y) in factor_edges):
                    ok = False
                    break
            if ok:
                verts = tuple(v for pair in oriented for v in pair)
                ranks = (edge.ranks[0],) + tuple(edge.ranks[1:][i] for i in order)
                return FlippingCycle(edge.label, ranks, verts)
    raise HamiltonError(f"no flipping cycle for hyperedge {edge.label}")


# -- assembly ----------------------------------------------------------------

@dataclass
class HamiltonCertificate:
    k: int
    graph: str  # "odd" or "middle"
    cycle: list[str]
    hyperedges: list[TreeEdge] = field(default_factory=list)
    flips: list[FlippingCycle] = field(default_factory=list)
    components_after: list[int] = field(default_factory=list)


def _cycles_to_adjacency(cycles) -> dict[str, set[str]]:
    adj: dict[str, set[str]] = {}
    for cyc in cycles:
        m = len(cyc)
        for i, v in enumerate(cyc):
            adj.setdefault(v, set()).update((cyc[i - 1], cyc[(i + 1) % m]))
    return adj


def _walk(adj: dict[str, set[str]], start: str) -> list[str]:
    out = [start]
    prev, cur = None, start
    while True:
        nxt = [w for w in adj[cur] if w != prev]
        if len(adj[cur]) != 2:
            raise HamiltonError(f"{cur} has degree {len(adj[cur])}")
        step = nxt[0]
        if step == start:
            return out
        out.append(step)
        prev, cur = cur, step


def _apply(adj: dict[str, set[str]], remove, add, label: str) -> None:
    for a, b in remove:
        if b not in adj[a]:
            raise HamiltonError(f"{label}: edge {a}-{b} is missing")
        adj[a].discard(b)
        adj[b].discard(a)
    for a, b in add:
        if b in adj[a]:
            raise HamiltonError(f"{label}: edge {a}-{b} is already present")
        adj[a].add(b)
        adj[b].add(a)


def traversal_order(tree: SpanningTree, root: int = 0) -> list[TreeEdge]:
    """Hyperedges in breadth-first order from the list ``root``."""
    by_rank: dict[int, list[int]] = {}
    for i, e in enumerate(tree.edges):
        for r in e.ranks:
            by_rank.setdefault(r, []).append(i)
    seen_edges, seen_ranks = set(), {root}
    queue, order = deque([root]), []
    while queue:
        r = queue.popleft()
        for i in by_rank.get(r, []):
            if i in seen_edges:
                continue
            seen_edges.add(i)
            order.append(tree.edges[i])
            for s in tree.edges[i].ranks:
                if s not in seen_ranks:
                    seen_ranks.add(s)
                    queue.append(s)
    return order


def _component_count(adj: dict[str, set[str]]) -> int:
    seen, count = set(), 0
    for v in adj:
        if v in seen:
            continue
        count += 1
        stack = [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return count


def assemble_hamilton_odd(k: int, cap: int | None = None, order: list[int] | None = None,
                          track_components: bool = False) -> HamiltonCertificate:
    """Hamilton cycle of O_k: the uniform 2-factor with every tree flip applied."""
    if k < 3:
        raise HamiltonError("the construction needs k >= 3")
    check_cap(k, cap)
    factor = uniform_two_factor(k)
    tree = spanning_tree(k)
    adj = _cycles_to_adjacency(factor.cycles)
    base = {_key(a, b) for a in adj for b in adj[a]}
    edges = traversal_order(tree) if order is None else [tree.edges[i] for i in order]
    cert = HamiltonCertificate(k, "odd", [], list(edges))
    for e in edges:
        fc = flipping_cycle(e, k, base)
        _apply(adj, fc.tuple_edges(), fc.links(), e.label)
        cert.flips.append(fc)
        if track_components:
            cert.components_after.append(_component_count(adj))
    cycle = _walk(adj, factor.cycles[0][0])
    if len(cycle) != vertex_count(k):
        raise HamiltonError(f"the result has a cycle of length {len(cycle)}, not {vertex_count(k)}")
    cert.cycle = cycle
    return cert


@dataclass
class LiftDiagnostic:
    k: int
    label: str
    reason: str
    cycle_lengths: list[int]


class LiftError(HamiltonError):
    def __init__(self, diagnostic: LiftDiagnostic):
        super().__init__(f"k={diagnostic.k}, {diagnostic.label}: {diagnostic.reason}")
        self.diagnostic = diagnostic


def _lift_closed_walk(walk: tuple[str, ...], start: str) -> list[str]:
    """Lift a closed walk of O_k from ``start``; stops after one or two turns."""
    out = [start]
    m = len(walk)
    for step in range(1, 2 * m):
        v = walk[step % m]
        options = [w for w in (v, reversed_complement(v)) if middle_adjacent(out[-1], w)]
        if len(options) != 1:
            raise HamiltonError(f"ambiguous lift at {v}")
        if step == m and options[0] == start:
            return out
        out.append(options[0])
    return out


def flip_lifts(fc: FlippingCycle) -> list[list[str]]:
    """Preimages of a flipping cycle in M_k: two cycles or one of twice the length."""
    v0 = fc.vertices[0]
    first = _lift_closed_walk(fc.vertices, v0)
    if len(first) == len(fc.vertices):
        return [first, _lift_closed_walk(fc.vertices, reversed_complement(v0))]
    return [first]


def lift_hamilton_middle(k: int, cap: int | None = None) -> HamiltonCertificate:
    """Hamilton cycle of M_k: lift the 2-factor, then apply one preimage of
    every flipping cycle.  Raises LiftError with the cycle structure when a
    flipping cycle only lifts to a single long cycle that splits the result."""
    odd = assemble_hamilton_odd(k, cap)
    factor = uniform_two_factor(k)
    lifted = [lift_cycle(c) for c in factor.cycles]
    adj = _cycles_to_adjacency(lifted)
    cert = HamiltonCertificate(k, "middle", [], odd.hyperedges)
    for fc in odd.flips:
        lifts = flip_lifts(fc)
        applied = False
        for lift in lifts:
            m = len(lift)
            pairs = [(lift[i], lift[(i + 1) % m]) for i in range(m)]
            remove, add = pairs[0::2], pairs[1::2]
            if all(b in adj[a] for a, b in remove) and all(b not in adj[a] for a, b in add):
                _apply(adj, remove, add, fc.label)
                applied = True
                break
        if not applied:
            raise LiftError(LiftDiagnostic(k, fc.label, "no preimage of the flipping cycle fits", []))
        cert.flips.append(fc)
    start = lifted[0][0]
    cycle = _walk(adj, start)
    total = 2 * vertex_count(k)
    if len(cycle) != total:
        lengths = []
        seen: set[str] = set()
        for v in adj:
            if v not in seen:
                c = _walk(adj, v)
                seen.update(c)
                lengths.append(len(c))
        raise LiftError(LiftDiagnostic(k, "assembly", "the lifted flips leave several cycles", sorted(lengths)))
    cert.cycle = cycle
    return cert
