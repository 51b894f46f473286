"""Castling: growing every Dyck nest from its parent in the TRGS tree.

The child nest comes from the parent nest blown to the child's length:
split it as W|X|Y|Z with |W| = gamma - 1 and |Z| = gamma, where X opens
with some value x and Y starts at the next x + 1, then swap X and Y.

Clones record, for each value j < k, the number of arcs nested inside the
arc labelled j (half the distance between its two entries, rounded down).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .dyck import Nest, blow_nest, blow_to, nest_to_word, reduce_tight, render_nest
from .rgs import (
    ROOT,
    Trgs,
    catalan,
    gamma_of,
    iter_trgs,
    order_of_rank,
    parent_of,
    trgs_rank,
    trgs_unrank,
)


class CastlingError(ValueError):
    pass


@dataclass(frozen=True)
class Split:
    w: Nest
    x: Nest
    y: Nest
    z: Nest


def castle_split(parent: Sequence[int], gamma: int) -> Split:
    parent = tuple(parent)
    w, middle, z = parent[: gamma - 1], parent[gamma - 1 : len(parent) - gamma], parent[-gamma:]
    if not middle:
        raise CastlingError("nothing between W and Z")
    x0 = middle[0]
    try:
        cut = middle.index(x0 + 1, 1)
    except ValueError:
        raise CastlingError(
            f"no entry {x0 + 1} after X in {render_nest(parent)} (gamma={gamma})"
        ) from None
    return Split(w, middle[:cut], middle[cut:], z)


def castle_step(parent: Sequence[int], b: Trgs, k: int | None = None) -> Nest:
    """Child nest from the parent nest blown to length 2k."""
    gamma = gamma_of(b)
    if gamma is None:
        raise CastlingError("the root has no castling step")
    if k is not None:
        parent = blow_to(parent, k)
    s = castle_split(parent, gamma)
    return s.w + s.y + s.x + s.z


def peak_in_x(parent: Sequence[int], b: Trgs, k: int) -> bool:
    """Whether the top pair k k of the blown parent lies in X."""
    parent = blow_to(parent, k)
    s = castle_split(parent, gamma_of(b))
    return k in s.x


def encloses_peak(nest: Sequence[int], value: int) -> bool:
    """Whether the arc labelled ``value`` contains the top pair k k."""
    k = len(nest) // 2
    first = nest.index(value)
    second = len(nest) - 1 - nest[::-1].index(value)
    return first < nest.index(k) < second


# -- the table ---------------------------------------------------------------

@dataclass
class NestRow:
    n: int
    trgs: Trgs
    order: int  # lambda(n)
    tight: Nest
    blown: Nest

    @property
    def word(self) -> str:
        return nest_to_word(self.blown)


@dataclass
class NestTable:
    k: int
    rows: list[NestRow] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.rows)

    def __getitem__(self, n: int) -> NestRow:
        return self.rows[n]

    def words(self) -> list[str]:
        return [r.word for r in self.rows]

    def rank_of_word(self) -> dict[str, int]:
        return {r.word: r.n for r in self.rows}


def generate_table(k: int) -> NestTable:
    """All C_k nests of length 2k, indexed by TRGS rank."""
    if k < 1:
        raise ValueError("k must be positive")
    total = catalan(k)
    table = NestTable(k)
    blown: list[Nest] = []
    for n, b in enumerate(iter_trgs(total)):
        if n == 0:
            nest = blow_to((1, 1), k)
        else:
            nest = castle_step(blown[trgs_rank(parent_of(b))], b)
        blown.append(nest)
        table.rows.append(NestRow(n, b, order_of_rank(n), reduce_tight(nest), nest))
    return table


def iter_blown_nests(k: int) -> Iterator[tuple[Trgs, Nest]]:
    """Stream (TRGS, blown nest) in rank order keeping only the root path."""
    path: list[tuple[Trgs, Nest]] = []
    for n, b in enumerate(iter_trgs(catalan(k))):
        if n == 0:
            nest = blow_to((1, 1), k)
        else:
            parent = parent_of(b)
            while path[-1][0] != parent:
                path.pop()
            nest = castle_step(path[-1][1], b)
        path.append((b, nest))
        yield b, nest


def tight_nest(n: int) -> Nest:
    """F(n) at its own length 2 lambda(n), built by castling down the root path."""
    b = trgs_unrank(n)
    chain = []
    while not b.is_root():
        chain.append(b)
        b = parent_of(b)
    nest: Nest = (1, 1)
    for b in reversed(chain):
        nest = castle_step(nest, b, len(b) + 1)
    return nest


# -- clones ------------------------------------------------------------------

def arcs_inside(nest: Sequence[int]) -> dict[int, int]:
    first: dict[int, int] = {}
    out = {}
    for i, v in enumerate(nest):
        if v in first:
            out[v] = (i - first[v]) // 2
        else:
            first[v] = i
    return out


def clone_of(nest: Sequence[int]) -> tuple[int, ...]:
    """(sigma_{k-1}, ..., sigma_1), matching the printed order."""
    k = len(nest) // 2
    inside = arcs_inside(nest)
    return tuple(inside[j] for j in range(k - 1, 0, -1))


def render_clone(sigma: Sequence[int]) -> str:
    return render_nest(sigma) if sigma else ""


def clone_update(parent_sigma: Sequence[int], n: int, k: int | None = None) -> tuple[int, ...]:
    """Clone of F(n) from the clone of its parent: one entry changes."""
    b = trgs_unrank(n)
    if k is None:
        k = len(parent_sigma) + 1
    gamma = gamma_of(b)
    hv = h_of(n)
    value = k + hv.h if hv.depends_on_k else hv.h
    sigma = list(parent_sigma)
    sigma[len(sigma) - gamma] = value
    return tuple(sigma)


class CloneError(ValueError):
    pass


def clone_decode(sigma: Sequence[int], k: int) -> Nest:
    """Rebuild the nest: arcs are laid layer by layer, right to left, each
    spanning twice its clone entry plus two cells; the last arc is a peak."""
    if len(sigma) != k - 1:
        raise CloneError(f"clone of length {len(sigma)} does not fit k={k}")
    sizes = list(reversed(sigma)) + [0]  # sigma_1 first, sigma_k = 0
    nest = [0] * (2 * k)
    layer = [(0, 2 * k)]  # half-open free intervals, rightmost first
    label = 0
    while layer and label < k:
        next_layer = []
        for start, end in layer:
            while end > start:
                if label >= k:
                    raise CloneError("clone leaves cells unfilled")
                s = sizes[label]
                width = 2 * s + 2
                if s < 0 or width > end - start:
                    raise CloneError(f"arc {label + 1} of width {width} does not fit")
                label += 1
                nest[end - width] = nest[end - 1] = label
                if s:
                    next_layer.append((end - width + 1, end - 1))
                end -= width
        layer = next_layer
    if label != k or 0 in nest:
        raise CloneError("clone does not describe a complete nest")
    return tuple(nest)


# -- h values ----------------------------------------------------------------

@dataclass(frozen=True)
class HValue:
    n: int
    h: int
    depends_on_k: bool  # True when the arc labelled gamma(n) encloses the top pair

    def sigma(self, k: int) -> int:
        return k + self.h if self.depends_on_k else self.h


def h_of(n: int, k: int | None = None) -> HValue:
    """h(n) read off F(n) blown to length 2k (default lambda(n)).

    sigma_gamma counts the arcs inside the arc labelled gamma(n); it grows
    with k exactly when that arc encloses the top pair, and then h is
    sigma_gamma - k.
    """
    if n < 1:
        raise ValueError("h is defined for n >= 1")
    lam = order_of_rank(n)
    if k is None:
        k = lam
    if k < lam:
        raise ValueError(f"rank {n} needs k >= {lam}")
    return _h_from_nest(n, trgs_unrank(n), blow_to(tight_nest(n), k))


def _h_from_nest(n: int, b: Trgs, nest: Nest) -> HValue:
    k = len(nest) // 2
    gamma = gamma_of(b)
    sigma_g = arcs_inside(nest)[gamma]
    if encloses_peak(nest, gamma):
        return HValue(n, sigma_g - k, True)
    return HValue(n, sigma_g, False)


def h_sequence(k: int) -> list[HValue]:
    """h(1), ..., h(C_k - 1) in one pass over the nests of length 2k."""
    return [_h_from_nest(trgs_rank(b), b, nest) for b, nest in iter_blown_nests(k) if not b.is_root()]


# -- flips between related ranks ---------------------------------------------

def flip_source(r: int) -> tuple[int, str] | None:
    """The rank n that r is derived from, with the relation name.

    "prefix": b(r) = 1|b(n).  "bump": b(r) = 1 2 ... j a... from
    b(n) = 1 2 ... (j-1)(j-1) a....  None when neither applies.
    """
    big = trgs_unrank(r).big
    if len(big) >= 2 and big[1] == 1:
        return trgs_rank(Trgs(tuple(reversed(big[1:])))), "prefix"
    if len(big) >= 2 and big[1] == 2:
        j = 1
        while j < len(big) and big[j] == j + 1:
            j += 1
        src = list(big)
        src[j - 1] -= 1
        return trgs_rank(Trgs(tuple(reversed(src)))), "bump"
    return None


def flip_pairs(k: int) -> list[tuple[int, int, str]]:
    out = []
    for r in range(1, catalan(k)):
        src = flip_source(r)
        if src is not None:
            out.append((src[0], r, src[1]))
    return out


def peak_side(nest: Sequence[int]) -> str:
    """'left' or 'right' of the first entry 1, for the top pair k k."""
    k = len(nest) // 2
    return "left" if nest.index(k) < nest.index(1) else "right"


def side_of_first_one_changes(n: int, r: int) -> bool:
    """Whether the top pair crosses the first 1 between F(n) and F(r).

    Kept as a diagnostic: it does not predict the flip in general.
    """
    k = order_of_rank(r)
    return peak_side(blow_to(tight_nest(n), k)) != peak_side(blow_to(tight_nest(r), k))


def classify_flip(n: int, r: int) -> str:
    """'supplementary' if the top pair moves into or out of the arc labelled
    gamma between F(n) and F(r), else 'preserved'.

    Related ranks share gamma, so this compares the flavors of h(n), h(r)
    without reading the value of h(r).
    """
    src = flip_source(r)
    if src is None or src[0] != n:
        raise ValueError(f"ranks {n} and {r} are not related by a prefix or a bump")
    if n == 0:
        raise ValueError("h is undefined at the root")
    gamma = gamma_of(trgs_unrank(r))
    k = order_of_rank(r)
    before = encloses_peak(blow_to(tight_nest(n), k), gamma)
    after = encloses_peak(blow_to(tight_nest(r), k), gamma)
    return "supplementary" if before != after else "preserved"


def flipped_h(hn: HValue, r: int, kind: str) -> HValue:
    """h(r) from h(n): equal when preserved; otherwise the flavor flips and
    h moves by lambda(r) - 1 toward the other sign."""
    if kind == "preserved":
        return HValue(r, hn.h, hn.depends_on_k)
    if kind != "supplementary":
        raise ValueError(f"unknown flip kind {kind!r}")
    shift = order_of_rank(r) - 1
    h = hn.h - shift if hn.h >= 0 else hn.h + shift
    return HValue(r, h, not hn.depends_on_k)
