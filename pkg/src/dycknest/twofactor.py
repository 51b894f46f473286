"""Column permutations, vertical lists and the uniform 2-factor of O_k.

The permutation of a Dyck word: number its positions 1..2k, then for every
matched pair, outermost first, reverse the numbers lying between (and on)
its two steps.  The resulting sequence is p and pi is its inverse.

The vertical list of class n starts at the anchored word 0f^k(n) and flips
at the positions given by pi read backwards and then 0, all counted from
the left of the anchored string.  The walk closes into a (2k+1)-cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .castling import generate_table
from .dyck import matching, reversed_complement, validate_word
from .oddgraph import check_cap, flip_at, level, middle_adjacent, psi, view
from .rgs import Trgs, catalan, trgs_rank


@dataclass(frozen=True)
class ColumnPermutation:
    p: tuple[int, ...]
    pi: tuple[int, ...]

    @property
    def rev_pi(self) -> tuple[int, ...]:
        return self.pi[::-1]


def word_permutation(bits: str) -> ColumnPermutation:
    validate_word(bits)
    mate = matching(bits)
    seq = list(range(1, len(bits) + 1))
    for i, c in enumerate(bits):  # left to right visits parents before children
        if c == "0":
            j = mate[i]
            seq[i : j + 1] = seq[i : j + 1][::-1]
    pi = [0] * len(seq)
    for place, value in enumerate(seq, start=1):
        pi[value - 1] = place
    return ColumnPermutation(tuple(seq), tuple(pi))


def permutation_of(b: Trgs | str, k: int) -> ColumnPermutation:
    """Permutation of the k-blown word of TRGS b (given padded or not)."""
    if isinstance(b, str):
        b = b.lstrip("0") or "0"
        b = Trgs.parse(b)
    n = trgs_rank(b)
    if n >= catalan(k):
        raise ValueError(f"{b} does not fit k={k}")
    return word_permutation(_words(k)[n])


@lru_cache(maxsize=16)
def _words(k: int) -> tuple[str, ...]:
    return tuple(generate_table(k).words())


@dataclass(frozen=True)
class VerticalList:
    n: int
    k: int
    rows: tuple[str, ...]  # v_0 ... v_{2k}
    positions: tuple[int, ...]  # positions[i] is flipped from rows[i]; the last closes

    def nests(self) -> list[tuple[int, ...]]:
        return [view(r).nest for r in self.rows]

    def edges(self) -> list[tuple[str, str, int]]:
        m = len(self.rows)
        return [(self.rows[i], self.rows[(i + 1) % m], self.positions[i]) for i in range(m)]


class ClosureError(AssertionError):
    pass


def vertical_list(n: int, k: int) -> VerticalList:
    if not 0 <= n < catalan(k):
        raise ValueError(f"rank {n} is outside [0, C_{k})")
    word = _words(k)[n]
    perm = word_permutation(word)
    positions = perm.rev_pi + (0,)
    rows = ["0" + word]
    for p in positions[:-1]:
        rows.append(flip_at(rows[-1], p))
    if flip_at(rows[-1], 0) != rows[0]:
        raise ClosureError(f"list {n} for k={k} does not close at position 0")
    if len(set(rows)) != len(rows):
        raise ClosureError(f"list {n} for k={k} repeats a row")
    return VerticalList(n, k, tuple(rows), positions)


@dataclass(frozen=True)
class TwoFactor:
    k: int
    cycles: tuple[tuple[str, ...], ...]


class PartitionError(AssertionError):
    pass


def uniform_two_factor(k: int, cap: int | None = None) -> TwoFactor:
    if k < 1:
        raise ValueError("k must be positive")
    check_cap(k, cap)
    cycles = tuple(vertical_list(n, k).rows for n in range(catalan(k)))
    seen: dict[str, int] = {}
    for i, cyc in enumerate(cycles):
        for v in cyc:
            if v in seen:
                raise PartitionError(f"{v} lies on lists {seen[v]} and {i}")
            seen[v] = i
    missing = len(level(2 * k + 1, k)) - len(seen)
    if missing:
        raise PartitionError(f"{missing} vertices are not covered")
    return TwoFactor(k, cycles)


def lift_cycle(cycle: tuple[str, ...]) -> tuple[str, ...]:
    """Preimage of an odd cycle of O_k in M_k, walked from its first vertex."""
    out = [cycle[0]]
    m = len(cycle)
    for step in range(1, 2 * m):
        v = cycle[step % m]
        cur = out[-1]
        options = [w for w in (v, reversed_complement(v)) if middle_adjacent(cur, w)]
        if len(options) != 1:
            raise AssertionError(f"ambiguous lift at {v}")
        out.append(options[0])
    if not middle_adjacent(out[-1], out[0]):
        raise AssertionError("lift does not close")
    return tuple(out)


def lift_two_factor(k: int, cap: int | None = None) -> TwoFactor:
    """Lifted cycles; an odd cycle always lifts to one cycle of twice its length."""
    factor = uniform_two_factor(k, cap)
    lifted = []
    for cyc in factor.cycles:
        lift = lift_cycle(cyc)
        if len(set(lift)) != len(lift):
            raise PartitionError("a lifted cycle splits into two")
        members = set(lift)
        if any(reversed_complement(w) not in members for w in lift):
            raise PartitionError("a lifted cycle misses an opposite vertex")
        if any(psi(w) != cyc[i % len(cyc)] for i, w in enumerate(lift)):
            raise AssertionError("lift does not project onto its cycle")
        lifted.append(lift)
    return TwoFactor(k, tuple(lifted))
