"""Control strings for the gamma sequence and the h values.

xi strings are built recursively: xi_1^c is the single entry 1_c, and for
a >= 2

    xi_a^c = a_{c-a+1} | 1_1 | xi_2^2 ... xi_{a-1}^{a-1} | xi_{a-1}^a ... xi_{a-1}^c.

Concatenating * | xi_1^1 | xi_2^2 | ... gives a string J whose value
projection is the gamma sequence of the TRGS order.  Its first C_k entries
split into blocks whose sizes form the reversed Catalan triangle line.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Union

from .castling import HValue, classify_flip, flip_source, flipped_h, h_sequence
from .rgs import Trgs, catalan, trgs_rank, trgs_unrank

Entry = tuple[int, int]  # (alpha, beta): value and disambiguator
STAR: Entry = (0, 0)  # the leading * of J
Tree = list[Union[Entry, "Tree"]]


class XiError(ValueError):
    pass


@dataclass(frozen=True)
class XiString:
    gamma: int
    bound: int
    entries: tuple[Entry, ...]

    def alphas(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return render_entries(self.entries)


def render_entries(entries) -> str:
    return "".join("*" if e == STAR else f"{e[0]}_{e[1]}" for e in entries)


@lru_cache(maxsize=None)
def _tree(a: int, c: int) -> tuple:
    if a == 1:
        return ((1, c),)
    parts: list = [(a, c - a + 1), (1, 1)]
    parts += [_tree(j, j) for j in range(2, a)]
    parts += [_tree(a - 1, j) for j in range(a, c + 1)]
    return tuple(parts)


def _flatten(tree) -> list[Entry]:
    out: list[Entry] = []
    stack = [tree]
    # iterative walk; tuples of length 2 holding ints are entries
    while stack:
        node = stack.pop()
        if _is_entry(node):
            out.append(node)
        else:
            stack.extend(reversed(node))
    return out


def _is_entry(node) -> bool:
    return len(node) == 2 and isinstance(node[0], int)


def xi_build(gamma: int, bound: int) -> XiString:
    """xi_gamma^bound; gamma = 1 is allowed and gives the single entry 1_bound."""
    if gamma < 1 or bound < gamma:
        raise XiError(f"need 1 <= gamma <= bound, got gamma={gamma}, bound={bound}")
    return XiString(gamma, bound, tuple(_flatten(_tree(gamma, bound))))


@dataclass(frozen=True)
class JPrefix:
    k: int
    entries: tuple[Entry, ...]
    blocks: tuple[tuple[Entry, ...], ...]

    def alphas(self) -> tuple[int | None, ...]:
        return tuple(None if e == STAR else e[0] for e in self.entries)

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)


def j_prefix(k: int) -> JPrefix:
    """The first C_k entries of J with their block split.

    The first block is the prefix of size C_{k-1}; the rest is
    xi_{k-1}^{k-1}, peeled by cutting off all parts but the last and
    descending into that last part until a single entry is left.
    """
    if k < 1:
        raise ValueError("k must be positive")
    head: list[Entry] = [STAR]
    for a in range(1, k - 1):
        head += _flatten(_tree(a, a))
    if k == 1:
        return JPrefix(1, (STAR,), ((STAR,),))
    blocks = [tuple(head)]
    node = _tree(k - 1, k - 1)
    while len(node) > 1:
        blocks.append(tuple(_flatten(node[:-1])))
        node = node[-1]
    blocks.append(tuple(_flatten(node)))
    entries = tuple(e for b in blocks for e in b)
    if len(entries) != catalan(k):
        raise AssertionError(f"J prefix has {len(entries)} entries, expected C_{k}")
    return JPrefix(k, entries, tuple(blocks))


# -- Catalan's triangle, reversed ----------------------------------------------

@lru_cache(maxsize=None)
def _ballot(n: int, j: int) -> int:
    """Catalan's triangle entry by the additive rule; zero outside 0 <= j <= n."""
    if j < 0 or j > n:
        return 0
    if j == 0:
        return 1
    return _ballot(n, j - 1) + _ballot(n - 1, j)


def triangle_line(k: int) -> tuple[int, ...]:
    """Line k of the reversed triangle: (tau_k^k, ..., tau_0^k)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    line = tuple(_ballot(k, j) for j in range(k, -1, -1))
    closed = tuple(comb(k + j, j) * (k - j + 1) // (k + 1) for j in range(k, -1, -1))
    if line != closed:
        raise ArithmeticError(f"triangle line {k} disagrees with the closed form")
    return line


# -- stepwise h ----------------------------------------------------------------

@dataclass(frozen=True)
class HStep:
    n: int
    value: HValue
    rule: str  # "tail", "copy", "preserved" or "supplementary"
    source: int | None


class RecreateError(AssertionError):
    pass


def _strip_ten(b: Trgs) -> int | None:
    """For b = 1 0...0 c with c nonempty, the rank of c; None when c is empty."""
    rest = list(b.big[1:])
    while rest and rest[0] == 0:
        rest.pop(0)
    return trgs_rank(Trgs(tuple(reversed(rest)))) if rest else None


def recreate_h(k: int, check: bool = True) -> list[HStep]:
    """h(1), ..., h(C_k - 1) derived stepwise in rank order.

    Ranks with second digit 1 or 2 come from an earlier rank by a prefix or
    bump relation and inherit h through the flip law; ranks 1 0...0 c copy
    h(c); strings 1 0...0 have h = 0.  With ``check`` the result is compared
    against the direct computation and the first divergence is raised.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    steps: dict[int, HStep] = {}
    for r in range(1, catalan(k)):
        src = flip_source(r)
        if src is not None and src[0] > 0:
            n, _ = src
            kind = classify_flip(n, r)
            steps[r] = HStep(r, flipped_h(steps[n].value, r, kind), kind, n)
            continue
        c = _strip_ten(trgs_unrank(r)) if src is None else None
        if c is None:
            steps[r] = HStep(r, HValue(r, 0, False), "tail", None)
        else:
            v = steps[c].value
            steps[r] = HStep(r, HValue(r, v.h, v.depends_on_k), "copy", c)
    out = [steps[r] for r in range(1, catalan(k))]
    if check:
        for step, direct in zip(out, h_sequence(k)):
            if step.value != direct:
                raise RecreateError(
                    f"rank {step.n}: stepwise {step.value.h} ({step.rule}) vs direct {direct.h}"
                )
    return out
