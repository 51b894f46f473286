"""Tight restricted-growth strings and the tree they span.

A TRGS is an integer string a_m ... a_1 whose leading digit is 1 (or the
single digit 0 or 1) and which grows by at most one per step when read
left to right: a_j <= a_{j+1} + 1.  Prefixing zeros gives an RGS.  Ordered
lexicographically after zero-padding, the TRGSs of length below k are
exactly the first C_k ranks.

Digits are stored little-endian (a_1 first) because the tree operations
act on right-to-left positions; rendering is big-endian.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence


class RootError(ValueError):
    """Raised when an operation needs a parent or position the root lacks."""


@dataclass(frozen=True, order=False)
class Trgs:
    digits: tuple[int, ...]  # little-endian: digits[0] is a_1

    @classmethod
    def parse(cls, text: str | Sequence[int]) -> "Trgs":
        """Build from a big-endian string ("1220", "1,2,10") or digit sequence."""
        if isinstance(text, str):
            text = text.strip()
            parts = text.split(",") if "," in text else list(text)
            big = [int(p) for p in parts]
        else:
            big = [int(d) for d in text]
        if not is_trgs(big):
            raise ValueError(f"not a tight restricted-growth string: {text!r}")
        return cls(tuple(reversed(big)))

    @property
    def big(self) -> tuple[int, ...]:
        return tuple(reversed(self.digits))

    def __len__(self) -> int:
        return len(self.digits)

    def __getitem__(self, position: int) -> int:
        """Digit a_position (1-based, counted from the right); zero beyond the length."""
        if position < 1:
            raise IndexError(position)
        return self.digits[position - 1] if position <= len(self.digits) else 0

    def is_root(self) -> bool:
        return self.digits == (0,)

    def padded(self, length: int) -> tuple[int, ...]:
        """Big-endian digits with leading zeros up to ``length``."""
        if length < len(self.digits):
            raise ValueError("padding shorter than the string")
        return (0,) * (length - len(self.digits)) + self.big

    def __str__(self) -> str:
        if max(self.digits) > 9:
            return ",".join(map(str, self.big))
        return "".join(map(str, self.big))

    def __repr__(self) -> str:
        return f"Trgs({str(self)!r})"


ROOT = Trgs((0,))


def is_trgs(digits: Sequence[int]) -> bool:
    """True iff the big-endian sequence is a tight restricted-growth string."""
    digits = list(digits)
    if not digits or any((not isinstance(d, int)) or d < 0 for d in digits):
        return False
    if len(digits) == 1:
        return digits[0] in (0, 1)
    if digits[0] != 1:
        return False
    return all(b <= a + 1 for a, b in zip(digits, digits[1:]))


def is_rgs(digits: Sequence[int]) -> bool:
    """True iff the big-endian sequence is a TRGS with optional leading zeros."""
    digits = list(digits)
    i = 0
    while i < len(digits) - 1 and digits[i] == 0:
        i += 1
    return is_trgs(digits[i:])


# -- Catalan numbers ---------------------------------------------------------

_catalan = [1]


def catalan(k: int) -> int:
    """k-th Catalan number by the convolution C_{m+1} = sum C_j C_{m-j}.

    Python integers are unbounded, so there is no overflow bound; the
    value is cross-checked against (2k)! / (k! (k+1)!).
    """
    if k < 0:
        raise ValueError("catalan order must be nonnegative")
    while len(_catalan) <= k:
        m = len(_catalan) - 1
        _catalan.append(sum(_catalan[j] * _catalan[m - j] for j in range(m + 1)))
    value = _catalan[k]
    if value != comb(2 * k, k) // (k + 1):
        raise ArithmeticError(f"Catalan recursion disagrees with closed form at {k}")
    return value


def catalan_closed(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


# -- ranking -----------------------------------------------------------------

@lru_cache(maxsize=None)
def _completions(remaining: int, prev: int) -> int:
    """Number of digit strings of the given length continuing after digit ``prev``."""
    if remaining == 0:
        return 1
    return sum(_completions(remaining - 1, d) for d in range(prev + 2))


def order_of_rank(n: int) -> int:
    """lambda(n): the least k with n < C_k (with lambda(0) = 1)."""
    if n < 0:
        raise ValueError("rank must be nonnegative")
    k = 1
    while catalan(k) <= n:
        k += 1
    return k


def trgs_rank(b: Trgs | str) -> int:
    """Position of b in the lexicographic order of TRGSs."""
    if isinstance(b, str):
        b = Trgs.parse(b)
    elif not is_trgs(b.big):
        raise ValueError(f"not a tight restricted-growth string: {b}")
    # rank among RGSs of length m, counting strings with a smaller digit at
    # the first place they differ; a virtual zero sits above the leading digit
    digits = b.big
    rank, prev = 0, 0
    for i, d in enumerate(digits):
        remaining = len(digits) - i - 1
        rank += sum(_completions(remaining, e) for e in range(d))
        prev = d
    return rank


def trgs_unrank(n: int) -> Trgs:
    """The n-th TRGS (0-based) in lexicographic order."""
    if n < 0:
        raise ValueError("rank must be nonnegative")
    if n == 0:
        return ROOT
    length = order_of_rank(n) - 1  # strings of this length fill [C_length, C_{length+1})
    digits, prev, rest = [], 0, n
    for i in range(length):
        remaining = length - i - 1
        d = 0
        while True:
            block = _completions(remaining, d)
            if rest < block:
                break
            rest -= block
            d += 1
        if d > prev + 1:
            raise AssertionError("unranking overran the growth bound")
        digits.append(d)
        prev = d
    return Trgs(tuple(reversed(digits)))


def successor(b: Trgs) -> Trgs:
    """Next TRGS in lexicographic order (the tree's preorder)."""
    big = list(b.big)
    if b.is_root():
        return Trgs((1,))
    # increment the rightmost digit that can grow, zeroing everything after it
    for i in range(len(big) - 1, 0, -1):
        if big[i] + 1 <= big[i - 1] + 1:
            big[i] += 1
            for j in range(i + 1, len(big)):
                big[j] = 0
            return Trgs(tuple(reversed(big)))
    return Trgs(tuple(reversed([1] + [0] * len(big))))


def iter_trgs(count: int) -> Iterator[Trgs]:
    b = ROOT
    for _ in range(count):
        yield b
        b = successor(b)


# -- the tree T --------------------------------------------------------------

def gamma_of(b: Trgs) -> int | None:
    """1-based right-to-left position of the rightmost nonzero digit; None at the root."""
    for i, d in enumerate(b.digits, start=1):
        if d:
            return i
    return None


def parent_of(b: Trgs) -> Trgs:
    g = gamma_of(b)
    if g is None:
        raise RootError("the root TRGS 0 has no parent")
    if g == len(b):
        return ROOT
    digits = list(b.digits)
    digits[g - 1] -= 1
    return Trgs(tuple(digits))


def children_of(b: Trgs, k: int | None = None) -> list[Trgs]:
    """Children of b in lexicographic order.

    The root's children are 1, 10, 100, ...; ``k`` bounds their length by
    k - 1 and is required there.  Other vertices have gamma or gamma - 1
    children, all of their own length.
    """
    if b.is_root():
        if k is None:
            raise ValueError("children of the root need a blow length k")
        return [Trgs((0,) * i + (1,)) for i in range(max(k - 1, 0))]
    g = gamma_of(b)
    kids = []
    for j in range(1, g + 1):
        digits = list(b.digits)
        digits[j - 1] += 1
        if is_trgs(tuple(reversed(digits))):
            kids.append(Trgs(tuple(digits)))
    return kids


def gamma_rank(n: int) -> int | None:
    return gamma_of(trgs_unrank(n))


def parent_rank(n: int) -> int:
    return trgs_rank(parent_of(trgs_unrank(n)))


# -- threads and braids ------------------------------------------------------

@dataclass(frozen=True)
class Thread:
    head: int  # initial rank n_0
    length: int  # number of gamma = 1 followers
    gamma: int | None  # gamma of the head; None for the root

    @property
    def ranks(self) -> range:
        return range(self.head, self.head + self.length + 1)


@dataclass(frozen=True)
class ThreadPartition:
    k: int
    threads: tuple[Thread, ...]
    braids: tuple[tuple[int, ...], ...]  # thread indices grouped per braid


def thread_partition(k: int) -> ThreadPartition:
    """Split ranks [0, C_k) into threads (a head with gamma > 1 plus its gamma-1 run)
    and braids (a head with gamma > 2 plus every later rank with gamma <= 2)."""
    if k < 2:
        raise ValueError("threads need k >= 2")
    total = catalan(k)
    gammas = [None] + [gamma_of(b) for b in list(iter_trgs(total))[1:]]
    threads, braids = [], []
    for n, g in enumerate(gammas):
        if g is None or g > 1:
            threads.append([n, 0, g])
            if g is None or g > 2:
                braids.append([])
            braids[-1].append(len(threads) - 1)
        else:
            threads[-1][1] += 1
    return ThreadPartition(
        k,
        tuple(Thread(*t) for t in threads),
        tuple(tuple(b) for b in braids),
    )
