"""Dyck words, Dyck nests, blowing and reduction.

Words are strings over {0, 1} with 0 an up-step and 1 a down-step; every
prefix holds at least as many 0s as 1s.  A nest relabels the steps by
path layer: layers are numbered bottom-up, and within a layer the arcs
(an up-step with its matching down-step) are numbered right to left, so
each value 1..k appears exactly twice.
"""

from __future__ import annotations

from typing import Iterator, Sequence

Nest = tuple[int, ...]


class DyckWordError(ValueError):
    pass


class OddLengthError(DyckWordError):
    pass


class WeightError(DyckWordError):
    pass


class PrefixError(DyckWordError):
    pass


class NestError(ValueError):
    pass


def validate_word(bits: str) -> str:
    """Return ``bits`` if it is a Dyck word (the empty word included)."""
    if any(c not in "01" for c in bits):
        raise DyckWordError(f"non-binary symbol in {bits!r}")
    if len(bits) % 2:
        raise OddLengthError(f"odd length {len(bits)}")
    if bits.count("1") != len(bits) // 2:
        raise WeightError(f"weight {bits.count('1')} differs from {len(bits) // 2}")
    height = 0
    for i, c in enumerate(bits):
        height += 1 if c == "0" else -1
        if height < 0:
            raise PrefixError(f"prefix of length {i + 1} has more 1s than 0s")
    return bits


def is_dyck(bits: str) -> bool:
    try:
        validate_word(bits)
    except DyckWordError:
        return False
    return True


def dyck_words(k: int) -> Iterator[str]:
    """All Dyck words of length 2k in lexicographic order."""
    def grow(prefix: str, ups: int, downs: int) -> Iterator[str]:
        if ups == k and downs == k:
            yield prefix
            return
        if ups < k:
            yield from grow(prefix + "0", ups + 1, downs)
        if downs < ups:
            yield from grow(prefix + "1", ups, downs + 1)
    yield from grow("", 0, 0)


def matching(bits: str) -> list[int]:
    """Partner index of every step of a Dyck word."""
    mate = [0] * len(bits)
    stack = []
    for i, c in enumerate(bits):
        if c == "0":
            stack.append(i)
        else:
            j = stack.pop()
            mate[i], mate[j] = j, i
    return mate


def heights(bits: str) -> list[int]:
    """Height of the path before each step."""
    out, h = [], 0
    for c in bits:
        out.append(h)
        h += 1 if c == "0" else -1
    return out


def word_to_nest(bits: str) -> Nest:
    validate_word(bits)
    mate = matching(bits)
    level = heights(bits)
    ups = [i for i, c in enumerate(bits) if c == "0"]
    # bottom layer first, right to left inside a layer
    ups.sort(key=lambda i: (level[i], -i))
    nest = [0] * len(bits)
    for value, i in enumerate(ups, start=1):
        nest[i] = nest[mate[i]] = value
    return tuple(nest)


def nest_to_word(nest: Sequence[int]) -> str:
    """First appearance of a value becomes 0, second becomes 1."""
    seen = set()
    out = []
    for v in nest:
        out.append("1" if v in seen else "0")
        seen.add(v)
    bits = "".join(out)
    k = len(nest) // 2
    if sorted(nest) != sorted(list(range(1, k + 1)) * 2):
        raise NestError(f"values of {render_nest(nest)} are not 1..{k} twice each")
    try:
        validate_word(bits)
    except DyckWordError as exc:
        raise NestError(f"{render_nest(nest)} does not encode a Dyck word") from exc
    if word_to_nest(bits) != tuple(nest):
        raise NestError(f"{render_nest(nest)} is not layer-labelled")
    return bits


def is_nest(nest: Sequence[int]) -> bool:
    try:
        nest_to_word(nest)
    except NestError:
        return False
    return True


def blow_nest(nest: Sequence[int]) -> Nest:
    """Insert (k+1)(k+1) between the two adjacent k entries."""
    nest = tuple(nest)
    k = len(nest) // 2
    i = nest.index(k)
    if nest[i + 1] != k:
        raise NestError("largest value does not form a peak")
    return nest[: i + 1] + (k + 1, k + 1) + nest[i + 1 :]


def blow_to(nest: Sequence[int], k: int) -> Nest:
    nest = tuple(nest)
    while len(nest) < 2 * k:
        nest = blow_nest(nest)
    return nest


def blow_word(bits: str) -> str:
    nest = blow_nest(word_to_nest(bits))
    return nest_to_word(nest)


def reduce_once(nest: Sequence[int]) -> Nest | None:
    """Undo one blow if the peak k k sits inside an arc labelled k-1."""
    nest = tuple(nest)
    k = len(nest) // 2
    if k < 2:
        return None
    i = nest.index(k)
    if i > 0 and i + 2 < len(nest) and nest[i - 1] == k - 1 and nest[i + 2] == k - 1:
        return nest[:i] + nest[i + 2 :]
    return None


def reduce_tight(nest: Sequence[int]) -> Nest:
    nest = tuple(nest)
    while (smaller := reduce_once(nest)) is not None:
        nest = smaller
    return nest


def is_tight(nest: Sequence[int]) -> bool:
    return reduce_once(nest) is None


def reversed_complement(bits: str) -> str:
    return "".join("1" if c == "0" else "0" for c in reversed(bits))


def render_nest(nest: Sequence[int]) -> str:
    """Contiguous digits when every value is a single digit, commas otherwise."""
    if nest and max(nest) > 9:
        return ",".join(map(str, nest))
    return "".join(map(str, nest))


def parse_nest(text: str) -> Nest:
    parts = text.split(",") if "," in text else list(text)
    return tuple(int(p) for p in parts)
