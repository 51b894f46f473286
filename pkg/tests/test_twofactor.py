from math import comb

import pytest

import oracles
from dycknest.dyck import reversed_complement
from dycknest.golden import rows
from dycknest.oddgraph import build_middle, build_odd, view
from dycknest.rgs import catalan
from dycknest.twofactor import (
    lift_two_factor,
    permutation_of,
    uniform_two_factor,
    vertical_list,
    word_permutation,
)


def test_table_three():
    for k, b, p, pi in rows("column_permutations.txt"):
        perm = permutation_of(b, int(k))
        assert "".join(map(str, perm.p)) == p
        assert "".join(map(str, perm.pi)) == pi


def test_permutation_is_a_permutation():
    for w in oracles.dyck_words(5):
        perm = word_permutation(w)
        assert sorted(perm.p) == list(range(1, 11))
        assert all(perm.p[perm.pi[i] - 1] == i + 1 for i in range(10))


@pytest.mark.parametrize("k", range(1, 8))
def test_vertical_lists_close_with_every_position_once(k):
    odd = build_odd(k) if k <= 5 else None
    for n in range(catalan(k)):
        vl = vertical_list(n, k)
        assert sorted(vl.positions) == list(range(2 * k + 1))
        for u, w, _ in vl.edges():
            assert not oracles.bits_to_set(u) & oracles.bits_to_set(w)
            if odd:
                assert w in odd.adjacency[u]


@pytest.mark.parametrize("k", range(1, 8))
def test_uniform_two_factor_partitions(k):
    factor = uniform_two_factor(k)
    assert len(factor.cycles) == catalan(k)
    assert all(len(c) == 2 * k + 1 for c in factor.cycles)
    verts = [v for c in factor.cycles for v in c]
    assert len(verts) == len(set(verts)) == comb(2 * k + 1, k)


def _vertical_lists():
    out = {}
    for k, n, nest, sub in rows("vertical_lists.txt"):
        out.setdefault((int(k), int(n)), []).append((nest, sub))
    return out


@pytest.mark.parametrize("k, n", [(1, 0), (2, 1), (3, 0), (3, 1), (3, 2), (3, 3), (3, 4)])
def test_table_four_positions(k, n):
    printed = [int(sub[0]) for _, sub in _vertical_lists()[(k, n)]]
    assert list(vertical_list(n, k).positions) == printed


@pytest.mark.parametrize("k, n", [(1, 0), (2, 1), (3, 1), (3, 2), (3, 3)])
def test_table_four_rows(k, n):
    vl = vertical_list(n, k)
    for (nest, sub), row in zip(_vertical_lists()[(k, n)], vl.rows):
        v = view(row)
        assert "".join(map(str, v.nest)) == nest
        if k == 3:
            assert f"{v.rank}{v.right_shift}" == sub[1:]


def test_table_four_k2_first_list_forced_rows():
    # positions 1, 3, 2, 4, 0 from 00011 force these vertices; the printed
    # rows 1 and 4 (21101, 21102) are not this walk, and 21101 is no nest
    vl = vertical_list(0, 2)
    assert vl.rows == ("00011", "10100", "01001", "10010", "01100")
    printed = [nest for nest, _ in _vertical_lists()[(2, 0)]]
    assert sorted(printed[1]) != sorted("01122")
    ours = ["".join(map(str, view(r).nest)) for r in vl.rows]
    assert [ours[i] for i in (0, 2, 3)] == [printed[i] for i in (0, 2, 3)]
    assert printed[4] == ours[1]


@pytest.mark.parametrize("k", range(1, 6))
def test_lift_two_factor(k):
    lifted = lift_two_factor(k)
    middle = build_middle(k)
    assert len(lifted.cycles) == catalan(k)
    seen = set()
    for cyc in lifted.cycles:
        assert len(cyc) == 2 * (2 * k + 1)
        members = set(cyc)
        assert all(reversed_complement(w) in members for w in cyc)
        for i, v in enumerate(cyc):
            assert cyc[(i + 1) % len(cyc)] in middle.adjacency[v]
        seen |= members
    assert len(seen) == len(middle.vertices)


def test_rank_out_of_range():
    with pytest.raises(ValueError):
        vertical_list(5, 3)
    with pytest.raises(ValueError):
        permutation_of("1000", 3)
