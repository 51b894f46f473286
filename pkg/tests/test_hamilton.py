import json
from math import comb

import pytest

import oracles
from dycknest.dyck import is_dyck, reversed_complement
from dycknest.export import dumps, hamilton_document
from dycknest.golden import rows
from dycknest.hamilton import (
    HamiltonError,
    Member,
    S3,
    assemble_hamilton_odd,
    flipping_cycle,
    lift_hamilton_middle,
    locate_pattern,
    s1,
    spanning_tree,
    tree_t,
)
from dycknest.rgs import catalan
from dycknest.twofactor import uniform_two_factor
from dycknest.validate import check_hamilton


def _printed_trees():
    return {int(r[0]): {frozenset(int(c, 16) for c in e) for e in r[1:]} for r in rows("hyperedges.txt")}


@pytest.mark.parametrize("k", [3, 4])
def test_trees_match_printed_hyperedges(k):
    assert {frozenset(e) for e in spanning_tree(k).rank_sets()} == _printed_trees()[k]


@pytest.mark.parametrize("k", range(3, 8))
def test_tree_spans_with_the_right_arity(k):
    tree = spanning_tree(k)  # raises unless conflict-free, acyclic and spanning
    assert sum(len(e.ranks) - 1 for e in tree.edges) == catalan(k) - 1
    assert set().union(*map(set, tree.rank_sets())) == set(range(catalan(k)))


@pytest.mark.parametrize("k", range(3, 8))
def test_tree_members_are_dyck_words(k):
    for e in tree_t(k):
        for m in e.members:
            assert len(m.word) == 2 * k and is_dyck(m.word)
            assert 0 <= m.phi < 2 * k


@pytest.mark.parametrize("k", range(3, 8))
def test_shared_lists_use_distinct_positions(k):
    used = {}
    for e in spanning_tree(k).edges:
        for r, p in zip(e.ranks, e.positions):
            used.setdefault(r, []).append(p)
    assert all(len(ps) == len(set(ps)) for ps in used.values())


def test_pattern_sets():
    assert [m.word for m in s1().members] == ["000111", "001101", "001011"]
    assert [m.word for m in s1("01").members] == ["00100111", "00101101", "00101011"]
    under = S3.underline()
    assert [m.word for m in under.members] == [reversed_complement(m.word) for m in S3.members]
    assert [m.phi for m in under.members] == [5 - m.phi for m in S3.members]
    with pytest.raises(ValueError):
        s1("10")


def test_locate_pattern_finds_members_in_context():
    # 000111 is the first member of S1, S3 and S4; after a 01 prefix it sits at an even offset
    hits = [e for e in locate_pattern("01000111") if e.prefix == 2 and e.role in ("S1[0]", "S3[0]", "S4[0]")]
    assert {e.role for e in hits} == {"S1[0]", "S3[0]", "S4[0]"}
    assert all(e.parity_ok for e in hits)


@pytest.mark.parametrize("k", range(3, 6))
def test_flipping_cycles_alternate(k):
    factor = uniform_two_factor(k)
    base = set()
    for cyc in factor.cycles:
        for i, v in enumerate(cyc):
            w = cyc[(i + 1) % len(cyc)]
            base |= {(v, w), (w, v)}
    for e in spanning_tree(k).edges:
        fc = flipping_cycle(e, k)
        assert len(fc.vertices) == 2 * len(e.ranks)
        assert all(t in base for t in fc.tuple_edges())
        for a, b in fc.links():
            assert (a, b) not in base
            assert not oracles.bits_to_set(a) & oracles.bits_to_set(b)


@pytest.mark.parametrize("k", range(3, 8))
def test_hamilton_cycle_in_odd_graph(k):
    cert = assemble_hamilton_odd(k)
    cyc = cert.cycle
    assert len(cyc) == len(set(cyc)) == comb(2 * k + 1, k)
    for i, v in enumerate(cyc):
        assert not oracles.bits_to_set(v) & oracles.bits_to_set(cyc[(i + 1) % len(cyc)])
    assert check_hamilton(json.loads(dumps(hamilton_document(cert)))).ok


@pytest.mark.parametrize("k", range(3, 7))
def test_each_flip_merges_its_lists(k):
    cert = assemble_hamilton_odd(k, track_components=True)
    count = catalan(k)
    for e, after in zip(cert.hyperedges, cert.components_after):
        assert after == count - (len(e.ranks) - 1)
        count = after
    assert count == 1


@pytest.mark.parametrize("k", range(3, 6))
def test_hamilton_cycle_in_middle_levels(k):
    cert = lift_hamilton_middle(k)
    assert len(cert.cycle) == 2 * comb(2 * k + 1, k)
    assert check_hamilton(json.loads(dumps(hamilton_document(cert)))).ok


def test_small_k_is_rejected():
    with pytest.raises(HamiltonError):
        assemble_hamilton_odd(2)


def test_member_underline_is_an_involution():
    m = Member("00101101", 3)
    assert m.underline().underline() == m
