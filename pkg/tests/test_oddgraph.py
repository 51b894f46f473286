from math import comb

import pytest

import oracles
from dycknest.golden import lines, rows
from dycknest.oddgraph import (
    CapExceeded,
    anchor_class,
    appearance_profile,
    arc_color,
    arc_factorization,
    arc_neighbor,
    build_middle,
    build_odd,
    check_cap,
    flip_at,
    level,
    psi,
    to_inclusion,
    view,
)
from dycknest.rgs import catalan


@pytest.mark.parametrize("k", range(1, 6))
def test_odd_graph_matches_kneser(k):
    g = build_odd(k)
    ref = oracles.kneser(k)
    assert len(g.vertices) == comb(2 * k + 1, k) == len(ref)
    assert g.degree_set() == {k + 1}
    for v in g.vertices:
        assert {oracles.bits_to_set(w) for w in g.adjacency[v]} == ref[oracles.bits_to_set(v)]


def test_petersen_counts():
    g = build_odd(2)
    assert (len(g.vertices), g.edge_count(), g.degree_set()) == (10, 15, {3})


@pytest.mark.parametrize("k", range(1, 5))
def test_middle_graph_is_inclusion_after_relabelling(k):
    g = build_middle(k)
    assert len(g.vertices) == 2 * comb(2 * k + 1, k)
    edges = {frozenset((to_inclusion(u), to_inclusion(w))) for u, w in g.edges()}
    lower, upper = level(2 * k + 1, k), level(2 * k + 1, k + 1)
    ref = {
        frozenset((u, w)) for u in lower for w in upper
        if oracles.bits_to_set(u) <= oracles.bits_to_set(w)
    }
    assert edges == ref


@pytest.mark.parametrize("k", range(1, 5))
def test_psi_is_a_two_to_one_covering(k):
    g, odd = build_middle(k), build_odd(k)
    images = {}
    for v in g.vertices:
        images.setdefault(psi(v), []).append(v)
        assert sorted(psi(w) for w in g.adjacency[v]) == sorted(odd.adjacency[psi(v)])
    assert all(len(pre) == 2 for pre in images.values())
    assert set(images) == set(odd.vertices)


@pytest.mark.parametrize("k", range(1, 8))
def test_rotation_classes_partition_the_vertices(k):
    ours = {frozenset(anchor_class(n, k).words()) for n in range(catalan(k))}
    assert ours == {frozenset(c) for c in oracles.rotation_classes(k)}


def test_table_one_upper_half():
    for n, line in enumerate(lines("rotation_classes.txt")[:5]):
        assert set(anchor_class(n, 3).words()) == set(line.split(":")[1].split())


@pytest.mark.parametrize("k", range(1, 6))
def test_views_round_trip(k):
    for v in level(2 * k + 1, k):
        assert appearance_profile(view(v).nest) == v


@pytest.mark.parametrize("k", range(1, 6))
def test_arcs_are_supplementary_involutions(k):
    for v in level(2 * k + 1, k):
        chi = view(v).nest
        for j in range(k + 1):
            other = arc_neighbor(chi, j)
            assert arc_neighbor(other, k - j) == chi


@pytest.mark.parametrize("k", range(1, 7))
def test_arc_factorization_colors_every_vertex_once(k):
    coloring = arc_factorization(k)
    for v, arcs in coloring.items():
        assert sorted(arcs) == list(range(k + 1))
        for color, arc in arcs.items():
            assert arc_color(arc.head, arc.position) == k - color


def test_table_two_pairs():
    for top, p, bottom in rows("arc_neighbors.txt"):
        chi = tuple(map(int, top))
        u, w = appearance_profile(chi), appearance_profile(tuple(map(int, bottom)))
        assert flip_at(u, int(p)) == w
        assert int(top[int(p)]) + int(bottom[int(p)]) == 3


def test_table_two_typo_row_has_the_computed_binary_vertex():
    chi = (0, 1, 3, 3, 2, 2, 1)
    assert arc_neighbor(chi, 3) == (3, 1, 0, 2, 2, 1, 3)
    assert appearance_profile((2, 1, 0, 3, 3, 1, 2)) == appearance_profile((3, 1, 0, 2, 2, 1, 3))


def test_cap(monkeypatch):
    with pytest.raises(CapExceeded):
        build_odd(10)
    monkeypatch.setenv("DYCKNEST_MAX_K", "3")
    with pytest.raises(CapExceeded):
        check_cap(4)
    check_cap(3)


def test_bad_inputs():
    with pytest.raises(ValueError):
        flip_at("0011", 2)
    with pytest.raises(ValueError):
        view("0111")
    with pytest.raises(ValueError):
        build_odd(0)
