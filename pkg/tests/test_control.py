import pytest
from hypothesis import given, strategies as st

import oracles
from dycknest.castling import h_of
from dycknest.control import STAR, XiError, j_prefix, recreate_h, render_entries, triangle_line, xi_build
from dycknest.golden import lines
from dycknest.rgs import catalan, gamma_rank


@pytest.mark.parametrize("k", range(1, 9))
def test_prefix_values_are_the_gamma_sequence(k):
    jp = j_prefix(k)
    assert len(jp.entries) == catalan(k)
    assert jp.alphas() == (None,) + tuple(gamma_rank(n) for n in range(1, catalan(k)))


@pytest.mark.parametrize("k", range(1, 9))
def test_prefix_blocks_follow_the_reversed_triangle(k):
    assert j_prefix(k).block_sizes() == triangle_line(k - 1)


def test_triangle_lines_match_the_table():
    assert [" ".join(map(str, triangle_line(k))) for k in range(8)] == lines("catalan_triangle.txt")


@given(st.integers(min_value=0, max_value=40))
def test_triangle_matches_ballot_formula(k):
    line = triangle_line(k)
    assert list(line) == oracles.triangle(k)
    if k:
        assert line[0] == line[1] == oracles.catalan(k)


def test_k_one_prefix_is_the_star_alone():
    assert j_prefix(1).entries == (STAR,)


def test_small_xi_strings():
    assert render_entries(xi_build(1, 3).entries) == "1_3"
    # xi_2^2 covers ranks 2..4 of the gamma sequence
    assert xi_build(2, 2).alphas() == tuple(gamma_rank(n) for n in range(2, 5))
    assert render_entries(xi_build(2, 2).entries) == "2_11_11_2"


@given(st.integers(min_value=1, max_value=6), st.integers(min_value=0, max_value=3))
def test_xi_starts_with_its_gamma(a, extra):
    x = xi_build(a, a + extra)
    assert x.alphas()[0] == a
    assert max(x.alphas()) == a


def test_xi_rejects_bad_indices():
    with pytest.raises(XiError):
        xi_build(0, 3)
    with pytest.raises(XiError):
        xi_build(4, 3)


@pytest.mark.parametrize("k", range(2, 8))
def test_recreate_h_matches_direct_values(k):
    steps = recreate_h(k, check=False)
    assert [s.value for s in steps] == [h_of(n) for n in range(1, catalan(k))]


def test_recreate_rule_counts_at_seven():
    rules = [s.rule for s in recreate_h(7)]
    assert (rules.count("preserved"), rules.count("supplementary"), rules.count("copy"), rules.count("tail")) == (
        231, 132, 59, 6,
    )
