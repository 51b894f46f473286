import random

import pytest
from hypothesis import given, strategies as st

import oracles
from dycknest.dyck import (
    DyckWordError,
    NestError,
    OddLengthError,
    PrefixError,
    WeightError,
    blow_nest,
    blow_to,
    blow_word,
    dyck_words,
    is_nest,
    is_tight,
    nest_to_word,
    parse_nest,
    reduce_once,
    reduce_tight,
    render_nest,
    reversed_complement,
    validate_word,
    word_to_nest,
)


@pytest.mark.parametrize("k", range(0, 11))
def test_dyck_word_count(k):
    assert sum(1 for _ in dyck_words(k)) == oracles.catalan(k)


@pytest.mark.parametrize("k", range(1, 8))
def test_dyck_words_match_brute_force(k):
    assert list(dyck_words(k)) == oracles.dyck_words(k)


@pytest.mark.parametrize("k", range(1, 9))
def test_nests_match_layer_definition_and_round_trip(k):
    for w in dyck_words(k):
        nest = word_to_nest(w)
        assert nest == oracles.layer_nest(w)
        assert nest_to_word(nest) == w


def _random_word(rng, k):
    bits = ["0"] * (k + 1) + ["1"] * k
    rng.shuffle(bits)
    h, low, cut = 0, 0, 0
    for i, c in enumerate(bits):
        h += 1 if c == "0" else -1
        if h <= low:
            low, cut = h, i + 1
    return "".join(bits[cut:] + bits[:cut])[1:]


@given(st.integers(min_value=9, max_value=80), st.randoms(use_true_random=False))
def test_round_trip_large_words(k, rng):
    w = _random_word(rng, k)
    assert validate_word(w) == w
    nest = word_to_nest(w)
    assert nest == oracles.layer_nest(w)
    assert nest_to_word(nest) == w


@pytest.mark.parametrize("k", range(1, 9))
def test_reduce_once_undoes_blow(k):
    for w in dyck_words(k):
        nest = word_to_nest(w)
        blown = blow_nest(nest)
        assert reduce_once(blown) == nest
        assert is_nest(blown)
        assert blow_word(w) == nest_to_word(blown)


@pytest.mark.parametrize("k", range(1, 9))
def test_reduce_tight_undoes_blow_on_tight_nests(k):
    for w in dyck_words(k):
        nest = word_to_nest(w)
        if is_tight(nest):
            assert reduce_tight(blow_to(nest, k + 3)) == nest


def test_reduce_tight_can_go_below_a_blown_nest():
    # 1221 is itself blown from 11, so reducing a blow of it goes two steps
    assert reduce_tight(blow_nest((1, 2, 2, 1))) == (1, 1)


@pytest.mark.parametrize(
    "word, error",
    [("0", OddLengthError), ("0011x0", DyckWordError), ("0001", WeightError), ("1001", PrefixError)],
)
def test_word_errors(word, error):
    with pytest.raises(error):
        validate_word(word)


@pytest.mark.parametrize("nest", [(1, 2, 1, 2), (1, 1, 1, 1), (2, 2, 1, 1, 3), (1, 2, 2, 1)[::-1] + (3,)])
def test_bad_nests(nest):
    with pytest.raises(NestError):
        nest_to_word(nest)


def test_non_layer_labelling_is_rejected():
    # the right word but labels not assigned layer by layer
    with pytest.raises(NestError):
        nest_to_word((1, 1, 2, 2))


def test_render_and_parse():
    assert render_nest((1, 2, 2, 1)) == "1221"
    big = blow_to((1, 1), 10)
    assert render_nest(big).startswith("1,2,3")
    assert parse_nest(render_nest(big)) == big


def test_reversed_complement_is_an_involution():
    rng = random.Random(7)
    for _ in range(100):
        bits = "".join(rng.choice("01") for _ in range(15))
        assert reversed_complement(reversed_complement(bits)) == bits
