from functools import cache
from itertools import product

import pytest
from hypothesis import given, strategies as st

from yfjump.words import (
    ancestors,
    covers_down,
    covers_up,
    format_word,
    is_valid_tail,
    leq,
    parse_word,
    rank,
    stats,
    strip_common_suffix,
    words_of_rank,
    words_up_to_length,
)

from oracles import all_words, hasse_up

words = st.text(alphabet="12", max_size=8)


@pytest.mark.parametrize("text, word", [("e", ""), ("21", "21"), ("1", "1"), ("2121", "2121")])
def test_parse_word(text, word):
    assert parse_word(text) == word
    assert format_word(word) == text


@pytest.mark.parametrize("text", ["213", "", "a", "1 2", "E"])
def test_parse_word_rejects(text):
    with pytest.raises(ValueError):
        parse_word(text)


@given(words)
def test_parse_format_roundtrip(w):
    assert parse_word(format_word(w)) == w


@pytest.mark.parametrize("w, expected", [("", (0, 0, 0)), ("21", (3, 2, 1)), ("2121", (6, 4, 2))])
def test_stats(w, expected):
    assert stats(w) == expected


@given(words)
def test_rank_is_len_plus_twos(w):
    r, n, t = stats(w)
    assert r == n + t == sum(int(c) for c in w)


def test_covers_up_examples():
    assert covers_up("") == {"1"}
    assert covers_up("21") == {"121", "211", "22"}
    assert covers_up("2") == {"12", "21"}


def test_covers_up_matches_order_hasse_diagram():
    pool = all_words(9)
    for v in all_words(8):
        assert covers_up(v) == hasse_up(v, pool), v


def test_covers_down_examples():
    assert covers_down("22") == {"12", "21"}
    assert covers_down("1") == {""}
    assert covers_down("") == set()


def test_covers_down_inverts_covers_up():
    pool = all_words(8)
    for v in pool:
        assert covers_down(v) == {u for u in pool if v in covers_up(u)}


def test_one_differential():
    for n in range(11):
        for v in words_of_rank(n):
            assert len(covers_up(v)) - len(covers_down(v)) == 1


@pytest.mark.parametrize(
    "w, v, expected",
    [("1", "21", ("", "2")), ("12", "2", ("1", "")), ("2", "21", ("2", "21")), ("", "", ("", ""))],
)
def test_strip_common_suffix(w, v, expected):
    left, right, _ = strip_common_suffix(w, v)
    assert (left, right) == expected


@given(words, words)
def test_strip_reconstructs(w, v):
    left, right, suffix = strip_common_suffix(w, v)
    assert left + suffix == w and right + suffix == v
    assert not left or not right or left[-1] != right[-1]


def test_leq_examples():
    assert leq("1", "2")
    assert not leq("11", "2")
    for v in all_words(6):
        assert leq("", v)


@cache
def _reachable(v):
    out = {v}
    for u in covers_down(v):
        out |= _reachable(u)
    return frozenset(out)


def test_leq_agrees_with_chains_and_ancestors():
    pool = all_words(7)
    for v in pool:
        down = _reachable(v)
        anc = ancestors(v)
        for w in pool:
            assert leq(w, v) == (w in anc) == (w in down), (w, v)


def test_leq_is_a_partial_order():
    pool = all_words(7)
    rel = {(a, b) for a in pool for b in pool if leq(a, b)}
    assert all((a, a) in rel for a in pool)
    for a, b in rel:
        if rank(a) == rank(b):
            assert a == b
    for a, b in rel:
        for c in pool:
            if (b, c) in rel:
                assert (a, c) in rel


def test_ancestors_examples():
    assert ancestors("") == {""}
    assert ancestors("2") == {"", "1", "2"}
    assert ancestors("22") == {"", "1", "11", "12", "2", "21", "22"}


def test_ancestors_match_filter():
    for v in all_words(8):
        pool = all_words(rank(v))
        assert ancestors(v) == {u for u in pool if leq(u, v)}
        assert v in ancestors(v)


def test_words_of_rank_examples():
    assert list(words_of_rank(4)) == ["1111", "112", "121", "211", "22"]
    assert list(words_of_rank(0)) == [""]
    assert list(words_of_rank(4, 0)) == ["1111"]
    assert list(words_of_rank(5, 1)) == ["11111", "1112", "1121", "1211", "2111"]


def test_words_of_rank_fibonacci():
    a, b = 1, 1
    for n in range(16):
        ws = list(words_of_rank(n))
        assert len(ws) == a
        assert ws == sorted(ws) and len(set(ws)) == len(ws)
        a, b = b, a + b
    assert len(list(words_of_rank(15))) == 987


def test_words_of_rank_restricted_matches_filter():
    for n in range(10):
        for K in range(4):
            brute = sorted(
                "".join(d)
                for length in range(n + 1)
                for d in product("12", repeat=length)
                if rank("".join(d)) == n and d.count("2") <= K
            )
            assert list(words_of_rank(n, K)) == brute


def test_words_up_to_length():
    assert list(words_up_to_length(2, 1)) == ["", "1", "2", "11", "12", "21"]


@pytest.mark.parametrize(
    "v, K, ok",
    [("", 0, True), ("", 5, True), ("21", 1, True), ("12", 2, False), ("22", 1, False), ("2", 0, False)],
)
def test_is_valid_tail(v, K, ok):
    assert is_valid_tail(v, K) is ok
