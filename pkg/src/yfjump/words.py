"""Words over {1, 2}: statistics, cover relations and the Young-Fibonacci order.

A word is stored as a plain ``str`` of the characters ``'1'`` and ``'2'``; the
empty word is ``""``.  On the command line and in reports the empty word is
written ``"e"``.
"""
from __future__ import annotations

from functools import cache
from itertools import product
from typing import Iterator, NamedTuple

EMPTY = ""
EMPTY_TEXT = "e"

Word = str


class StrippedPair(NamedTuple):
    """The two words left after removing the longest common suffix."""

    left: Word
    right: Word
    suffix: Word


def parse_word(text: str) -> Word:
    """Read a word from its text form ("e" for the empty word)."""
    if text == EMPTY_TEXT:
        return EMPTY
    if not text:
        raise ValueError('empty string is not a word; use "e" for the empty word')
    bad = set(text) - {"1", "2"}
    if bad:
        raise ValueError(f"invalid digit(s) {''.join(sorted(bad))!r} in word {text!r}")
    return text


def format_word(w: Word) -> str:
    return w if w else EMPTY_TEXT


def rank(w: Word) -> int:
    return len(w) + w.count("2")


def twos(w: Word) -> int:
    return w.count("2")


def stats(w: Word) -> tuple[int, int, int]:
    """(rank, length, number of twos)."""
    t = w.count("2")
    return len(w) + t, len(w), t


def covers_up(v: Word) -> set[Word]:
    """Words covering ``v``: change the leftmost 1 into 2, or insert a 1
    anywhere to the left of the leftmost 1."""
    j = v.find("1")
    if j < 0:
        j = len(v)
    ups = {v[:i] + "1" + v[i:] for i in range(j + 1)}
    if j < len(v):
        ups.add(v[:j] + "2" + v[j + 1:])
    return ups


def covers_down(v: Word) -> set[Word]:
    """Words covered by ``v`` (the inverse of :func:`covers_up`)."""
    candidates = {v[:i] + v[i + 1:] for i, c in enumerate(v) if c == "1"}
    candidates |= {v[:i] + "1" + v[i + 1:] for i, c in enumerate(v) if c == "2"}
    return {u for u in candidates if v in covers_up(u)}


def strip_common_suffix(w: Word, v: Word) -> StrippedPair:
    """Remove the maximal common suffix of ``w`` and ``v``."""
    k = 0
    n = min(len(w), len(v))
    while k < n and w[-1 - k] == v[-1 - k]:
        k += 1
    if k == 0:
        return StrippedPair(w, v, EMPTY)
    return StrippedPair(w[:-k], v[:-k], w[-k:])


def order_gap(w: Word, v: Word) -> int:
    """``twos(v_w) - len(w_v)``; nonnegative exactly when ``w <= v``."""
    left, right, _ = strip_common_suffix(w, v)
    return right.count("2") - len(left)


def leq(w: Word, v: Word) -> bool:
    return order_gap(w, v) >= 0


@cache
def _ancestors(v: Word) -> frozenset[Word]:
    if not v:
        return frozenset({EMPTY})
    rest = _ancestors(v[1:])
    if v[0] == "1":
        return rest | {v}
    return frozenset({EMPTY} | {"1" + u for u in rest} | {"2" + u for u in rest})


def ancestors(v: Word) -> frozenset[Word]:
    """The down-set ``{u : u <= v}``, built digit by digit from the left."""
    return _ancestors(v)


def words_of_rank(n: int, K: int | None = None) -> Iterator[Word]:
    """All words of rank ``n`` with at most ``K`` twos, in lexicographic order.

    ``K=None`` means no restriction on the number of twos.
    """
    if n == 0:
        yield EMPTY
        return
    if K is not None and K < 0:
        return
    # lexicographic: words starting with '1' come before words starting with '2'
    for first in "12":
        d = int(first)
        if d > n:
            break
        sub_k = K if (K is None or first == "1") else K - 1
        if sub_k is not None and sub_k < 0:
            continue
        for tail in words_of_rank(n - d, sub_k):
            yield first + tail


def words_up_to_length(max_len: int, K: int | None = None) -> Iterator[Word]:
    """All words of length <= ``max_len`` (at most ``K`` twos), shortest first."""
    for length in range(max_len + 1):
        for digits in product("12", repeat=length):
            w = "".join(digits)
            if K is None or w.count("2") <= K:
                yield w


def is_valid_tail(v: Word, K: int) -> bool:
    """Whether ``v`` can index a central measure on the graph with at most ``K`` twos."""
    return v == EMPTY or (v[0] == "2" and v.count("2") <= K)
