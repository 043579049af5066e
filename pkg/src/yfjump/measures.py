"""Central measures on jump-graph paths over words with at most ``K`` twos.

A measure is named by a tail word (empty, or starting with 2) and a rational
``p`` in ``(0, 1]``.  ``mu(params, w, l)`` is the probability that a random
path passes through ``(w, l)``.  Everything here is exact; ``Fraction`` is the
only number type apart from the counts themselves.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Iterator, NamedTuple, Sequence

from .counting import jump_paths_closed
from .poly import q_eps, q_gen
from .words import EMPTY, Word, ancestors, format_word, is_valid_tail, order_gap, twos

DEFAULT_MAX_LEN = 60
DEFAULT_TOL = Fraction(1, 10**6)


@dataclass(frozen=True)
class MeasureParams:
    K: int
    tail: Word
    p: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", Fraction(self.p))
        if self.K < 0:
            raise ValueError("K must be nonnegative")
        if not is_valid_tail(self.tail, self.K):
            raise ValueError(
                f"tail {format_word(self.tail)!r} must be empty or start with 2 "
                f"and have at most K={self.K} twos"
            )
        if not 0 < self.p <= 1:
            raise ValueError(f"p must lie in (0, 1], got {self.p}")


class Support(enum.Enum):
    QRATIO = "qratio"
    ONES_PREFIX = "ones_prefix"
    ZERO = "zero"


class SupportCase(NamedTuple):
    kind: Support
    ones: int = 0   # W for ONES_PREFIX


class PrelimitVertex(NamedTuple):
    word: Word
    level: int


def classify(w: Word, params: MeasureParams) -> SupportCase:
    """Which of the three formulas gives ``mu(w, .)``."""
    tail = params.tail
    if order_gap(w, tail) >= 0:
        return SupportCase(Support.QRATIO)
    if len(w) > len(tail) and w.endswith(tail):
        head = w[: len(w) - len(tail)]
        if "2" not in head:
            return SupportCase(Support.ONES_PREFIX, len(head))
    return SupportCase(Support.ZERO)


def mu(params: MeasureParams, w: Word, l: int) -> Fraction:
    if twos(w) > params.K:
        raise ValueError(f"word {format_word(w)!r} has more than K={params.K} twos")
    if l < 0:
        raise ValueError("level must be nonnegative")
    if l == 0 or params.p == 1:
        return Fraction(int(w == EMPTY))
    case = classify(w, params)
    if case.kind is Support.ZERO:
        return Fraction(0)
    p = params.p
    weight = jump_paths_closed(EMPTY, w, l) * p**l * (1 - p) ** (len(w) + twos(w))
    denom = q_eps(params.tail)(p)
    if case.kind is Support.QRATIO:
        return weight * q_gen(w, params.tail)(p) / denom
    return weight / denom


def support_iter(params: MeasureParams, max_len: int) -> Iterator[Word]:
    """Words of length <= ``max_len`` with nonzero measure, shortest first.

    The support is the down-set of the tail plus the words ``1^W tail``.
    """
    tail = params.tail
    finite = sorted(ancestors(tail), key=lambda u: (len(u), u))
    ones_start = len(tail) + 1
    for u in finite:
        if len(u) > max_len:
            return
        yield u
    for length in range(ones_start, max_len + 1):
        yield "1" * (length - len(tail)) + tail


def level_mass(params: MeasureParams, l: int, max_len: int) -> Fraction:
    """Total measure of level ``l`` restricted to words of length <= ``max_len``."""
    return sum((mu(params, w, l) for w in support_iter(params, max_len)), Fraction(0))


def level_table(params: MeasureParams, l: int, max_len: int) -> dict[Word, Fraction]:
    return {w: mu(params, w, l) for w in support_iter(params, max_len)}


def backward_sum(params: MeasureParams, w: Word, l: int, max_len: int) -> Fraction:
    """Mass flowing back into ``(w, l)`` from level ``l + 1``, truncated at ``max_len``.

    Centrality makes the full sum equal ``mu(w, l)``.
    """
    paths_w = jump_paths_closed(EMPTY, w, l) if l else int(w == EMPTY)
    total = Fraction(0)
    for u in support_iter(params, max_len):
        if order_gap(w, u) >= 0:
            total += mu(params, u, l + 1) * paths_w / jump_paths_closed(EMPTY, u, l + 1)
    return total


def prelimit_mu(v_m: Word, n_m: int, w: Word, l: int) -> Fraction:
    """``D(e,w,l) * D(w,v_m,n_m-l) / D(e,v_m,n_m)`` for a far-away vertex ``(v_m, n_m)``."""
    if n_m <= l:
        raise ValueError("need n_m > l")
    head = jump_paths_closed(EMPTY, w, l)
    if head == 0:
        return Fraction(0)
    return Fraction(head * jump_paths_closed(w, v_m, n_m - l), jump_paths_closed(EMPTY, v_m, n_m))


def schedule(params: MeasureParams, m: int, prefix: Word = EMPTY) -> PrelimitVertex:
    """Far vertex number ``m`` of a sequence whose prelimits converge to ``params``.

    The word is ``prefix + 1^m + tail`` and the level is
    ``ceil(p/(1-p) * len(word))``, so ``level / (level + len(word)) -> p``.
    A nonempty ``prefix`` adds twos before the growing run of ones; the limit
    measure does not depend on it.
    """
    p = params.p
    if p >= 1:
        raise ValueError("schedules exist only for p < 1")
    word = prefix + "1" * m + params.tail
    if twos(word) > params.K:
        raise ValueError(f"scheduled word has more than K={params.K} twos")
    level = max(1, ceil(p / (1 - p) * len(word)))
    return PrelimitVertex(word, level)


class ConvergenceRow(NamedTuple):
    m: int
    n_m: int
    value: Fraction
    error: Fraction


def convergence_table(
    params: MeasureParams,
    w: Word,
    l: int,
    m_list: Sequence[int],
    prefix: Word = EMPTY,
) -> list[ConvergenceRow]:
    target = mu(params, w, l)
    rows = []
    for m in m_list:
        v_m, n_m = schedule(params, m, prefix)
        if n_m <= l:
            raise ValueError(f"scheduled level {n_m} at m={m} does not exceed l={l}")
        value = prelimit_mu(v_m, n_m, w, l)
        rows.append(ConvergenceRow(m, n_m, value, abs(value - target)))
    return rows
