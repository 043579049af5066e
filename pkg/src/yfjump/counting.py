"""Exact path counts in the Young-Fibonacci graph and its jump graph.

``D(w, v, n)`` is the number of jump-graph paths of ``n`` steps from ``w`` to
``v``; each step goes from a word to any word above or equal to it.  Three
engines compute it independently and keep private caches:

* :class:`OracleEngine` sums over down-sets, straight from the definition;
* :class:`RecursiveEngine` dispatches on the first digits of both words and
  carries prefix sums over ``n``;
* :class:`ClosedFormEngine` evaluates the binomial expansion with the
  coefficients from :mod:`yfjump.fcoeffs`.

``D(w, v, 0)`` is taken to be ``[w == v]``.
"""
from __future__ import annotations

from math import comb
from typing import Iterator

from .fcoeffs import f_gen
from .words import (
    EMPTY,
    Word,
    ancestors,
    covers_up,
    leq,
    order_gap,
    rank,
    strip_common_suffix,
    words_of_rank,
)


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def chains_saturated(v0: Word, v1: Word) -> int:
    """Number of saturated chains ``v0 -> ... -> v1`` in the Hasse diagram."""
    gap = rank(v1) - rank(v0)
    if gap < 0:
        return 0
    level = {v0: 1}
    for _ in range(gap):
        nxt: dict[Word, int] = {}
        for u, c in level.items():
            for x in covers_up(u):
                nxt[x] = nxt.get(x, 0) + c
        level = nxt
    return level.get(v1, 0)


class OracleEngine:
    """``D(w,v,n) = sum over u <= v of D(w,u,n-1)``, memoized."""

    def __init__(self) -> None:
        self._memo: dict[tuple[Word, Word, int], int] = {}

    def count(self, w: Word, v: Word, n: int) -> int:
        if n < 0:
            raise ValueError("number of steps must be nonnegative")
        key = (w, v, n)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if n == 0:
            out = int(w == v)
        else:
            out = sum(self.count(w, u, n - 1) for u in ancestors(v))
        self._memo[key] = out
        return out


class RecursiveEngine:
    """Counts via the first-digit recursions, one series in ``n`` per word pair.

    ``series(w, v, N)`` holds ``D(w, v, 0..N)``; each series is built in
    ``O(N)`` from at most two shorter ones using running sums.
    """

    def __init__(self) -> None:
        self._memo: dict[tuple[Word, Word], list[int]] = {}

    def count(self, w: Word, v: Word, n: int) -> int:
        if n < 0:
            raise ValueError("number of steps must be nonnegative")
        return self.series(w, v, n)[n]

    def series(self, w: Word, v: Word, N: int) -> list[int]:
        cached = self._memo.get((w, v))
        if cached is not None and len(cached) > N:
            return cached
        if cached is not None:
            N = max(N, 2 * (len(cached) - 1))
        out = self._build(w, v, N)
        self._memo[(w, v)] = out
        return out

    def _build(self, w: Word, v: Word, N: int) -> list[int]:
        if not leq(w, v):
            return [0] * (N + 1)
        if not v:
            return [1] * (N + 1)   # here w is empty too
        vh, vt = v[0], v[1:]
        out = [int(w == v)] + [0] * N
        if not w:
            inner = self.series(EMPTY, vt, N)
            acc = 0
            for m in range(1, N + 1):
                acc += inner[m] if vh == "1" else m * inner[m]
                out[m] = acc
            return out

        wh, wt = w[0], w[1:]
        same = self.series(w, vt, N)
        if wh == "1" and vh == "1":
            base = int(wt == vt)
            acc = 0
            for m in range(1, N + 1):
                acc += same[m]
                out[m] = base + acc
        elif wh == "1":
            short = self.series(wt, vt, N)
            acc = 0
            for m in range(1, N + 1):
                acc += short[m] + (m - 1) * same[m]
                out[m] = acc
        elif vh == "1":
            acc = 0
            for m in range(1, N + 1):
                acc += same[m]
                out[m] = acc
        else:
            short = self.series(wt, vt, N)
            acc = 0
            for m in range(1, N + 1):
                acc += (m - 1) * same[m]
                out[m] = short[m] + acc
        return out


class ClosedFormEngine:
    """``D(w,v,n) = sum_i F(w,v,i) * C(len(v_w) - twos(w_v) + n - 1, rank(v_w) - rank(w_v) - i)``."""

    def count(self, w: Word, v: Word, n: int) -> int:
        if n < 0:
            raise ValueError("number of steps must be nonnegative")
        if n == 0:
            return int(w == v)
        if order_gap(w, v) < 0:
            return 0
        left, right, _ = strip_common_suffix(w, v)
        top_row = len(right) - left.count("2") + n - 1
        spread = rank(right) - rank(left)
        return sum(f * binom(top_row, spread - i) for i, f in enumerate(f_gen(w, v)))


_oracle = OracleEngine()
_recursive = RecursiveEngine()
_closed = ClosedFormEngine()

ENGINES = {"oracle": _oracle, "recursive": _recursive, "closed": _closed}


def jump_paths_oracle(w: Word, v: Word, n: int) -> int:
    return _oracle.count(w, v, n)


def jump_paths_theorem(w: Word, v: Word, n: int) -> int:
    return _recursive.count(w, v, n)


def jump_paths_closed(w: Word, v: Word, n: int) -> int:
    return _closed.count(w, v, n)


def jump_paths(w: Word, v: Word, n: int, method: str = "closed") -> int:
    """``D(w, v, n)`` with the named engine (``oracle``, ``recursive`` or ``closed``)."""
    try:
        engine = ENGINES[method]
    except KeyError:
        raise ValueError(f"unknown counting method {method!r}") from None
    return engine.count(w, v, n)


def pairs_up_to_rank(max_rank: int, K: int | None = None) -> Iterator[tuple[Word, Word]]:
    """Every ``(w, v)`` with ``rank(w) <= rank(v) <= max_rank`` and at most ``K`` twos."""
    words = [w for r in range(max_rank + 1) for w in words_of_rank(r, K)]
    for v in words:
        for w in words:
            if rank(w) <= rank(v):
                yield w, v
