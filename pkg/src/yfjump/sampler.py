"""Monte-Carlo paths from a central measure.

From ``(w, l)`` the walk moves to ``(u, l+1)`` with probability

    mu(u, l+1) * D(e, w, l) / (D(e, u, l+1) * mu(w, l)),   w <= u.

Candidates ``u`` are scanned by increasing length until the accumulated
probability reaches ``1 - tol``; the kept weights are then renormalized.
Transition tables are exact and cached per state.  A draw is a 53-bit integer
compared against integer thresholds, so no floating point enters the choice.
"""
from __future__ import annotations

from bisect import bisect_right
from fractions import Fraction
from math import ceil

import numpy as np

from .counting import jump_paths_closed
from .measures import DEFAULT_MAX_LEN, DEFAULT_TOL, MeasureParams, mu, support_iter
from .words import EMPTY, Word, order_gap

_BITS = 53
_SCALE = 1 << _BITS


class TruncationError(RuntimeError):
    """The candidate scan hit the length cap before reaching ``1 - tol``."""


class PathSampler:
    def __init__(
        self,
        params: MeasureParams,
        tol: Fraction = DEFAULT_TOL,
        max_len: int = DEFAULT_MAX_LEN,
    ) -> None:
        if params.p >= 1:
            raise ValueError("sampling needs p < 1")
        tol = Fraction(tol)
        if not 0 < tol < 1:
            raise ValueError("tol must lie in (0, 1)")
        self.params = params
        self.tol = tol
        self.max_len = max_len
        self._tables: dict[tuple[Word, int], tuple[list[Word], list[Fraction], list[int]]] = {}

    def transition(self, w: Word, l: int) -> tuple[list[Word], list[Fraction]]:
        """Successors of ``(w, l)`` and their renormalized exact probabilities."""
        words, probs, _ = self._table(w, l)
        return words, probs

    def _table(self, w: Word, l: int):
        key = (w, l)
        hit = self._tables.get(key)
        if hit is not None:
            return hit
        here = mu(self.params, w, l)
        if here == 0:
            raise ValueError(f"state ({w!r}, {l}) has measure zero")
        paths_w = jump_paths_closed(EMPTY, w, l) if l else int(w == EMPTY)
        target = 1 - self.tol
        words: list[Word] = []
        weights: list[Fraction] = []
        acc = Fraction(0)
        length = -1
        reached = False
        for u in support_iter(self.params, self.max_len):
            if len(u) != length:
                if acc >= target:
                    reached = True
                    break
                length = len(u)
            if order_gap(w, u) < 0:
                continue
            q = mu(self.params, u, l + 1) * paths_w / (jump_paths_closed(EMPTY, u, l + 1) * here)
            if q:
                words.append(u)
                weights.append(q)
                acc += q
        if not reached and acc < target:
            raise TruncationError(
                f"transition mass from ({w!r}, {l}) is {float(acc):.3g} after words of "
                f"length {self.max_len}; raise max_len or tol"
            )
        probs = [q / acc for q in weights]
        thresholds = []
        run = Fraction(0)
        for q in probs:
            run += q
            thresholds.append(ceil(run * _SCALE))
        thresholds[-1] = _SCALE
        table = (words, probs, thresholds)
        self._tables[key] = table
        return table

    def _step(self, w: Word, l: int, draw: int) -> Word:
        words, _, thresholds = self._table(w, l)
        return words[bisect_right(thresholds, draw)]

    def sample(self, levels: int, rng: np.random.Generator) -> list[Word]:
        draws = rng.integers(0, _SCALE, size=levels, dtype=np.int64)
        path = [EMPTY]
        for l in range(levels):
            path.append(self._step(path[-1], l, int(draws[l])))
        return path

    def sample_many(self, n_paths: int, levels: int, seed: int) -> list[list[Word]]:
        """``n_paths`` independent paths from one seeded stream."""
        rng = np.random.default_rng(seed)
        draws = rng.integers(0, _SCALE, size=(n_paths, levels), dtype=np.int64).tolist()
        out = []
        for row in draws:
            path = [EMPTY]
            for l, d in enumerate(row):
                path.append(self._step(path[-1], l, d))
            out.append(path)
        return out


def sample_path(
    params: MeasureParams,
    levels: int,
    seed: int,
    tol: Fraction = DEFAULT_TOL,
    max_len: int = DEFAULT_MAX_LEN,
) -> list[Word]:
    """One path ``w_0 = e, w_1, ..., w_levels``; identical for identical arguments."""
    return PathSampler(params, tol, max_len).sample(levels, np.random.default_rng(seed))
