"""Integer coefficients F(w, v, i) expanding jump-path counts in binomials.

``f_gen(w, v)`` returns the tuple ``(F(w,v,0), ..., F(w,v,top))`` with
``top = twos(v_w) - len(w_v)``.  Every recursion below uses the convention
that an index outside ``0..top`` reads as zero, which folds the separate
"first", "middle" and "top" rules into a single loop.
"""
from __future__ import annotations

from functools import cache

from .words import Word, order_gap, rank, strip_common_suffix


def _at(vec: tuple[int, ...], i: int) -> int:
    return vec[i] if 0 <= i < len(vec) else 0


@cache
def f_eps(v: Word) -> tuple[int, ...]:
    """Coefficients of the root-to-``v`` count, indices ``0..twos(v)``."""
    coeffs: tuple[int, ...] = (1,)
    size = 0   # rank of the suffix processed so far
    nt = 0     # its number of twos
    for digit in reversed(v):
        if digit == "2":
            coeffs = tuple(
                (size + 1 - i) * _at(coeffs, i) + (nt + 2 - i) * _at(coeffs, i - 1)
                for i in range(nt + 2)
            )
            nt += 1
            size += 2
        else:
            size += 1
    return coeffs


@cache
def f_gen(w: Word, v: Word) -> tuple[int, ...]:
    """Coefficients ``F(w, v, i)``; requires ``w <= v``.

    Peels the first digit of ``v``.  When that digit is 2 the new vector mixes
    ``F(w, v')`` with ``F(w', v')`` where ``w'`` drops the first digit of ``w``.
    """
    if not w:
        return f_eps(v)
    gap = order_gap(w, v)
    if gap < 0:
        raise ValueError(f"F({w!r}, {v!r}) is undefined: the first word is not below the second")
    if gap == 0:
        return (1,)
    # F(w, 1v) = F(w, v); peeled in a loop so long runs of ones do not recurse
    rest = v[1:]
    inner = order_gap(w, rest)
    while v[0] == "1":
        if inner < 0:
            # unreachable for w != e; guarded so a wrong assumption fails loudly
            raise AssertionError(f"F recursion left the order at ({w!r}, {rest!r})")
        if inner == 0:
            return (1,)
        v, rest = rest, rest[1:]
        inner = order_gap(w, rest)
    if inner < 0:
        raise AssertionError(f"F recursion left the order at ({w!r}, {rest!r})")

    left, right, _ = strip_common_suffix(w, rest)
    a = f_gen(w, rest)
    b = f_gen(w[1:], rest)
    spread = rank(right) - rank(left)
    top = inner + 1
    if w[0] == "1" and not left:
        out = tuple(
            _at(b, i) + _at(b, i - 1)
            + (spread + 1 - i) * _at(a, i) + (inner + 1 - i) * _at(a, i - 1)
            for i in range(top + 1)
        )
    else:
        out = tuple(
            _at(b, i) + (spread + 1 - i) * _at(a, i) + (inner + 1 - i) * _at(a, i - 1)
            for i in range(top + 1)
        )
    if len(out) != order_gap(w, v) + 1:
        raise AssertionError(f"F({w!r}, {v!r}) has {len(out)} entries, expected {order_gap(w, v) + 1}")
    return out


def f_consistency_report(max_rank: int, K: int | None, n_max: int) -> list[tuple[Word, Word, int, int, int]]:
    """Compare the binomial expansion with the brute-force count on a grid.

    Returns ``(w, v, n, closed, oracle)`` for every disagreement; an empty list
    certifies the range ``rank(v) <= max_rank``, ``twos <= K``, ``1 <= n <= n_max``.
    """
    from .counting import OracleEngine, ClosedFormEngine, pairs_up_to_rank

    oracle = OracleEngine()
    closed = ClosedFormEngine()
    bad = []
    for w, v in pairs_up_to_rank(max_rank, K):
        for n in range(1, n_max + 1):
            x, y = closed.count(w, v, n), oracle.count(w, v, n)
            if x != y:
                bad.append((w, v, n, x, y))
    return bad
