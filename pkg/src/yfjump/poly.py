"""Integer polynomials in ``p`` and the boundary polynomials ``Q_{w,v}``."""
from __future__ import annotations

from fractions import Fraction
from functools import cache
from typing import Iterable, Sequence

from .fcoeffs import f_gen
from .words import Word, order_gap, rank


class Poly:
    """Dense integer polynomial; ``coeffs[k]`` multiplies ``p**k``.

    Trailing zeros are dropped, so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_poly(self)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))

    def __neg__(self) -> "Poly":
        return Poly(-x for x in self.coeffs)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly | int") -> "Poly":
        if isinstance(other, int):
            return Poly(other * x for x in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k)

    def __call__(self, p: Fraction | int) -> Fraction:
        """Exact evaluation by Horner's rule."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * p + c
        return acc


P = Poly((0, 1))
ONE = Poly.const(1)
ONE_MINUS_P = Poly((1, -1))


def add(a: Poly, b: Poly) -> Poly:
    return a + b


def scale(c: int, a: Poly) -> Poly:
    return a * c


def mul(a: Poly, b: Poly) -> Poly:
    return a * b


def derivative(a: Poly) -> Poly:
    return a.derivative()


def evaluate(a: Poly, p: Fraction | int) -> Fraction:
    return a(Fraction(p))


def format_poly(q: Poly) -> str:
    """Render as ``c0 + c1*p + c2*p^2``, omitting zero terms."""
    terms = []
    for k, c in enumerate(q.coeffs):
        if c == 0:
            continue
        mono = "" if k == 0 else ("p" if k == 1 else f"p^{k}")
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"


@cache
def q_eps(v: Word) -> Poly:
    """``Q_{e,v}`` by the derivative recursion, reading ``v`` right to left."""
    q = ONE
    size = 0
    for digit in reversed(v):
        if digit == "2":
            q = ONE_MINUS_P * (P * q).derivative() + (size + 1) * (P * q)
            size += 2
        else:
            size += 1
    return q


@cache
def q_gen(w: Word, v: Word) -> Poly:
    """``Q_{w,v}``; requires ``w <= v``."""
    if not w:
        return q_eps(v)
    gap = order_gap(w, v)
    if gap < 0:
        raise ValueError(f"Q({w!r}, {v!r}) is undefined: the first word is not below the second")
    if gap == 0:
        return ONE
    while v[0] == "1":
        v = v[1:]
        if order_gap(w, v) == 0:
            return ONE
    rest = v[1:]
    q = q_gen(w, rest)
    return (
        P * ONE_MINUS_P * q.derivative()
        + (rank(rest) + 1 - rank(w)) * (P * q)
        + q_gen(w[1:], rest)
    )


def expand_f_basis(coeffs: Sequence[int]) -> Poly:
    """``sum_i coeffs[i] * (1-p)^i * p^(top-i)`` in the monomial basis."""
    top = len(coeffs) - 1
    out = Poly()
    for i, f in enumerate(coeffs):
        out = out + f * (ONE_MINUS_P ** i * P ** (top - i))
    return out


def q_from_f(w: Word, v: Word) -> Poly:
    return expand_f_basis(f_gen(w, v))


def positivity_check(q: Poly, samples: Iterable[Fraction]) -> bool:
    """True when ``q`` is strictly positive at every sample point (exact)."""
    return all(q(Fraction(s)) > 0 for s in samples)
