"""
Boundary polynomials
====================

``Q_{w,v}(p)`` collects the ``F`` coefficients in the basis
``(1-p)^i p^(top-i)``.  The derivative recursion and the expansion must give
the same polynomial, and it stays positive on (0, 1).
"""
from fractions import Fraction

from yfjump import f_gen, format_poly, positivity_check, q_from_f, q_gen

grid = [Fraction(k, 10) for k in range(1, 10)]
for w, v in [("", "22"), ("", "2121"), ("1", "21"), ("1", "2212"), ("2", "2222")]:
    q = q_gen(w, v)
    print(f"Q({w or 'e'}, {v}) = {format_poly(q)}")
    print(f"   F={list(f_gen(w, v))}  expansion agrees: {q == q_from_f(w, v)}  positive: {positivity_check(q, grid)}")
