"""
Central measures and their prelimits
====================================

A measure is named by a tail word and ``p``.  Its values come from a closed
formula; the same numbers appear as limits of path-count ratios toward far
vertices ``1^m tail`` at level about ``p/(1-p)`` times the word length.
"""
from fractions import Fraction

from yfjump import MeasureParams, classify, convergence_table, level_mass, mu, support_iter

params = MeasureParams(K=1, tail="21", p=Fraction(1, 2))

print("support up to length 4:", list(support_iter(params, 4)))
for w in ["", "1", "11", "2", "21", "121", "112"]:
    print(f"  mu({w or 'e'}, 2) = {mu(params, w, 2)}   [{classify(w, params).kind.value}]")

for l in range(1, 5):
    print(f"level {l}: mass over words of length <= 60 is {float(level_mass(params, l, 60)):.15f}")

print("\nprelimit convergence for w=1, l=2")
print(f"{'m':>5} {'n_m':>5} {'prelimit':>12} {'error':>10}")
for row in convergence_table(params, "1", 2, [10, 40, 160, 640]):
    print(f"{row.m:>5} {row.n_m:>5} {float(row.value):>12.8f} {float(row.error):>10.2e}")
