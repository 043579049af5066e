"""
Sampling random paths
=====================

Walk up the jump graph with the transition probabilities induced by a central
measure and compare level frequencies with the exact values.
"""
from collections import Counter
from fractions import Fraction

from yfjump import MeasureParams, PathSampler, format_word, mu, support_iter

params = MeasureParams(K=1, tail="2", p=Fraction(1, 2))
sampler = PathSampler(params)

print("one path:", " -> ".join(format_word(u) for u in sampler.sample_many(1, 8, seed=1)[0]))

n = 50_000
paths = sampler.sample_many(n, 3, seed=2)
level = 3
counts = Counter(path[level] for path in paths)
print(f"\nlevel {level}: empirical vs exact")
for w in support_iter(params, 8):
    exact = mu(params, w, level)
    print(f"  {format_word(w):>9}  {counts[w] / n:.4f}  {float(exact):.4f}")
