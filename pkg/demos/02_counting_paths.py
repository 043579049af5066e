"""
Counting jump-graph paths three ways
====================================

``D(w, v, n)`` counts chains ``w = x0 <= x1 <= ... <= xn = v``.  The brute-force
engine sums over down-sets, the recursive engine peels first digits, and the
closed form expands in binomials with integer coefficients ``F``.
"""
import time

from yfjump import OracleEngine, RecursiveEngine, ClosedFormEngine, f_gen

engines = {"oracle": OracleEngine(), "recursive": RecursiveEngine(), "closed": ClosedFormEngine()}

for w, v in [("", "22"), ("1", "21"), ("2", "2121")]:
    row = {name: [e.count(w, v, n) for n in range(1, 7)] for name, e in engines.items()}
    print(f"D({w or 'e'}, {v}, 1..6):", row["closed"], "| engines agree:", len({tuple(x) for x in row.values()}) == 1)
    print("   F coefficients:", list(f_gen(w, v)))

# Large n: the recursion carries running sums, the closed form is a short sum
for name in ("recursive", "closed"):
    t = time.perf_counter()
    value = engines[name].count("1", "22121", 5000)
    print(f"{name:>9}: D(1, 22121, 5000) has {len(str(value))} digits ({time.perf_counter() - t:.3f}s)")
