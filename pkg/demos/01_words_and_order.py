"""
Words, covers and the order
===========================

Vertices of the Young-Fibonacci graph are words over {1, 2}, graded by digit
sum.  This script lists a few levels, shows the cover relation and checks
the order test against reachability in the Hasse diagram.
"""
from yfjump import ancestors, covers_down, covers_up, format_word, leq, words_of_rank

# Level sizes are Fibonacci numbers
print("level sizes:", [sum(1 for _ in words_of_rank(n)) for n in range(12)])

# Every word has exactly one more upper cover than lower covers
for v in ["", "1", "2", "21", "212"]:
    up, down = sorted(covers_up(v)), sorted(covers_down(v))
    print(f"{format_word(v):>4}: up={[format_word(u) for u in up]} down={[format_word(u) for u in down]}")

# The order compares twos left in the upper word with digits left in the lower
# one after stripping the common suffix
for w, v in [("1", "2"), ("11", "2"), ("11", "21"), ("12", "21")]:
    print(f"{w} <= {v}: {leq(w, v)}")

print("down-set of 22:", [format_word(u) for u in sorted(ancestors("22"), key=lambda u: (len(u), u))])
