"""
Middle tunnels of torus knots
=============================

The cabling sequence of the middle tunnel of the (p, q) torus knot comes
from multiplying U and L matrices along the continued fraction of p/q.
"""

from math import gcd

from tunnel_atlas import (cf_eval, fibonacci_value, invariant_table,
                          torus_depth, torus_depth_shortcut, torus_min_bridge)
from tunnel_atlas.torus import bridge_seeds

table = invariant_table(41, 29)
print("41/29 =", list(table.cf), " word", table.word, " depth", table.depth)
for row in table.rows:
    print(f"  t={row.t}  P={row.matrix}  slope={row.slope}  knot={row.knot}")

# The Fibonacci function of the word recovers the bridge number q
print("F(word, seeds) =", fibonacci_value(table.word, *bridge_seeds(table)))

# [1, 2, ..., 2] gives the least bridge number for each depth
for d in range(1, 7):
    p, q = cf_eval([1] + [2] * d)
    print(f"depth {d}: ({p}, {q}), q = {q}, t_d = {torus_min_bridge(d)}")

# The block-count shortcut is only a diagnostic; count disagreements
disagree = {"literal": 0, "offset": 0}
total = 0
for p in range(3, 200):
    for q in range(2, p):
        if gcd(p, q) == 1:
            total += 1
            tab = invariant_table(p, q)
            for conv in disagree:
                disagree[conv] += torus_depth_shortcut(tab.cf, conv) != tab.depth
print(f"shortcut disagreements over {total} pairs:", disagree)
