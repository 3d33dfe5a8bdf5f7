"""
Extremal bridge numbers
=======================

Lower bounds by depth grow like (1 + sqrt 2)^d; upper bounds by number of
cablings are Fibonacci numbers.  Both are checked here against exhaustive
search over short words.
"""

from tunnel_atlas import (closed_form_check, max_bridge, max_bridge_overall,
                          max_bridge_search, min_bridge, min_bridge_search,
                          torus_min_bridge)

print("d   min  torus-min")
for d in range(1, 9):
    print(f"{d:<3} {min_bridge(d):<5}{torus_min_bridge(d)}")

print("closed form exact up to d = 60:", closed_form_check(60))

for d in (2, 3, 4, 5):
    rep = min_bridge_search(11, d)
    print(f"depth {d}: search min {rep.value}, formula {min_bridge(d)}, "
          f"shortest witness {rep.witnesses[0]!r} ({rep.examined} words)")

n = 10
print(f"n = {n} cablings:")
for m in range(2, n + 1):
    rep = max_bridge_search(n, m)
    print(f"  m = {m:<2} max {max_bridge(n, m):<4} search {rep.value}")
print("overall maximum F_{n+2} =", max_bridge_overall(n))
