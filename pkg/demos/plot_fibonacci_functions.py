"""
Fibonacci functions and bridge-number sets
==========================================

For a regular tunnel the bridge number is a fixed linear function of the
bridge numbers of the last two semisimple tunnels in its cabling sequence.
"""

from tunnel_atlas import (bridge_set, fibonacci_coefficients, fibonacci_trace,
                          fibonacci_value, semisimple_count)

word = "0011100011100"

seq = fibonacci_trace(word, 2, 2)
print(f"F_tau( 2, 2 ) = {seq[-1]}")
print("The iteration sequence is:")
print("   " + ", ".join(map(str, seq)))

# F is linear in the seeds
alpha, beta = fibonacci_coefficients(word)
print(f"F(a, b) = {alpha}*a + {beta}*b")
assert fibonacci_value(word, 3, 4) == alpha * 3 + beta * 4

# Seeds range over 2 <= a <= b <= a+1 <= m+1, giving 2m-2 candidates
m = semisimple_count(word)
print(f"m = {m}, candidates:", bridge_set(word))
