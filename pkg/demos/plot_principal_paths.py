"""
Principal paths: binary words, step sequences and depth
========================================================

A tunnel's principal path can be written as a bit string of binary
invariants or as a D/L/R step sequence.  Depth is the number of D's.
"""

from tunnel_atlas import (binary_to_steps, depth_of_steps, depth_of_word,
                          profile, steps_to_binary)

word = "0011100011100"
steps = binary_to_steps(word)
print(word, "->", steps)
print(steps, "->", steps_to_binary(steps))

# Depth two ways: counting D's, or from the maximal blocks of ones.
print("depth from steps:", depth_of_steps(steps))
print("depth from word: ", depth_of_word(word))

# n cablings, the first m of them producing depth-1 tunnels
print(profile(word))

# Each block of k ones adds ceil(k/2) to the depth
for w in ["1", "11", "111", "1111", "101", "10101"]:
    print(f"{w:>6}  {binary_to_steps(w).steps:<8} depth {depth_of_word(w)}")
