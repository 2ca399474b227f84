"""
The semiring of Schur-Weyl ideals
=================================

Build the sign and trivial ideals, combine them, and watch the quotient
dimensions grow.
"""

from tprime.ideals import dagger, growth_sequence, ideal_j_minus, ideal_j_plus, ideal_schur_weyl, join

N = 5
jp, jm = ideal_j_plus(N), ideal_j_minus(N)

# the sign ideal joined with itself gives back the augmentation ideal
print("J- join J- == J+ :", join(jm, jm) == jp)

# dagger plays the role of addition of super dimensions
p11 = dagger(jp, jm)
print("J+ dagger J- == kernel on (1|1)-space :", p11 == ideal_schur_weyl(1, 1, N))

for name, I in [("J+", jp), ("J+ dagger J+", dagger(jp, jp)), ("J+ dagger J-", p11)]:
    print(f"{name:14s} g_n = {growth_sequence(I)}")
