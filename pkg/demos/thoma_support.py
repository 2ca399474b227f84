"""
Supports of extreme characters
==============================

Coherent weights of a Thoma parameter vanish exactly outside a hook.
"""

from fractions import Fraction

from tprime.partitions import partitions_of
from tprime.thoma import ThomaParam, coherent_weight, spherical_annihilator_label, support_contains

w = ThomaParam((Fraction(1, 2),), (Fraction(1, 2),))
print("label:", spherical_annihilator_label(w))

for lam in partitions_of(4):
    print(f"{str(tuple(lam)):14s} weight={str(coherent_weight(w, lam)):6s} in support: {support_contains(w, lam)}")
