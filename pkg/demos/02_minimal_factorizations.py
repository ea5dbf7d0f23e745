"""
Minimal factorizations
======================

A fixed permutation of cycle type alpha factors into k = sum(alpha_i - 1)
transpositions in exactly k! prod alpha_i^(alpha_i - 1)/alpha_i! ways;
for a single a-cycle this is a^(a-2).  Enumeration confirms it.
"""

from hurwitz_hodge import Permutation, brute_fixed_target_factorizations, multiplicity_m_alpha
from hurwitz_hodge.core import all_partitions

for a in range(1, 7):
    n = brute_fixed_target_factorizations(Permutation.of_type((a,)), a - 1)
    print(f"{a}-cycle: {n} factorizations (a^(a-2) = {a ** max(a - 2, 0)})")

print()
for alpha in all_partitions(5):
    k = sum(x - 1 for x in alpha)
    n = brute_fixed_target_factorizations(Permutation.of_type(alpha), k)
    print(f"{alpha}: k={k} brute={n} formula={multiplicity_m_alpha(alpha)}")

# Non-minimal lengths are still class functions of the target
xi = Permutation.from_cycles(4, [(1, 2), (3, 4)])
print("\n(1 2)(3 4) as a product of 4 transpositions:", brute_fixed_target_factorizations(xi, 4), "ways")
