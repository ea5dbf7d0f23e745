"""
Counting branched covers
========================

A Hurwitz number counts ordered tuples of transpositions that generate
S_d and multiply to a permutation of prescribed cycle type.  Two engines
compute it: a depth-first enumerator and a cycle-type propagation with a
sieve for transitivity.
"""

from hurwitz_hodge import Partition, hurwitz_brute, hurwitz_class_algebra, make_instance
from hurwitz_hodge.core import format_fraction
from hurwitz_hodge.hurwitz import genus0_closed_form

# The numerology of a cover: degree, branch points, ramification over infinity
inst = make_instance(1, Partition((3, 1)))
print(inst)

# Both engines, same answer
slow = hurwitz_brute(inst)
fast = hurwitz_class_algebra(inst)
print("brute:", slow.tuple_count, "tuples, H =", format_fraction(slow.hurwitz_number))
print("class algebra:", fast.tuple_count, "tuples, H =", format_fraction(fast.hurwitz_number))

# The fast engine reaches far beyond enumeration
for g in range(4):
    print(f"H^{g}_(4,2) =", format_fraction(hurwitz_class_algebra(make_instance(g, Partition((4, 2)))).hurwitz_number))

# Genus 0: one part has r! d^(d-2)/d!; for two parts the d^-1 factor
# matches the counts while the d^(d-1) factor does not
for alpha in [(5,), (3, 2), (4, 1)]:
    alpha = Partition(alpha)
    H = hurwitz_class_algebra(make_instance(0, alpha)).hurwitz_number
    line = f"H^0_{alpha} = {format_fraction(H)}, closed form {format_fraction(genus0_closed_form(alpha))}"
    if alpha.length() == 2:
        line += f", with d^(d-1): {format_fraction(genus0_closed_form(alpha, 'paper'))}"
    print(line)
