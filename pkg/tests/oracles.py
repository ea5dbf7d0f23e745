"""Independent slow oracles used by the tests.

These go through the public value types only (Permutation products,
cycle_type, union-find connectivity) and itertools.product, sharing no
code with the engines' walkers or class tables.
"""
from functools import reduce
from itertools import product

from hurwitz_hodge.core import Partition, Permutation, cycle_type, generates_transitively, transpositions_of


def naive_tuple_count(g, parts):
    alpha = Partition(tuple(parts))
    d, m = alpha.size(), alpha.length()
    r = d + m + 2 * g - 2
    count = 0
    for tup in product(transpositions_of(d), repeat=r):
        p = reduce(lambda x, y: x * y, tup, Permutation.identity(d))
        if cycle_type(p) == alpha and generates_transitively(list(tup), d):
            count += 1
    return count


def naive_fixed_target(xi, t):
    d = xi.degree
    return sum(
        reduce(lambda x, y: x * y, tup, Permutation.identity(d)) == xi
        for tup in product(transpositions_of(d), repeat=t)
    )


def orbit_of_first(taus, d):
    """Closure of {0} under the transpositions, by repeated sweeps."""
    orbit = {0}
    changed = True
    while changed:
        changed = False
        for t in taus:
            for x in list(orbit):
                y = t.images[x]
                if y not in orbit:
                    orbit.add(y)
                    changed = True
    return orbit
