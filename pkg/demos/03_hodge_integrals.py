"""
Hodge integrals from Hurwitz numbers
====================================

For fixed (g, m) the ELSV bracket is a symmetric polynomial in the parts
whose coefficients are the linear Hodge integrals.  Sampling Hurwitz
numbers at a few small profiles and solving an exact linear system
recovers all of them; extra profiles then test the formula.
"""

from hurwitz_hodge import build_plan, extract_table, verify_polynomiality
from hurwitz_hodge.elsv import format_table

for g, m in [(1, 1), (1, 2), (2, 1), (0, 4), (2, 2)]:
    plan = build_plan(g, m, holdout_count=2)
    table = extract_table(plan)
    print(f"--- g={g} m={m}: fit at {list(plan.points)}")
    print("psi exponents | lambda | value")
    for line in format_table(table):
        print("  ", line)
    for line in verify_polynomiality(plan, table).lines():
        print("  ", line)

# The table text format round-trips exactly
print()
print(extract_table(build_plan(1, 2)).dumps(), end="")
