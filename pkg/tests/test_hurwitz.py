from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from hurwitz_hodge.core import Partition, Permutation, all_partitions, cycle_type
from hurwitz_hodge.hurwitz import (
    BudgetExceeded,
    CountReport,
    Method,
    brute_fixed_target_factorizations,
    compute,
    cycle_factorization_count,
    genus0_closed_form,
    hurwitz_brute,
    hurwitz_class_algebra,
    make_instance,
    multiplicity_m_alpha,
    transition_counts,
)
from hurwitz_hodge.verify import genus_instances

from oracles import naive_fixed_target, naive_tuple_count

# (g, alpha, tuple count) frozen from oracles.naive_tuple_count
NAIVE_COUNTS = [
    (1, (2,), 1),
    (0, (2, 1), 24),
    (0, (1,), 1),
    (0, (3,), 6),
    (1, (1, 1), 1),
    (1, (1,), 0),
    (1, (3,), 54),
    (0, (1, 1), 1),
    (0, (1, 1, 1), 24),
    (0, (2, 2), 288),
    (1, (2, 1), 240),
    (0, (4,), 96),
    (1, (4,), 3840),
    (0, (3, 1), 648),
]


@pytest.mark.parametrize("g, parts, expected", [
    (1, (2,), dict(d=2, m=1, b=4, k=1, r=3)),
    (0, (3,), dict(d=3, m=1, b=4, k=2, r=2)),
    (0, (1,), dict(d=1, m=1, b=0, k=0, r=0)),
])
def test_make_instance(g, parts, expected):
    inst = make_instance(g, Partition(parts))
    assert {key: getattr(inst, key) for key in expected} == expected


def test_make_instance_rejects_negative_genus():
    with pytest.raises(ValueError):
        make_instance(-1, Partition((2,)))


@pytest.mark.parametrize("g, parts, count", NAIVE_COUNTS)
def test_engines_match_frozen_naive_counts(g, parts, count):
    inst = make_instance(g, Partition(parts))
    for rep in (hurwitz_brute(inst), hurwitz_class_algebra(inst)):
        assert rep.tuple_count == count
        assert rep.hurwitz_number == Fraction(count, factorial(inst.d))


@pytest.mark.parametrize("g, parts", [(0, (2, 1)), (1, (1, 1)), (0, (2, 1, 1))])
def test_naive_oracle_is_live(g, parts):
    assert hurwitz_brute(make_instance(g, Partition(parts))).tuple_count == naive_tuple_count(g, parts)


@pytest.mark.parametrize("g, parts, H", [
    (1, (2,), Fraction(1, 2)),
    (0, (2, 1), Fraction(4)),
    (0, (1,), Fraction(1)),
    (0, (3,), Fraction(1)),
    (1, (1, 1), Fraction(1, 2)),
])
def test_spec_examples(g, parts, H):
    inst = make_instance(g, Partition(parts))
    assert hurwitz_brute(inst).hurwitz_number == H
    assert hurwitz_class_algebra(inst).hurwitz_number == H


def test_methods_recorded():
    inst = make_instance(0, Partition((2, 1)))
    assert hurwitz_brute(inst).method is Method.BRUTE
    assert hurwitz_class_algebra(inst).method is Method.CLASS_ALGEBRA
    assert compute(inst, "auto").method is Method.BRUTE
    assert compute(inst, "auto", budget=10).method is Method.CLASS_ALGEBRA
    assert compute(inst, "class-algebra").method is Method.CLASS_ALGEBRA


def test_count_report_invariant():
    inst = make_instance(1, Partition((2,)))
    with pytest.raises(ValueError):
        CountReport(inst, 1, Fraction(1), Method.BRUTE)


def test_budget_exceeded_names_budget():
    inst = make_instance(2, Partition((5,)))
    with pytest.raises(BudgetExceeded, match="1000.*class-algebra"):
        hurwitz_brute(inst, budget=1000)


def test_oracle_equivalence_d4():
    for inst in genus_instances(4, 8):
        slow, fast = hurwitz_brute(inst), hurwitz_class_algebra(inst)
        assert (slow.tuple_count, slow.hurwitz_number) == (fast.tuple_count, fast.hurwitz_number), inst


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=4), st.integers(0, 2))
def test_relabeling_invariance_and_integrality(parts, g):
    shuffled = list(reversed(parts))
    a = hurwitz_class_algebra(make_instance(g, Partition(tuple(parts))))
    b = hurwitz_class_algebra(make_instance(g, Partition(tuple(shuffled))))
    assert a.hurwitz_number == b.hurwitz_number
    assert (a.hurwitz_number * factorial(a.instance.d)).denominator == 1
    assert a.tuple_count >= 0


def test_parallel_brute_is_deterministic():
    inst = make_instance(1, Partition((3, 1)))
    counts = {hurwitz_brute(inst, workers=w).tuple_count for w in (1, 2, 3)}
    assert counts == {hurwitz_class_algebra(inst).tuple_count}


def test_transition_counts_rows_sum_to_transpositions():
    for d in range(1, 7):
        types, rows = transition_counts(d)
        assert all(sum(row) == d * (d - 1) // 2 for row in rows)
        assert len(types) == len(all_partitions(d))


# -- fixed-target factorizations -------------------------------------------


def test_fixed_target_examples():
    assert brute_fixed_target_factorizations(Permutation.from_cycles(3, [(1, 2, 3)]), 2) == 3
    assert brute_fixed_target_factorizations(Permutation.identity(2), 1) == 0
    assert brute_fixed_target_factorizations(Permutation.from_cycles(3, [(1, 2)]), 1) == 1
    assert brute_fixed_target_factorizations(Permutation.identity(3), 0) == 1


@pytest.mark.parametrize("d", range(1, 5))
def test_fixed_target_is_class_uniform(d):
    from itertools import permutations

    perms = [Permutation(p) for p in permutations(range(d))]
    for t in range(5):
        by_type = {}
        for xi in perms:
            by_type.setdefault(cycle_type(xi), set()).add(brute_fixed_target_factorizations(xi, t))
        assert all(len(v) == 1 for v in by_type.values())


@pytest.mark.parametrize("d, t", [(3, 2), (3, 3), (4, 2), (4, 3), (4, 4)])
def test_fixed_target_matches_naive(d, t):
    for alpha in all_partitions(d):
        xi = Permutation.of_type(alpha)
        assert brute_fixed_target_factorizations(xi, t) == naive_fixed_target(xi, t)


@pytest.mark.parametrize("a", range(1, 7))
def test_minimal_cycle_factorizations(a):
    assert brute_fixed_target_factorizations(Permutation.of_type((a,)), a - 1) == cycle_factorization_count(a)


@pytest.mark.parametrize("a, expected", [(2, 1), (4, 16), (3, 3), (1, 1), (5, 125)])
def test_cycle_factorization_count(a, expected):
    assert cycle_factorization_count(a) == expected


@pytest.mark.parametrize("parts, expected", [((2,), 1), ((3,), 3), ((1, 1, 1, 1), 1), ((2, 2), 2), ((3, 2), 9)])
def test_multiplicity_values(parts, expected):
    assert multiplicity_m_alpha(Partition(parts)) == expected


@pytest.mark.parametrize("d", range(1, 6))
def test_multiplicity_matches_brute(d):
    for alpha in all_partitions(d):
        k = sum(a - 1 for a in alpha)
        assert brute_fixed_target_factorizations(Permutation.of_type(alpha), k) == multiplicity_m_alpha(alpha)


# -- genus-0 closed forms -----------------------------------------------------


def test_genus0_examples():
    assert genus0_closed_form(Partition((3,))) == 1
    assert genus0_closed_form(Partition((2, 1)), "oracle") == 4
    assert genus0_closed_form(Partition((1, 1)), "oracle") == Fraction(1, 2)
    # the d^(d-1) factor as printed
    assert genus0_closed_form(Partition((2, 1)), "paper") == 108
    assert genus0_closed_form(Partition((1, 1)), "paper") == 2
    with pytest.raises(ValueError, match="no closed form"):
        genus0_closed_form(Partition((1, 1, 1)))


@pytest.mark.parametrize("d", range(1, 7))
def test_one_part_genus0(d):
    inst = make_instance(0, Partition((d,)))
    expected = factorial(inst.r) * Fraction(d) ** (d - 2) / factorial(d)
    assert hurwitz_brute(inst).hurwitz_number == expected == genus0_closed_form(inst.alpha)
