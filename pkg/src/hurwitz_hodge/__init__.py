"""Exact Hurwitz numbers and linear Hodge integrals via the ELSV formula."""

__version__ = "0.1.0"

from .core import (
    ExactRational,
    Partition,
    Permutation,
    aut_count,
    cycle_type,
    enumerate_partitions,
    generates_transitively,
    transpositions_of,
)
from .hurwitz import (
    BudgetExceeded,
    CountReport,
    HurwitzInstance,
    Method,
    brute_fixed_target_factorizations,
    cycle_factorization_count,
    genus0_closed_form,
    hurwitz_brute,
    hurwitz_class_algebra,
    hurwitz_number,
    make_instance,
    multiplicity_m_alpha,
)
from .elsv import (
    HodgeIntegralTable,
    HodgeMonomial,
    bracket_from_hurwitz,
    bracket_from_table,
    elsv_rhs,
    monomial_basis,
)
from .extract import ExtractionPlan, build_plan, extract_table, verify_polynomiality
