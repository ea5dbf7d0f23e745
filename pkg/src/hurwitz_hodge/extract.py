"""Recover linear Hodge integrals from Hurwitz numbers by exact interpolation.

For fixed (g, m) the bracket ``<alpha>`` is a symmetric polynomial whose
coefficients in the monomial symmetric basis are ``(-1)^k I(d, k)``.
Evaluating it at enough points (via Hurwitz numbers and ELSV) gives a
square rational linear system for the integrals; further points check the
fit.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import count
from typing import Callable, Sequence

from .core import Partition, format_fraction
from .elsv import (
    HodgeIntegralTable,
    HodgeMonomial,
    bracket_from_hurwitz,
    bracket_from_table,
    check_stable,
    elsv_rhs,
    monomial_basis,
    monomial_symmetric,
)
from .hurwitz import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    HurwitzInstance,
    Method,
    compute,
    make_instance,
)

log = logging.getLogger(__name__)

DEFAULT_HOLDOUT_BRUTE_BUDGET = 2 * 10**6


class SingularSystem(ArithmeticError):
    pass


class InconsistentSystem(ArithmeticError):
    pass


# -- exact linear algebra ---------------------------------------------------


class RowEchelon:
    """Incrementally maintained reduced basis of a row space over Q."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[tuple[int, list[Fraction]]] = []  # (pivot column, row with pivot 1)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: Sequence) -> list[Fraction]:
        v = [Fraction(x) for x in row]
        for piv, basis in self.rows:
            c = v[piv]
            if c:
                for j in range(piv, self.ncols):
                    v[j] -= c * basis[j]
        return v

    def add(self, row: Sequence) -> bool:
        """Add ``row``; return True if it raised the rank."""
        v = self.reduce(row)
        piv = next((j for j, x in enumerate(v) if x), None)
        if piv is None:
            return False
        lead = v[piv]
        v = [x / lead for x in v]
        # keep earlier rows reduced against the new pivot so reduce() is one pass
        for i, (p, basis) in enumerate(self.rows):
            c = basis[piv]
            if c:
                self.rows[i] = (p, [a - c * b for a, b in zip(basis, v)])
        self.rows.append((piv, v))
        self.rows.sort(key=lambda pr: pr[0])
        return True


def solve_exact(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve ``matrix @ x = rhs`` over Q by Gauss-Jordan elimination.

    The system may be overdetermined; the solution must be unique and
    every equation must hold exactly.
    """
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            raise SingularSystem(f"column {c} has no pivot; rank < {ncols}")
        a[r], a[p] = a[p], a[r]
        lead = a[r][c]
        a[r] = [x / lead for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    for i in range(r, nrows):
        if a[i][ncols]:
            raise InconsistentSystem(f"equation {i} has residual {a[i][ncols]}")
    return [a[i][ncols] for i in range(ncols)]


# -- plans -------------------------------------------------------------------


def candidate_points(m: int):
    """Weakly decreasing positive m-tuples by max entry, then lexicographically."""
    for top in count(1):
        yield from _with_first(top, m)


def _with_first(top: int, m: int):
    if m == 1:
        yield (top,)
        return
    for rest in _bounded(m - 1, top):
        yield (top,) + rest


def _bounded(m: int, top: int):
    # weakly decreasing m-tuples with entries in [1, top], lexicographically increasing
    if m == 0:
        yield ()
        return
    for first in range(1, top + 1):
        for rest in _bounded(m - 1, first):
            yield (first,) + rest


def design_row(unknowns: Sequence[HodgeMonomial], alpha: Sequence[int]) -> list[int]:
    """Coefficients of the unknown integrals in ``<alpha>``."""
    return [(-1) ** mu.k * monomial_symmetric(mu.psi, alpha) for mu in unknowns]


@dataclass(frozen=True)
class ExtractionPlan:
    g: int
    m: int
    unknowns: tuple[HodgeMonomial, ...]
    points: tuple[tuple[int, ...], ...]
    holdouts: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        check_stable(self.g, self.m)
        if len(self.points) < len(self.unknowns):
            raise ValueError("fewer evaluation points than unknowns")
        echelon = RowEchelon(len(self.unknowns))
        for p in self.points:
            if len(p) != self.m or any(x < 1 for x in p):
                raise ValueError(f"bad evaluation point {p}")
            echelon.add(design_row(self.unknowns, p))
        if echelon.rank < len(self.unknowns):
            raise SingularSystem(f"design matrix has rank {echelon.rank} < {len(self.unknowns)}")


def build_plan(g: int, m: int, holdout_count: int = 0) -> ExtractionPlan:
    """Pick evaluation points small-first, keeping each one that raises the exact rank."""
    unknowns = tuple(monomial_basis(g, m))
    echelon = RowEchelon(len(unknowns))
    points = []
    pool = candidate_points(m)
    for p in pool:
        if echelon.add(design_row(unknowns, p)):
            points.append(p)
            if echelon.rank == len(unknowns):
                break
    holdouts = tuple(next(pool) for _ in range(holdout_count))
    return ExtractionPlan(g, m, unknowns, tuple(points), holdouts)


# -- extraction ----------------------------------------------------------------

HurwitzFn = Callable[[HurwitzInstance], Fraction]


def _engine_fn(engine, budget: int) -> HurwitzFn:
    if callable(engine):
        return engine
    return lambda inst: compute(inst, engine, budget=budget).hurwitz_number


def extract_table(
    plan: ExtractionPlan,
    engine: Method | str | HurwitzFn = Method.CLASS_ALGEBRA,
    budget: int | None = None,
) -> HodgeIntegralTable:
    """Solve for every linear Hodge integral of ``(plan.g, plan.m)``.

    ``engine`` is an engine name or any callable mapping an instance to
    its Hurwitz number.
    """
    hurwitz = _engine_fn(engine, DEFAULT_BUDGET if budget is None else budget)
    matrix, rhs = [], []
    for alpha in plan.points:
        inst = make_instance(plan.g, Partition(alpha))
        H = hurwitz(inst)
        log.debug("H^%d_%s = %s", plan.g, alpha, H)
        matrix.append(design_row(plan.unknowns, alpha))
        rhs.append(bracket_from_hurwitz(inst, H))
    solution = solve_exact(matrix, rhs)
    return HodgeIntegralTable(plan.g, plan.m, dict(zip(plan.unknowns, solution)))


@dataclass
class HoldoutResult:
    alpha: tuple[int, ...]
    method: str
    hurwitz: Fraction
    predicted: Fraction

    @property
    def passed(self) -> bool:
        return self.hurwitz == self.predicted


@dataclass
class VerificationReport:
    g: int
    m: int
    results: list[HoldoutResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.results) and all(r.passed for r in self.results)

    def lines(self) -> list[str]:
        out = []
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            alpha = ",".join(map(str, r.alpha))
            out.append(
                f"{status} g={self.g} alpha=({alpha}) H={format_fraction(r.hurwitz)} "
                f"elsv={format_fraction(r.predicted)} method={r.method}"
            )
        return out

    def as_dict(self) -> dict:
        return {
            "g": self.g,
            "m": self.m,
            "passed": self.passed,
            "holdouts": [
                {
                    "alpha": list(r.alpha),
                    "method": r.method,
                    "hurwitz": format_fraction(r.hurwitz),
                    "elsv": format_fraction(r.predicted),
                    "passed": r.passed,
                }
                for r in self.results
            ],
        }


def verify_polynomiality(
    plan: ExtractionPlan,
    table: HodgeIntegralTable,
    engine: Method | str | HurwitzFn | None = None,
    brute_budget: int = DEFAULT_HOLDOUT_BRUTE_BUDGET,
) -> VerificationReport:
    """Check ELSV with ``table`` against freshly computed Hurwitz numbers at the holdouts.

    By default each holdout is counted by brute force when at most
    ``brute_budget`` tuples are involved and by the class algebra
    otherwise.  Mismatches are reported, never raised.
    """
    report = VerificationReport(plan.g, plan.m)
    for alpha in plan.holdouts:
        inst = make_instance(plan.g, Partition(alpha))
        if engine is None:
            try:
                rep = compute(inst, Method.BRUTE, budget=brute_budget)
            except BudgetExceeded:
                rep = compute(inst, Method.CLASS_ALGEBRA)
            H, method = rep.hurwitz_number, rep.method.value
        elif callable(engine):
            H, method = Fraction(engine(inst)), getattr(engine, "__name__", "custom")
        else:
            rep = compute(inst, engine)
            H, method = rep.hurwitz_number, rep.method.value
        report.results.append(HoldoutResult(alpha, method, H, elsv_rhs(inst, table)))
    return report


def fit_residuals(plan: ExtractionPlan, table: HodgeIntegralTable, extra_points, engine=Method.CLASS_ALGEBRA):
    """Residuals ``<alpha>_hurwitz - <alpha>_table`` at the fit points plus ``extra_points``."""
    hurwitz = _engine_fn(engine, DEFAULT_BUDGET)
    out = {}
    for alpha in tuple(plan.points) + tuple(extra_points):
        inst = make_instance(plan.g, Partition(alpha))
        out[tuple(alpha)] = bracket_from_hurwitz(inst, hurwitz(inst)) - bracket_from_table(
            plan.g, plan.m, alpha, table
        )
    return out
