"""Connected Hurwitz numbers from transposition factorizations.

``H^g_alpha`` is ``1/d!`` times the number of ordered ``r``-tuples of
transpositions of S_d that generate S_d and whose product has cycle type
``alpha``.  Two engines compute the tuple count:

* :func:`hurwitz_brute` walks every tuple depth-first;
* :func:`hurwitz_class_algebra` propagates counts over cycle types and
  sieves out the non-transitive tuples.

They share no counting code, so agreement between them is a real check.
"""
from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from .core import (
    Partition,
    Permutation,
    aut_count,
    all_partitions,
    centralizer_order,
    cycle_lengths,
)

DEFAULT_BUDGET = 10**9


class BudgetExceeded(RuntimeError):
    pass


class Method(str, enum.Enum):
    BRUTE = "brute"
    CLASS_ALGEBRA = "class_algebra"


@dataclass(frozen=True)
class HurwitzInstance:
    g: int
    alpha: Partition
    d: int
    m: int
    b: int
    r: int
    k: int


def make_instance(g: int, alpha: Partition | tuple[int, ...]) -> HurwitzInstance:
    """Attach the branching numerology to ``(g, alpha)`` and check it."""
    if not isinstance(alpha, Partition):
        alpha = Partition(tuple(alpha))
    if g < 0:
        raise ValueError(f"genus must be nonnegative, got {g}")
    d, m = alpha.size(), alpha.length()
    b = 2 * d + 2 * g - 2
    k = sum(a - 1 for a in alpha)
    r = d + m + 2 * (g - 1)
    if r < 0:
        raise ValueError("no simple branch points possible (r < 0)")
    assert r == b - k
    # Riemann-Hurwitz with r simple points and total ramification k over infinity
    assert 2 * g - 2 == -2 * d + r + k
    return HurwitzInstance(g=g, alpha=alpha, d=d, m=m, b=b, r=r, k=k)


@dataclass(frozen=True)
class CountReport:
    instance: HurwitzInstance
    tuple_count: int
    hurwitz_number: Fraction
    method: Method

    def __post_init__(self):
        if self.hurwitz_number * factorial(self.instance.d) != self.tuple_count:
            raise ValueError("hurwitz_number * d! must equal tuple_count")


def _report(inst: HurwitzInstance, count: int, method: Method) -> CountReport:
    return CountReport(inst, count, Fraction(count, factorial(inst.d)), method)


# -- brute force -------------------------------------------------------------


class _Walker:
    """Lazily built transition tables for walking products of transpositions in S_d.

    A state is a pair of ids: the running product (one-line tuple) and the
    connected components of the transposition graph seen so far (each
    point labelled by the smallest point of its block).
    """

    def __init__(self, d: int):
        self.d = d
        self.pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
        self.perms: list[tuple[int, ...]] = []
        self.perm_id: dict[tuple[int, ...], int] = {}
        self.perm_rows: list[list[int] | None] = []
        self.ncycles: list[int] = []
        self.comps: list[tuple[int, ...]] = []
        self.comp_id: dict[tuple[int, ...], int] = {}
        self.comp_rows: list[list[int] | None] = []
        self.ncomps: list[int] = []

    def perm(self, images: tuple[int, ...]) -> int:
        i = self.perm_id.get(images)
        if i is None:
            i = len(self.perms)
            self.perm_id[images] = i
            self.perms.append(images)
            self.perm_rows.append(None)
            self.ncycles.append(len(cycle_lengths(images)))
        return i

    def comp(self, labels: tuple[int, ...]) -> int:
        i = self.comp_id.get(labels)
        if i is None:
            i = len(self.comps)
            self.comp_id[labels] = i
            self.comps.append(labels)
            self.comp_rows.append(None)
            self.ncomps.append(len(set(labels)))
        return i

    def perm_row(self, p: int) -> list[int]:
        row = self.perm_rows[p]
        if row is None:
            images = self.perms[p]
            row = []
            for a, b in self.pairs:
                swap = {a: b, b: a}
                row.append(self.perm(tuple(swap.get(x, x) for x in images)))
            self.perm_rows[p] = row
        return row

    def comp_row(self, c: int) -> list[int]:
        row = self.comp_rows[c]
        if row is None:
            labels = self.comps[c]
            row = []
            for a, b in self.pairs:
                la, lb = labels[a], labels[b]
                lo, hi = min(la, lb), max(la, lb)
                row.append(self.comp(tuple(lo if x == hi else x for x in labels)))
            self.comp_rows[c] = row
        return row


def _check_budget(d: int, r: int, budget: int) -> None:
    candidates = (d * (d - 1) // 2) ** r
    if candidates > budget:
        raise BudgetExceeded(
            f"{candidates} candidate tuples exceed the enumeration budget of {budget}; "
            "use the class-algebra engine or raise the budget"
        )


def _brute_count(parts: tuple[int, ...], r: int, first: int | None = None) -> int:
    """Count transitive r-tuples with product of type ``parts``.

    With ``first`` set, only tuples starting with transposition number
    ``first`` are counted.
    """
    d = sum(parts)
    m = len(parts)
    w = _Walker(d)
    accept: dict[int, bool] = {}

    def accepting(p: int) -> bool:
        ok = accept.get(p)
        if ok is None:
            ok = accept[p] = cycle_lengths(w.perms[p]) == parts
        return ok

    ncycles, ncomps = w.ncycles, w.ncomps
    ntrans = len(w.pairs)

    def walk(p: int, c: int, left: int) -> int:
        if left == 0:
            return 1 if ncomps[c] == 1 and accepting(p) else 0
        # each transposition merges at most two blocks and moves the cycle count by one
        if ncomps[c] - 1 > left or abs(ncycles[p] - m) > left:
            return 0
        prow, crow = w.perm_row(p), w.comp_row(c)
        total = 0
        if left == 1:
            for t in range(ntrans):
                if ncomps[crow[t]] == 1 and accepting(prow[t]):
                    total += 1
            return total
        for t in range(ntrans):
            total += walk(prow[t], crow[t], left - 1)
        return total

    p0 = w.perm(tuple(range(d)))
    c0 = w.comp(tuple(range(d)))
    if first is None:
        return walk(p0, c0, r)
    if r == 0:
        return 0
    return walk(w.perm_row(p0)[first], w.comp_row(c0)[first], r - 1)


def _brute_branch(args):
    return _brute_count(*args)


def hurwitz_brute(inst: HurwitzInstance, budget: int = DEFAULT_BUDGET, workers: int = 1) -> CountReport:
    """Count by enumerating every ordered r-tuple of transpositions.

    ``workers > 1`` splits the walk over the first transposition across
    processes; the total is the same for any worker count.
    """
    _check_budget(inst.d, inst.r, budget)
    parts = inst.alpha.parts
    ntrans = inst.d * (inst.d - 1) // 2
    if workers > 1 and inst.r > 0 and ntrans > 1:
        jobs = [(parts, inst.r, t) for t in range(ntrans)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            count = sum(pool.map(_brute_branch, jobs))
    else:
        count = _brute_count(parts, inst.r)
    return _report(inst, count, Method.BRUTE)


def brute_fixed_target_factorizations(xi: Permutation, t: int, budget: int = DEFAULT_BUDGET) -> int:
    """Number of ordered t-tuples of transpositions whose product is exactly ``xi``.

    No transitivity condition.  Products are taken left to right.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    d = xi.degree
    _check_budget(d, t, budget)
    w = _Walker(d)
    target = w.perm(xi.images)
    dist: dict[int, int] = {}

    def distance(p: int) -> int:
        # transpositions still needed: d - #cycles(p^-1 xi)
        v = dist.get(p)
        if v is None:
            images = w.perms[p]
            inv = [0] * d
            for i, x in enumerate(images):
                inv[x] = i
            rest = tuple(xi.images[inv[x]] for x in range(d))
            v = dist[p] = d - len(cycle_lengths(rest))
        return v

    def walk(p: int, left: int) -> int:
        if left == 0:
            return 1 if p == target else 0
        if distance(p) > left:
            return 0
        total = 0
        for q in w.perm_row(p):
            total += walk(q, left - 1)
        return total

    return walk(w.perm(tuple(range(d))), t)


# -- class algebra -------------------------------------------------------------


@lru_cache(maxsize=None)
def transition_counts(d: int) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    """Cycle types of S_d and the matrix ``N[C][C']``.

    ``N[C][C']`` is the number of transpositions ``tau`` with ``rho * tau`` of
    type ``C'`` for a fixed ``rho`` of type ``C``.
    """
    types = tuple(p.parts for p in all_partitions(d))
    index = {c: i for i, c in enumerate(types)}
    pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
    rows = []
    for c in types:
        rho = Permutation.of_type(c).images
        row = [0] * len(types)
        for a, b in pairs:
            swap = {a: b, b: a}
            row[index[cycle_lengths(tuple(swap.get(x, x) for x in rho))]] += 1
        rows.append(tuple(row))
    return types, tuple(rows)


@lru_cache(maxsize=None)
def _class_vector(d: int, r: int) -> tuple[int, ...]:
    # number of r-tuples (transitive or not) whose product has each cycle type
    types, rows = transition_counts(d)
    if r == 0:
        return tuple(1 if c == (1,) * d else 0 for c in types)
    prev = _class_vector(d, r - 1)
    out = [0] * len(types)
    for i, v in enumerate(prev):
        if v:
            for j, n in enumerate(rows[i]):
                if n:
                    out[j] += v * n
    return tuple(out)


def _class_size(parts: tuple[int, ...]) -> int:
    return factorial(sum(parts)) // centralizer_order(parts)


@lru_cache(maxsize=None)
def _all_fixed(parts: tuple[int, ...], r: int) -> int:
    """r-tuples with product equal to one fixed permutation of type ``parts``."""
    if not parts:
        return 1 if r == 0 else 0
    d = sum(parts)
    types, _ = transition_counts(d)
    total = _class_vector(d, r)[types.index(parts)]
    q, rem = divmod(total, _class_size(parts))
    assert rem == 0, "class counts must be uniform over the class"
    return q


@lru_cache(maxsize=None)
def _connected_fixed(parts: tuple[int, ...], r: int) -> int:
    """Transitive r-tuples with product equal to one fixed permutation of type ``parts``.

    Every tuple splits by the orbit S of the first point, which is a union
    of cycles including the first one; the transpositions inside S form a
    transitive sub-tuple and are interleaved among the r slots.
    """
    total = _all_fixed(parts, r)
    head, rest = parts[0], parts[1:]
    full = (1 << len(rest)) - 1
    for mask in range(full):
        inside = tuple(sorted((head,) + tuple(x for i, x in enumerate(rest) if mask >> i & 1), reverse=True))
        outside = tuple(sorted((x for i, x in enumerate(rest) if not mask >> i & 1), reverse=True))
        for s in range(r + 1):
            c = _connected_fixed(inside, s)
            if c:
                total -= comb(r, s) * c * _all_fixed(outside, r - s)
    return total


def hurwitz_class_algebra(inst: HurwitzInstance) -> CountReport:
    """Same count as :func:`hurwitz_brute`, without enumerating tuples."""
    parts = inst.alpha.parts
    count = _connected_fixed(parts, inst.r) * _class_size(parts)
    return _report(inst, count, Method.CLASS_ALGEBRA)


def compute(
    inst: HurwitzInstance,
    method: Method | str = "auto",
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> CountReport:
    """Dispatch to an engine; ``"auto"`` uses brute force when the budget admits it."""
    if isinstance(method, str):
        method = method.replace("-", "_")
    if method == "auto":
        ntrans = inst.d * (inst.d - 1) // 2
        method = Method.BRUTE if ntrans**inst.r <= budget else Method.CLASS_ALGEBRA
    method = Method(method)
    if method is Method.BRUTE:
        return hurwitz_brute(inst, budget=budget, workers=workers)
    return hurwitz_class_algebra(inst)


def hurwitz_number(g: int, alpha, method: Method | str = Method.CLASS_ALGEBRA, **kw) -> Fraction:
    return compute(make_instance(g, alpha), method, **kw).hurwitz_number


# -- closed forms ------------------------------------------------------------


def multiplicity_m_alpha(alpha: Partition) -> Fraction:
    """``k! * prod alpha_i^(alpha_i - 1) / alpha_i!`` with ``k = sum(alpha_i - 1)``."""
    k = sum(a - 1 for a in alpha)
    value = factorial(k) * prod(Fraction(a ** (a - 1), factorial(a)) for a in alpha)
    if value.denominator != 1:
        raise ArithmeticError(f"m_alpha for {alpha} is not an integer: {value}")
    return value


def cycle_factorization_count(a: int) -> int:
    """Factorizations of a fixed a-cycle into a-1 transpositions: ``a^(a-2)``."""
    if a < 1:
        raise ValueError("cycle length must be positive")
    if a == 1:
        return 1
    return a ** (a - 2)


class ExponentMode(str, enum.Enum):
    PAPER = "paper"
    ORACLE = "oracle"


def genus0_closed_form(alpha: Partition, exponent_mode: ExponentMode | str = ExponentMode.ORACLE) -> Fraction:
    """Genus-0 Hurwitz numbers for one- and two-part profiles.

    One part: ``r! d^(d-2) / d!``.  Two parts:
    ``r!/|Aut| * prod alpha_i^alpha_i/alpha_i! * F(d)`` where ``F(d) = d^-1``
    in ``oracle`` mode (agrees with enumeration) and ``d^(d-1)`` in
    ``paper`` mode (the factor as usually printed, kept for comparison).
    """
    if not isinstance(alpha, Partition):
        alpha = Partition(tuple(alpha))
    mode = ExponentMode(exponent_mode)
    inst = make_instance(0, alpha)
    d, r = inst.d, inst.r
    if alpha.length() == 1:
        return factorial(r) * Fraction(d) ** (d - 2) / factorial(d)
    if alpha.length() == 2:
        factor = Fraction(d) ** (d - 1) if mode is ExponentMode.PAPER else Fraction(1, d)
        weights = prod(Fraction(a**a, factorial(a)) for a in alpha)
        return Fraction(factorial(r), aut_count(alpha)) * weights * factor
    raise ValueError(f"no closed form implemented for {alpha.length()} parts")
