"""The ELSV formula in both directions.

The bracket

    <alpha_1..alpha_m> = int_{Mbar_{g,m}} (1 - lambda_1 + ... +- lambda_g) / prod(1 - alpha_i psi_i)

expands as ``sum (-1)^k I(d, k) m_d(alpha)`` over linear Hodge integrals
``I(d, k) = int psi_1^d_1 ... psi_m^d_m lambda_k`` with
``sum(d) + k = 3g - 3 + m``, where ``m_d`` is the monomial symmetric
polynomial of the exponent vector ``d``.  ELSV then reads

    H^g_alpha = r!/|Aut alpha| * prod alpha_i^alpha_i / alpha_i! * <alpha>.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import factorial, prod
from typing import Iterable, Sequence

from .core import aut_count, format_fraction, parse_fraction
from .hurwitz import HurwitzInstance


class HypothesisError(ValueError):
    """Raised for (g, m) with 2g - 2 + m <= 0."""


class IncompleteTable(KeyError):
    pass


def check_stable(g: int, m: int) -> None:
    if g < 0 or m < 1 or 2 * g - 2 + m <= 0:
        raise HypothesisError(f"(g, m) = ({g}, {m}) is outside Theorem 1.1 hypothesis (2g - 2 + m > 0)")


@dataclass(frozen=True, order=True)
class HodgeMonomial:
    """Index of ``int psi_1^d_1 ... psi_m^d_m lambda_k`` over Mbar_{g,m}; ``psi`` sorted decreasing."""

    g: int
    m: int
    psi: tuple[int, ...]
    k: int

    def __post_init__(self):
        psi = tuple(sorted(self.psi, reverse=True))
        object.__setattr__(self, "psi", psi)
        check_stable(self.g, self.m)
        if len(psi) != self.m or any(e < 0 for e in psi):
            raise ValueError(f"need {self.m} nonnegative psi exponents, got {psi}")
        if not 0 <= self.k <= self.g:
            raise ValueError(f"lambda index {self.k} outside [0, {self.g}]")
        if sum(psi) + self.k != 3 * self.g - 3 + self.m:
            raise ValueError(f"{psi}, k={self.k} does not have degree {3 * self.g - 3 + self.m}")

    def label(self) -> str:
        return ",".join(map(str, self.psi)) + f"|{self.k}"


def _exponent_vectors(n: int, m: int, largest: int | None = None):
    # weakly decreasing m-tuples of nonnegative ints summing to n, lexicographically decreasing
    if largest is None:
        largest = n
    if m == 0:
        if n == 0:
            yield ()
        return
    for first in range(min(n, largest), -1, -1):
        if first * m < n:
            break
        for rest in _exponent_vectors(n - first, m - 1, first):
            yield (first,) + rest


def monomial_basis(g: int, m: int) -> list[HodgeMonomial]:
    """Every linear Hodge monomial on Mbar_{g,m}: by lambda index, then psi exponents decreasing."""
    check_stable(g, m)
    dim = 3 * g - 3 + m
    out = []
    for k in range(0, min(g, dim) + 1):
        for psi in _exponent_vectors(dim - k, m):
            out.append(HodgeMonomial(g, m, psi, k))
    return out


def monomial_symmetric(exponents: Sequence[int], alpha: Sequence[int]) -> int:
    """``m_e(alpha)``: sum of ``prod alpha_i^e_i`` over distinct rearrangements of ``e``."""
    return sum(prod(a**e for a, e in zip(alpha, perm)) for perm in set(permutations(exponents)))


@dataclass
class HodgeIntegralTable:
    g: int
    m: int
    entries: dict[HodgeMonomial, Fraction] = field(default_factory=dict)

    def __getitem__(self, key) -> Fraction:
        if not isinstance(key, HodgeMonomial):
            psi, k = key
            key = HodgeMonomial(self.g, self.m, tuple(psi), k)
        return self.entries[key]

    def __setitem__(self, key: HodgeMonomial, value) -> None:
        if (key.g, key.m) != (self.g, self.m):
            raise ValueError(f"monomial {key} does not belong to (g, m) = ({self.g}, {self.m})")
        self.entries[key] = Fraction(value)

    def missing(self) -> list[HodgeMonomial]:
        return [mu for mu in monomial_basis(self.g, self.m) if mu not in self.entries]

    def require_complete(self) -> None:
        missing = self.missing()
        if missing:
            raise IncompleteTable(
                f"table for (g, m) = ({self.g}, {self.m}) is missing " + ", ".join(mu.label() for mu in missing)
            )

    @classmethod
    def zeros(cls, g: int, m: int) -> "HodgeIntegralTable":
        return cls(g, m, {mu: Fraction(0) for mu in monomial_basis(g, m)})

    # text format: one line per monomial, "g m d1,...,dm k num/den"

    def dumps(self) -> str:
        lines = []
        for mu in sorted(self.entries, key=_canonical_key):
            v = self.entries[mu]
            lines.append(f"{mu.g} {mu.m} {','.join(map(str, mu.psi))} {mu.k} {v.numerator}/{v.denominator}")
        return "".join(line + "\n" for line in lines)

    @classmethod
    def loads(cls, text: str, g: int | None = None, m: int | None = None) -> "HodgeIntegralTable":
        table = None if g is None else cls(g, m)
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip() or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 5:
                raise ValueError(f"line {lineno}: expected 5 fields, got {len(fields)}")
            lg, lm, psi, k, value = fields
            mu = HodgeMonomial(int(lg), int(lm), tuple(int(x) for x in psi.split(",")), int(k))
            if table is None:
                table = cls(mu.g, mu.m)
            table[mu] = parse_fraction(value)
        if table is None:
            raise ValueError("empty table and no (g, m) given")
        return table

    def write(self, path) -> None:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(self.dumps())

    @classmethod
    def read(cls, path) -> "HodgeIntegralTable":
        with open(path, encoding="ascii") as fh:
            return cls.loads(fh.read())


_BASIS_ORDER: dict[tuple[int, int], dict[HodgeMonomial, int]] = {}


def _canonical_key(mu: HodgeMonomial):
    order = _BASIS_ORDER.get((mu.g, mu.m))
    if order is None:
        order = _BASIS_ORDER[mu.g, mu.m] = {b: i for i, b in enumerate(monomial_basis(mu.g, mu.m))}
    return order[mu]


def bracket_from_table(g: int, m: int, alpha: Sequence[int], table: HodgeIntegralTable) -> Fraction:
    """Evaluate ``<alpha>`` from the linear Hodge integrals in ``table``."""
    check_stable(g, m)
    if len(alpha) != m:
        raise ValueError(f"expected {m} values, got {len(alpha)}")
    if (table.g, table.m) != (g, m):
        raise ValueError("table is for a different (g, m)")
    table.require_complete()
    total = Fraction(0)
    for mu in monomial_basis(g, m):
        value = table.entries[mu]
        if value:
            total += (-1) ** mu.k * value * monomial_symmetric(mu.psi, alpha)
    return total


def elsv_prefactor(inst: HurwitzInstance) -> Fraction:
    """``r!/|Aut alpha| * prod alpha_i^alpha_i / alpha_i!``."""
    return Fraction(factorial(inst.r), aut_count(inst.alpha)) * prod(
        Fraction(a**a, factorial(a)) for a in inst.alpha
    )


def bracket_from_hurwitz(inst: HurwitzInstance, H) -> Fraction:
    """Solve ELSV for ``<alpha>`` given the Hurwitz number ``H``."""
    check_stable(inst.g, inst.m)
    return Fraction(H) / elsv_prefactor(inst)


def elsv_rhs(inst: HurwitzInstance, table: HodgeIntegralTable) -> Fraction:
    """Right-hand side of ELSV: the Hurwitz number predicted by ``table``."""
    check_stable(inst.g, inst.m)
    return elsv_prefactor(inst) * bracket_from_table(inst.g, inst.m, inst.alpha.parts, table)


def bracket_expansion(g: int, m: int, table: HodgeIntegralTable) -> dict[tuple[int, ...], Fraction]:
    """``<alpha>`` as an explicit polynomial: exponent vector -> coefficient."""
    table.require_complete()
    poly: dict[tuple[int, ...], Fraction] = {}
    for mu in monomial_basis(g, m):
        value = table.entries[mu]
        if not value:
            continue
        for e in set(permutations(mu.psi)):
            poly[e] = poly.get(e, Fraction(0)) + (-1) ** mu.k * value
    return {e: c for e, c in sorted(poly.items()) if c}


def format_table(table: HodgeIntegralTable) -> Iterable[str]:
    """Human-readable ``psi-exponents | lambda-index | value`` lines."""
    for mu in monomial_basis(table.g, table.m):
        if mu in table.entries:
            yield f"{','.join(map(str, mu.psi))} | {mu.k} | {format_fraction(table.entries[mu])}"
