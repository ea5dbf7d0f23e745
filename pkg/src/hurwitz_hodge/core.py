"""Partitions, permutations and small symmetric-group utilities.

Everything here is an immutable value.  Exact rationals are plain
:class:`fractions.Fraction` objects.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial, prod
from typing import Iterable, Sequence

ExactRational = Fraction


def format_fraction(x: Fraction) -> str:
    """Render ``x`` as ``num/den``, or as a bare integer when ``den == 1``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    num, sep, den = text.strip().partition("/")
    if sep:
        return Fraction(int(num), int(den))
    return Fraction(int(num))


@dataclass(frozen=True, order=True)
class Partition:
    """A partition of ``d``; parts are stored weakly decreasing.

    Any iterable of positive integers is accepted and sorted, so
    ``Partition((1, 2)) == Partition((2, 1))``.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ValueError(f"parts must be positive integers, got {p!r}")
        object.__setattr__(self, "parts", tuple(sorted(parts, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"3,1,1"``."""
        try:
            parts = tuple(int(t) for t in text.split(",") if t.strip())
        except ValueError:
            raise ValueError(f"cannot parse partition {text!r}") from None
        return cls(parts)

    def size(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def _partitions_max(n: int, m: int, largest: int):
    # partitions of n into exactly m parts, each <= largest, decreasing lex order
    if m == 0:
        if n == 0:
            yield ()
        return
    hi = min(largest, n - (m - 1))
    lo = -(-n // m)  # first part is at least ceil(n/m)
    for first in range(hi, lo - 1, -1):
        for rest in _partitions_max(n - first, m - 1, first):
            yield (first,) + rest


def enumerate_partitions(d: int, m: int) -> list[Partition]:
    """All partitions of ``d`` with exactly ``m`` parts, lexicographically decreasing."""
    if d < 1 or m < 1:
        raise ValueError("d and m must be positive")
    return [Partition(p) for p in _partitions_max(d, m, d)]


def all_partitions(d: int) -> list[Partition]:
    """Every partition of ``d``, lexicographically decreasing."""
    out = []
    for m in range(1, d + 1):
        out.extend(enumerate_partitions(d, m))
    return sorted(out, key=lambda p: p.parts, reverse=True)


def aut_count(alpha: Partition) -> int:
    """Order of the group permuting equal parts of ``alpha``."""
    return prod(factorial(c) for c in Counter(alpha.parts).values())


def centralizer_order(parts: Iterable[int]) -> int:
    """``z_alpha = prod i^{m_i} m_i!``; the class of type alpha has ``d!/z_alpha`` elements."""
    return prod(i**c * factorial(c) for i, c in Counter(parts).items())


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``{0, ..., d-1}`` stored one-line: ``images[i]`` is the image of ``i``.

    Points are 0-based internally; :meth:`from_cycles` and :meth:`__str__`
    use the customary 1-based labels.  The product ``p * q`` applies ``p``
    first, then ``q``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images!r}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(tuple(range(d)))

    @classmethod
    def from_cycles(cls, d: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from 1-based cycles, e.g. ``from_cycles(5, [(1, 2, 3), (4, 5)])``."""
        images = list(range(d))
        seen = set()
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                if not 1 <= a <= d or a in seen:
                    raise ValueError(f"bad cycle {cyc!r} for degree {d}")
                seen.add(a)
                images[a - 1] = b - 1
        return cls(tuple(images))

    @classmethod
    def transposition(cls, d: int, i: int, j: int) -> "Permutation":
        """The transposition swapping 1-based points ``i`` and ``j``."""
        return cls.from_cycles(d, [(i, j)])

    @classmethod
    def of_type(cls, alpha: Partition | Sequence[int]) -> "Permutation":
        """Representative of cycle type ``alpha`` with cycles on consecutive points."""
        images = []
        start = 0
        for a in alpha:
            images.extend(start + (i + 1) % a for i in range(a))
            start += a
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(other.images[x] for x in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles as 0-based tuples, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def is_transposition(self) -> bool:
        moved = [i for i, x in enumerate(self.images) if i != x]
        return len(moved) == 2

    def support_pair(self) -> tuple[int, int]:
        """The two 0-based points a transposition swaps."""
        moved = [i for i, x in enumerate(self.images) if i != x]
        if len(moved) != 2:
            raise ValueError(f"{self} is not a transposition")
        return moved[0], moved[1]

    def __str__(self):
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cyc)


def cycle_lengths(images: Sequence[int]) -> tuple[int, ...]:
    """Sorted-decreasing cycle lengths of a one-line permutation."""
    n = len(images)
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = images[x]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def cycle_type(sigma: Permutation) -> Partition:
    return Partition(cycle_lengths(sigma.images))


def transpositions_of(d: int) -> list[Permutation]:
    """All transpositions of S_d ordered by their 1-based pair ``(i, j)``, ``i < j``."""
    return [Permutation.transposition(d, i + 1, j + 1) for i, j in combinations(range(d), 2)]


class UnionFind:
    """Disjoint sets over ``range(n)`` with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.count = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1
        return True


def generates_transitively(taus: Sequence[Permutation], d: int) -> bool:
    """True iff the transpositions ``taus`` generate S_d.

    A subgroup of S_d generated by transpositions is all of S_d exactly
    when it acts transitively, i.e. when the graph on ``{1..d}`` with one
    edge per transposition is connected.
    """
    uf = UnionFind(d)
    for t in taus:
        if t.degree != d:
            raise ValueError(f"transposition {t} does not act on {d} points")
        a, b = t.support_pair()
        uf.union(a, b)
    return uf.count <= 1
