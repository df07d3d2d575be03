"""Numerical semigroup primitives.

Everything here is exact integer arithmetic. Membership is answered from the
Apery set of the first generator (minimum element of the semigroup in each
residue class), which also yields the conductor for free.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

from .errors import GcdNotOne, NoGaps, NotAMember, NotMinimal

Vector = tuple[int, ...]


def min_by_residue(gens: Sequence[int], modulus: int) -> list[float]:
    """Least element of the monoid spanned by ``gens`` in each class mod ``modulus``.

    Shortest paths on the residue graph. Classes the monoid never reaches get
    ``math.inf``, so this also works when ``gcd(gens) > 1``.
    """
    dist: list[float] = [math.inf] * modulus
    dist[0] = 0
    heap = [(0, 0)]
    steps = [g for g in set(gens) if g % modulus]
    while heap:
        d, r = heapq.heappop(heap)
        if d > dist[r]:
            continue
        for g in steps:
            nd = d + g
            nr = nd % modulus
            if nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return dist


def in_monoid(x: int, gens: Sequence[int]) -> bool:
    """True iff ``x`` is a nonnegative integer combination of ``gens``."""
    if x < 0:
        return False
    if x == 0:
        return True
    gens = [g for g in gens if g <= x]
    if not gens:
        return False
    m = min(gens)
    return x >= min_by_residue(gens, m)[x % m]


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup given by its minimal generating set.

    ``generators`` is ascending unless the semigroup was built with
    ``keep_order=True``; vectors (factorizations, RF rows, binomials) always
    follow ``generators`` order.
    """

    generators: Vector
    conductor: int = field(compare=False)
    _apery: tuple[int, ...] = field(repr=False, compare=False)

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    @property
    def multiplicity(self) -> int:
        return min(self.generators)

    @cached_property
    def membership_table(self) -> tuple[bool, ...]:
        return tuple(self.contains(x) for x in range(self.conductor + 1))

    def contains(self, x: int) -> bool:
        if x < 0:
            return False
        m = self.generators[0]
        return x >= self._apery[x % m]

    __contains__ = contains

    @cached_property
    def _prefix_tables(self) -> list[list[float]]:
        # tables[i][res]: least element of <g_0..g_i> congruent to res mod g_0
        g0 = self.generators[0]
        return [min_by_residue(self.generators[: i + 1], g0) for i in range(len(self.generators))]


def new_semigroup(raw_generators: Sequence[int], keep_order: bool = False) -> NumericalSemigroup:
    """Build a semigroup, reducing ``raw_generators`` to a minimal generating set.

    With ``keep_order=True`` the given order is preserved and a non-minimal
    input raises :class:`NotMinimal` instead of being reduced.
    """
    raw = [int(g) for g in raw_generators]
    if not raw or any(g <= 0 for g in raw):
        raise ValueError("generators must be a nonempty list of positive integers")
    if math.gcd(*raw) != 1:
        raise GcdNotOne(f"gcd{tuple(raw)} = {math.gcd(*raw)} != 1")

    if keep_order:
        if len(set(raw)) != len(raw):
            raise NotMinimal(f"repeated generator in {tuple(raw)}")
        for i, g in enumerate(raw):
            others = raw[:i] + raw[i + 1:]
            if in_monoid(g, others):
                raise NotMinimal(f"{g} is a combination of the other generators")
        gens = tuple(raw)
    else:
        kept: list[int] = []
        for g in sorted(set(raw)):
            if not in_monoid(g, kept):
                kept.append(g)
        gens = tuple(kept)

    apery = min_by_residue(gens, gens[0])
    # F(H) = max Ap(H, m) - m for any nonzero m in H
    conductor = int(max(apery)) - gens[0] + 1
    return NumericalSemigroup(gens, conductor, tuple(int(a) for a in apery))


@dataclass(frozen=True)
class AperySet:
    modulus: int
    elements: tuple[int, ...]


def contains(H: NumericalSemigroup, x: int) -> bool:
    return H.contains(x)


def apery_set(H: NumericalSemigroup, m: int) -> AperySet:
    """``{h in H : h - m not in H}`` for a nonzero element ``m`` of ``H``."""
    if m <= 0 or not H.contains(m):
        raise NotAMember(f"{m} is not a nonzero element of the semigroup")
    best: dict[int, int] = {}
    x = 0
    while len(best) < m:
        r = x % m
        if r not in best and H.contains(x):
            best[r] = x
        x += 1
    return AperySet(m, tuple(sorted(best.values())))


def frobenius_number(H: NumericalSemigroup) -> int:
    if H.conductor == 0:
        raise NoGaps("the semigroup <1> has no gaps")
    return H.conductor - 1


def pseudo_frobenius(H: NumericalSemigroup) -> tuple[int, ...]:
    """Pseudo-Frobenius numbers, ascending.

    Taken as ``w - m`` for the maximal elements ``w`` of ``Ap(H, m)`` under
    ``x <=_H y  <=>  y - x in H``, with ``m`` the multiplicity.
    """
    m = H.multiplicity
    ap = apery_set(H, m).elements
    maximal = [w for w in ap if not any(v != w and H.contains(v - w) for v in ap)]
    return tuple(w - m for w in maximal)


def type_of(H: NumericalSemigroup) -> int:
    return len(pseudo_frobenius(H))


def is_symmetric(H: NumericalSemigroup) -> bool:
    return type_of(H) == 1


def iter_factorizations(H: NumericalSemigroup, x: int) -> Iterator[Vector]:
    """Yield the factorizations of ``x`` (unordered; see :func:`factorizations`).

    Depth first from the last generator down to the first. A branch is only
    entered when the remainder is representable by the generators still
    available, so no search path dead-ends.
    """
    if x < 0 or not H.contains(x):
        return
    gens = H.generators
    g0 = gens[0]
    tables = H._prefix_tables
    e = len(gens)
    coeffs = [0] * e

    def rec(i: int, rem: int) -> Iterator[Vector]:
        if i == 0:
            coeffs[0] = rem // g0
            yield tuple(coeffs)
            return
        g = gens[i]
        below = tables[i - 1]
        for c in range(rem // g, -1, -1):
            r2 = rem - c * g
            if r2 >= below[r2 % g0]:
                coeffs[i] = c
                yield from rec(i - 1, r2)
        coeffs[i] = 0

    yield from rec(e - 1, x)


def factorizations(H: NumericalSemigroup, x: int) -> list[Vector]:
    """All factorizations of ``x`` as coefficient vectors, in lexicographic order."""
    return sorted(iter_factorizations(H, x))


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))
