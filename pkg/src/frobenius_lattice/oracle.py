"""Brute-force ground truth for Frobenius numbers.

Two independent routes are kept: the residue-table (Apery set) shortest-path
relaxation, and a dense sieve. Neither touches the lattice machinery.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Optional

from .config import get_budget
from .errors import DomainError, ResourceError


@dataclass(frozen=True)
class GeneratorSet:
    gens: tuple[int, ...]

    def __init__(self, gens: Iterable[int]):
        values = sorted(set(int(g) for g in gens))
        if not values:
            raise DomainError("generator set is empty")
        if values[0] < 1:
            raise DomainError(f"generators must be positive, got {values[0]}")
        if reduce(gcd, values) != 1:
            raise DomainError(f"generators {values} are not relatively prime")
        object.__setattr__(self, "gens", tuple(values))

    @property
    def modulus(self) -> int:
        return self.gens[0]


@dataclass(frozen=True)
class RepresentationWitness:
    """Coefficients with ``a*c1 + b*c2 + c*c3`` equal to the witnessed target."""

    c1: int
    c2: int
    c3: int = 0

    def value(self, gens) -> int:
        coeffs = (self.c1, self.c2, self.c3)
        return sum(k * g for k, g in zip(coeffs, gens))


@dataclass(frozen=True)
class AperyTable:
    modulus: int
    min_rep: tuple[int, ...]

    def frobenius(self) -> int:
        return max(self.min_rep) - self.modulus


def _as_set(gs) -> GeneratorSet:
    return gs if isinstance(gs, GeneratorSet) else GeneratorSet(gs)


def apery_table(gs, budget: Optional[int] = None) -> AperyTable:
    """Smallest semigroup element in each residue class modulo the least generator."""
    gs = _as_set(gs)
    m = gs.modulus
    if m > get_budget(budget):
        raise ResourceError(f"residue table of size {m} exceeds budget {get_budget(budget)}")
    others = gs.gens[1:]
    inf = float("inf")
    dist = [inf] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d > dist[r]:
            continue
        for g in others:
            nd = d + g
            nr = nd % m
            if nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return AperyTable(m, tuple(int(v) for v in dist))


def frobenius_oracle(gs, budget: Optional[int] = None) -> int:
    """Largest non-representable integer; -1 when 1 is a generator."""
    gs = _as_set(gs)
    if gs.modulus == 1:
        return -1
    return apery_table(gs, budget).frobenius()


def _witness(n: int, gens: tuple[int, ...]) -> Optional[RepresentationWitness]:
    # lexicographically smallest (c1, c2, c3)
    if len(gens) == 1:
        q, rem = divmod(n, gens[0])
        return RepresentationWitness(q, 0, 0) if rem == 0 else None
    if len(gens) == 2:
        g1, g2 = gens
        for c1 in range(n // g1 + 1):
            if (n - c1 * g1) % g2 == 0:
                return RepresentationWitness(c1, (n - c1 * g1) // g2, 0)
        return None
    g1, g2, g3 = gens
    for c1 in range(n // g1 + 1):
        rest = n - c1 * g1
        # c2 beyond g3 steps repeats residues mod g3
        for c2 in range(min(rest // g2, g3 - 1) + 1):
            if (rest - c2 * g2) % g3 == 0:
                return RepresentationWitness(c1, c2, (rest - c2 * g2) // g3)
    return None


def is_representable(
    n: int, gs, table: Optional[AperyTable] = None
) -> tuple[bool, Optional[RepresentationWitness]]:
    """Membership test; for at most three generators also returns a witness."""
    gs = _as_set(gs)
    if n < 0:
        return False, None
    if table is None:
        table = apery_table(gs)
    ok = n >= table.min_rep[n % table.modulus]
    if not ok or len(gs.gens) > 3:
        return ok, None
    witness = _witness(n, gs.gens)
    assert witness is not None and witness.value(gs.gens) == n
    return True, witness


def gaps(gs, budget: Optional[int] = None) -> list[int]:
    gs = _as_set(gs)
    table = apery_table(gs, budget)
    m = table.modulus
    genus = sum((v - r) // m for r, v in enumerate(table.min_rep))
    if genus > get_budget(budget):
        raise ResourceError(f"{genus} gaps exceed budget {get_budget(budget)}")
    out = []
    for r, v in enumerate(table.min_rep):
        out.extend(range(r, v, m))
    out.sort()
    return out


def schur_bound(gs) -> int:
    """Upper bound ``(a1 - 1)(an - 1) - 1`` on the Frobenius number."""
    gs = _as_set(gs)
    return (gs.gens[0] - 1) * (gs.gens[-1] - 1) - 1


def sieve_representable(gens, limit: int) -> bytearray:
    """Dense table: ``out[n]`` is 1 iff ``n`` is a nonnegative combination of ``gens``."""
    out = bytearray(limit + 1)
    out[0] = 1
    for g in sorted(set(gens)):
        for n in range(g, limit + 1):
            if out[n - g]:
                out[n] = 1
    return out


def sieve_frobenius(gs, budget: Optional[int] = None) -> int:
    """Second, independent oracle: dense sieve up to the Schur bound."""
    gs = _as_set(gs)
    limit = max(schur_bound(gs), 0) + gs.modulus
    if limit > get_budget(budget):
        raise ResourceError(f"sieve length {limit} exceeds budget {get_budget(budget)}")
    table = sieve_representable(gs.gens, limit)
    for n in range(limit, -1, -1):
        if not table[n]:
            return n
    return -1
