"""Exact integer primitives: Bezout witnesses, modular inverses, the
canonical solution of ``a*x + b*y = c`` and the two-generator Frobenius number.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .config import MAX_GENERATOR
from .errors import DomainError, NoInverseError, ResourceError


@dataclass(frozen=True)
class CoprimePair:
    """Validated generators ``a < b`` with ``gcd(a, b) == 1`` and ``a >= 2``."""

    a: int
    b: int

    def __post_init__(self):
        a, b = self.a, self.b
        if not (isinstance(a, int) and isinstance(b, int)):
            raise DomainError(f"generators must be integers, got {a!r}, {b!r}")
        if a > MAX_GENERATOR or b > MAX_GENERATOR:
            raise ResourceError(f"generators must not exceed 2**31, got ({a}, {b})")
        if a < 2 or b < 2:
            raise DomainError(f"generators must be >= 2, got ({a}, {b})")
        if a >= b:
            raise DomainError(f"expected a < b, got ({a}, {b})")
        if gcd(a, b) != 1:
            raise DomainError(f"gcd({a}, {b}) = {gcd(a, b)}, expected 1")

    @classmethod
    def of(cls, x: int, y: int) -> CoprimePair:
        """Build from two generators in either order."""
        return cls(min(x, y), max(x, y))

    @property
    def product(self) -> int:
        return self.a * self.b


@dataclass(frozen=True)
class CongruenceSolution:
    x1: int
    y1: int


def gcd_ext(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(d, s, t)`` with ``d = gcd(a, b) >= 0`` and ``s*a + t*b == d``."""
    if a == 0 and b == 0:
        raise DomainError("gcd_ext(0, 0) is undefined")
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_s, s = s, old_s - quot * s
        old_t, t = t, old_t - quot * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def mod_inverse(x: int, m: int) -> int:
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")
    d, s, _ = gcd_ext(x % m, m)
    if d != 1:
        raise NoInverseError(f"{x} has no inverse modulo {m} (gcd {d})")
    return s % m


def solve_congruence(pair: CoprimePair, c: int) -> CongruenceSolution:
    """The unique ``(x1, y1)`` with ``a*x1 + b*y1 == c`` and ``0 <= x1 < b``."""
    if c < 1:
        raise DomainError(f"c must be positive, got {c}")
    a, b = pair.a, pair.b
    x1 = (c * mod_inverse(a, b)) % b
    y1, rem = divmod(c - a * x1, b)
    assert rem == 0, "a*x1 == c (mod b) by construction"
    return CongruenceSolution(x1, y1)


def frobenius_two(pair: CoprimePair) -> int:
    return pair.a * pair.b - pair.a - pair.b
