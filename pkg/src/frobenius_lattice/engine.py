"""Closed-form Frobenius numbers for three generators.

An exceptional third generator is written as ``c = l*b - h*a`` with
``1 < l < a`` and ``0 < h < b``; its red point sits at ``(b - h, l - a)``.
Candidates for the Frobenius number live in the u-v plane anchored at
``(b, 0)`` (``u = b - x``, ``v = -y``), where a point ``(u, v)`` has x-y
value ``a*b - a*u - b*v``. Which candidate wins depends on ``a mod l`` and
on how ``b`` compares with ``a*h`` (or ``a*h/r``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Optional

from .arith import CoprimePair, frobenius_two, mod_inverse
from .config import MAX_GENERATOR
from .errors import DomainError, InvariantViolation, ResourceError
from .oracle import RepresentationWitness
from .region import LatticePoint, PointColor, classify_point, enumerate_region, linear_form


class CandidateKind(enum.Enum):
    F_PRIME = "FPrime"
    Q_PRIME_1 = "QPrime1"
    Q_PRIME_2 = "QPrime2"


class CaseLabel(enum.Enum):
    A_ZERO_MOD_L = "AZeroModL"
    A_ONE_MOD_L_Q1 = "AOneModL_Q1"
    A_ONE_MOD_L_F = "AOneModL_F"
    A_OTHER_MOD_L_Q2 = "AOtherModL_Q2"
    A_OTHER_MOD_L_Q1 = "AOtherModL_Q1"
    NON_EXCEPTIONAL = "NonExceptional"


class CandidateCase(enum.Enum):
    CASE1_F = "Case1_F"
    CASE2_P = "Case2_P"
    CASE3_Q = "Case3_Q"
    EXPRESSIBLE = "Expressible"


WINNER = {
    CaseLabel.A_ZERO_MOD_L: CandidateKind.Q_PRIME_1,
    CaseLabel.A_ONE_MOD_L_Q1: CandidateKind.Q_PRIME_1,
    CaseLabel.A_ONE_MOD_L_F: CandidateKind.F_PRIME,
    CaseLabel.A_OTHER_MOD_L_Q2: CandidateKind.Q_PRIME_2,
    CaseLabel.A_OTHER_MOD_L_Q1: CandidateKind.Q_PRIME_1,
}


@dataclass(frozen=True)
class Decomposition:
    h: int
    l: int
    q: int
    r: int


@dataclass(frozen=True)
class CandidatePoint:
    kind: CandidateKind
    u: int
    v: int
    value_xy: int


@dataclass(frozen=True)
class Evaluation:
    """Everything behind one closed-form answer, for ``--explain`` and the auditor."""

    a: int
    b: int
    c: int
    g: int
    case: CaseLabel
    decomposition: Optional[Decomposition] = None
    winner: Optional[CandidatePoint] = None
    johnson_d: int = 1
    inner: Optional["Evaluation"] = None


def uv_to_xy(pair: CoprimePair, u: int, v: int) -> LatticePoint:
    return LatticePoint(pair.b - u, -v)


def xy_to_uv(pair: CoprimePair, p) -> tuple[int, int]:
    return pair.b - p[0], -p[1]


def decompose(pair: CoprimePair, c: int) -> Optional[Decomposition]:
    """Write ``c = l*b - h*a``; None when ``c`` is not exceptional."""
    a, b = pair.a, pair.b
    if c <= b:
        raise DomainError(f"c must exceed b = {b}, got {c}")
    l = (c * mod_inverse(b, a)) % a
    if l <= 1:
        return None
    h, rem = divmod(l * b - c, a)
    assert rem == 0, "l*b == c (mod a) by construction"
    if h <= 0:
        return None
    assert h < b, "h is the u-coordinate of a red point"
    q, r = divmod(a, l)
    assert q >= 1 and 0 <= r < l
    return Decomposition(h, l, q, r)


def decompose_by_enumeration(pair: CoprimePair, c: int) -> Optional[Decomposition]:
    """Slow path: find the red point carrying value ``c`` by scanning the strip."""
    if c <= pair.b:
        raise DomainError(f"c must exceed b = {pair.b}, got {c}")
    for p in enumerate_region(pair).red:
        if linear_form(pair, p) == c:
            h, l = pair.b - p[0], pair.a + p[1]
            q, r = divmod(pair.a, l)
            return Decomposition(h, l, q, r)
    return None


def _candidate(pair: CoprimePair, kind: CandidateKind, u: int, v: int) -> CandidatePoint:
    return CandidatePoint(kind, u, v, pair.a * pair.b - pair.a * u - pair.b * v)


def candidate_points(pair: CoprimePair, dec: Decomposition) -> list[CandidatePoint]:
    """F', Q'1 and, when ``a mod l >= 2``, Q'2."""
    a = pair.a
    h, l, q, r = dec.h, dec.l, dec.q, dec.r
    out = [
        _candidate(pair, CandidateKind.F_PRIME, (a * h - h) // l + 1, 1),
        _candidate(pair, CandidateKind.Q_PRIME_1, (q - 1) * h + 1, r + 1),
    ]
    if r >= 2:
        out.append(_candidate(pair, CandidateKind.Q_PRIME_2, q * h + 1, 1))
    return out


def dispatch(pair: CoprimePair, dec: Decomposition) -> CaseLabel:
    a, b = pair.a, pair.b
    h, r = dec.h, dec.r
    if r == 0:
        return CaseLabel.A_ZERO_MOD_L
    if r == 1:
        if b == a * h:
            raise InvariantViolation(f"b = a*h = {b} with r = 1 for ({a}, {b}), dec {dec}")
        return CaseLabel.A_ONE_MOD_L_Q1 if b < a * h else CaseLabel.A_ONE_MOD_L_F
    # b vs a*h/r, cross-multiplied
    if b * r == a * h:
        raise InvariantViolation(f"b*r = a*h = {b * r} for ({a}, {b}), dec {dec}")
    return CaseLabel.A_OTHER_MOD_L_Q2 if b * r > a * h else CaseLabel.A_OTHER_MOD_L_Q1


def _formula(pair: CoprimePair, dec: Decomposition, case: CaseLabel) -> int:
    a, b = pair.a, pair.b
    h, l, q, r = dec.h, dec.l, dec.q, dec.r
    if case is CaseLabel.A_ZERO_MOD_L:
        return a * b - a * ((q - 1) * h + 1) - b
    if case is CaseLabel.A_ONE_MOD_L_F:
        return a * b - a * ((a * h - h) // l + 1) - b
    if case is CaseLabel.A_OTHER_MOD_L_Q2:
        return a * b - a * (q * h + 1) - b
    # both Q'1 branches
    return a * b - a * ((q - 1) * h + 1) - b * (r + 1)


def _canonical_triple(a: int, b: int, c: int) -> tuple[int, int, int]:
    for v in (a, b, c):
        if not isinstance(v, int):
            raise DomainError(f"generators must be integers, got {v!r}")
    a, b, c = sorted((a, b, c))
    if a < 2:
        raise DomainError(f"generators must be >= 2, got {a}")
    if c > MAX_GENERATOR:
        raise ResourceError(f"generators must not exceed 2**31, got {c}")
    if gcd(gcd(a, b), c) != 1:
        raise DomainError(f"({a}, {b}, {c}) are not relatively prime")
    return a, b, c


def evaluate(a: int, b: int, c: int) -> Evaluation:
    """Closed-form ``g(a, b, c)`` together with the case and winning candidate."""
    a, b, c = _canonical_triple(a, b, c)
    d = gcd(a, b)
    if d > 1:
        g = johnson_reduce(a, b, c)
        inner = evaluate(a // d, b // d, c) if a > d else None
        return Evaluation(a, b, c, g, CaseLabel.NON_EXCEPTIONAL, johnson_d=d, inner=inner)
    pair = CoprimePair(a, b)
    dec = decompose(pair, c) if c > b else None
    if dec is None:
        return Evaluation(a, b, c, frobenius_two(pair), CaseLabel.NON_EXCEPTIONAL)
    case = dispatch(pair, dec)
    winner = next(p for p in candidate_points(pair, dec) if p.kind is WINNER[case])
    g = _formula(pair, dec, case)
    assert g == winner.value_xy
    return Evaluation(a, b, c, g, case, dec, winner)


def closed_form_g3(a: int, b: int, c: int) -> int:
    return evaluate(a, b, c).g


def johnson_reduce(a: int, b: int, c: int) -> int:
    """``g(a, b, c) = d*g(a/d, b/d, c) + c*(d - 1)`` for ``d = gcd(a, b) > 1``."""
    if gcd(gcd(a, b), c) != 1:
        raise DomainError(f"({a}, {b}, {c}) are not relatively prime")
    d = gcd(a, b)
    if d == 1:
        raise DomainError(f"gcd({a}, {b}) = 1; nothing to reduce")
    a2, b2 = a // d, b // d
    # a semigroup containing 1 has no gaps
    inner = -1 if min(a2, b2) == 1 else closed_form_g3(a2, b2, c)
    return d * inner + c * (d - 1)


def selmer_g(a: int, h: int, d: int) -> int:
    """Closed form for the family ``(a, h*a + d, h*a + 2*d)``."""
    if a < 3:
        raise DomainError(f"a must be >= 3, got {a}")
    if h < 1 or d < 1:
        raise DomainError(f"h and d must be positive, got h={h}, d={d}")
    if gcd(a, d) != 1:
        raise DomainError(f"gcd(a, d) = {gcd(a, d)}, expected 1")
    b = h * a + d
    k = h * ((a - 1) // 2)
    return a * b - a * (k + 1) - b


def selmer_triple(a: int, h: int, d: int) -> tuple[int, int, int]:
    return a, h * a + d, h * a + 2 * d


def _representable_2(n: int, l: int, h: int) -> bool:
    if n < 0:
        return False
    return any((n - i * l) % h == 0 for i in range(n // l + 1))


def explain_candidate(
    pair: CoprimePair, dec: Decomposition, p: CandidatePoint
) -> tuple[CandidateCase, Optional[RepresentationWitness]]:
    """Which of the three non-expressibility cases a u-v point falls into.

    Solves ``c1 - h*c3 = -u`` and ``c2 + l*c3 = a - v`` in nonnegative
    integers; a solution is returned as a witness for the x-y value.
    """
    a = pair.a
    h, l = dec.h, dec.l
    u, v = p.u, p.v
    if u <= 0 or v <= 0:
        raise DomainError(f"candidate coordinates must be positive, got ({u}, {v})")
    slack = a * h - (l * u + h * v)
    if slack < 0:
        return CandidateCase.CASE1_F, None
    if not _representable_2(slack, l, h):
        return CandidateCase.CASE2_P, None
    for c3 in range(max(0, a - v) // l + 1):
        c1 = h * c3 - u
        c2 = a - v - l * c3
        if c1 >= 0 and c2 >= 0:
            return CandidateCase.EXPRESSIBLE, RepresentationWitness(c1, c2, c3)
    return CandidateCase.CASE3_Q, None


def red_point(pair: CoprimePair, dec: Decomposition) -> LatticePoint:
    p = LatticePoint(pair.b - dec.h, dec.l - pair.a)
    assert classify_point(pair, p) is PointColor.RED
    return p
