"""The lattice strip of a coprime pair and its green/blue/red colouring.

For ``(a, b)`` the strip holds points with ``0 <= x <= b - 1`` and
``|y| <= a - 1`` whose value ``a*x + b*y`` lies strictly between 0 and
``a*b``. Axis points are green, points above the x-axis are blue and points
below are red. A red value ``c > b`` is exactly a third generator that
lowers the Frobenius number.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .arith import CoprimePair, frobenius_two, solve_congruence
from .config import get_budget
from .errors import DomainError, NotInRegionError, ResourceError


class LatticePoint(NamedTuple):
    x: int
    y: int


class PointColor(enum.Enum):
    GREEN = "green"
    BLUE = "blue"
    RED = "red"
    OUTSIDE = "outside"


class FormKind(enum.Enum):
    POSITIVE = "positive"  # c = a*x + b*y
    NEGATIVE = "negative"  # c = a*b - a*x - b*y
    GREEN_MULTIPLE = "green-multiple"


@dataclass(frozen=True)
class BrauerForm:
    kind: FormKind
    x: Optional[int] = None
    y: Optional[int] = None

    def reconstruct(self, pair: CoprimePair) -> Optional[int]:
        if self.kind is FormKind.POSITIVE:
            return pair.a * self.x + pair.b * self.y
        if self.kind is FormKind.NEGATIVE:
            return pair.a * pair.b - pair.a * self.x - pair.b * self.y
        return None


@dataclass(frozen=True)
class RegionCensus:
    blue_count: int
    red_count: int
    green_count: int


@dataclass(frozen=True)
class Region:
    blue: list
    red: list
    green: list
    census: RegionCensus


def linear_form(pair: CoprimePair, p) -> int:
    return pair.a * p[0] + pair.b * p[1]


def classify_point(pair: CoprimePair, p) -> PointColor:
    a, b = pair.a, pair.b
    x, y = p
    value = a * x + b * y
    if x == 0 or y == 0:
        # D0 is the closed triangle side: x in [0, b], y in [0, a]
        if 0 <= value <= a * b and x >= 0 and y >= 0:
            return PointColor.GREEN
        return PointColor.OUTSIDE
    if not (0 < x <= b - 1 and -(a - 1) <= y <= a - 1 and 0 < value < a * b):
        return PointColor.OUTSIDE
    return PointColor.BLUE if y > 0 else PointColor.RED


def mirror_point(pair: CoprimePair, p) -> LatticePoint:
    """Swap a blue point with its red partner; the two values sum to ``a*b``."""
    colour = classify_point(pair, p)
    if colour not in (PointColor.BLUE, PointColor.RED):
        raise NotInRegionError(f"{tuple(p)} is {colour.value}, not blue or red")
    return LatticePoint(pair.b - p[0], -p[1])


def _check_budget(pair: CoprimePair, budget) -> None:
    points = (pair.b + 1) * (2 * pair.a + 1)
    limit = get_budget(budget)
    if points > limit:
        raise ResourceError(f"enumerating {points} lattice points exceeds budget {limit}")


def enumerate_region(pair: CoprimePair, budget: Optional[int] = None) -> Region:
    """Every coloured point of the strip, each list sorted by ``(x, y)``."""
    _check_budget(pair, budget)
    a, b = pair.a, pair.b
    blue, red, green = [], [], []
    buckets = {PointColor.BLUE: blue, PointColor.RED: red, PointColor.GREEN: green}
    for x in range(0, b + 1):
        for y in range(-a, a + 1):
            colour = classify_point(pair, (x, y))
            if colour is PointColor.OUTSIDE:
                continue
            if colour is not PointColor.GREEN:
                v = a * x + b * y
                assert v % a and v % b, f"off-axis point {(x, y)} has a value divisible by a or b"
            buckets[colour].append(LatticePoint(x, y))
    census = RegionCensus(len(blue), len(red), len(green))
    return Region(blue, red, green, census)


def brauer_form(pair: CoprimePair, c: int) -> BrauerForm:
    """Classify ``0 < c < a*b`` as ``a*x + b*y`` or ``a*b - a*x - b*y`` with ``x, y > 0``."""
    a, b = pair.a, pair.b
    if not 0 < c < a * b:
        raise DomainError(f"c must lie in (0, {a * b}), got {c}")
    if c % a == 0 or c % b == 0:
        return BrauerForm(FormKind.GREEN_MULTIPLE)
    sol = solve_congruence(pair, c)
    assert 0 < sol.x1 < b and sol.y1 != 0
    if sol.y1 > 0:
        return BrauerForm(FormKind.POSITIVE, sol.x1, sol.y1)
    return BrauerForm(FormKind.NEGATIVE, b - sol.x1, -sol.y1)


def is_exceptional(pair: CoprimePair, c: int) -> bool:
    """True iff adding ``c > b`` as a third generator lowers the Frobenius number."""
    if c <= pair.b:
        raise DomainError(f"exceptional values must exceed b = {pair.b}, got {c}")
    if c >= pair.product:
        return False
    return brauer_form(pair, c).kind is FormKind.NEGATIVE


def enumerate_exceptional(pair: CoprimePair, budget: Optional[int] = None) -> list:
    """``(c, point)`` for every red point with value above ``b``, largest value first."""
    region = enumerate_region(pair, budget)
    out = [(linear_form(pair, p), p) for p in region.red]
    out = [(v, p) for v, p in out if v > pair.b]
    out.sort(key=lambda item: -item[0])
    values = [v for v, _ in out]
    assert len(set(values)) == len(values), "red values are distinct"
    if out:
        assert out[0] == (frobenius_two(pair), LatticePoint(pair.b - 1, -1))
    return out


def count_exceptional(pair: CoprimePair) -> int:
    a, b = pair.a, pair.b
    num = (a - 3) * (b - 1)
    assert num % 2 == 0, "(a-3)(b-1) is even for coprime a, b"
    return num // 2 + b // a
