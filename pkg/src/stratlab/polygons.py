"""Symmetric Newton polygons built from simple isoclinic factors.

A factor ``(m, n, mult)`` stands for ``mult`` copies of the isoclinic
group of dimension ``m`` and height ``m + n``, i.e. slope ``m/(m+n)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    BadSignature,
    DimensionMismatch,
    HeightMismatch,
    NotCoprime,
    NotSymmetric,
    QMismatch,
)

__all__ = [
    "NewtonPolygon",
    "make_polygon",
    "first_slope",
    "polygon_p_rank",
    "lies_on_or_above",
    "mu_ordinary",
    "supersingular",
    "admissible_polygons",
    "slope_multiset",
    "format_slopes",
]


@dataclass(frozen=True)
class NewtonPolygon:
    q: int
    factors: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        merged = Counter()
        for f in self.factors:
            m, n, mult = (int(x) for x in f)
            if m < 0 or n < 0 or m + n == 0 or mult <= 0:
                raise ValueError(f"bad factor {f}")
            if gcd(m, n) != 1:
                raise NotCoprime(f"factor ({m},{n}) is not coprime")
            merged[(m, n)] += mult
        factors = tuple(
            (m, n, mult)
            for (m, n), mult in sorted(merged.items(), key=lambda kv: Fraction(kv[0][0], sum(kv[0])))
        )
        object.__setattr__(self, "factors", factors)
        dim = sum(mult * m for m, n, mult in factors)
        if dim != self.q:
            raise DimensionMismatch(f"total dimension {dim} != q = {self.q}")
        height = sum(mult * (m + n) for m, n, mult in factors)
        if height != 2 * self.q:
            raise HeightMismatch(f"total height {height} != 2q = {2 * self.q}")
        if any(merged[(n, m)] != mult for m, n, mult in factors):
            raise NotSymmetric(f"factors {factors} are not symmetric under (m,n) -> (n,m)")

    def slopes(self) -> list[tuple[Fraction, int]]:
        """(slope, horizontal length) segments in ascending slope order."""
        return [(Fraction(m, m + n), mult * (m + n)) for m, n, mult in self.factors]

    def slope_list(self) -> list[Fraction]:
        """The flat list of slopes, one entry per factor copy, ascending."""
        return [Fraction(m, m + n) for m, n, mult in self.factors for _ in range(mult)]

    def heights(self) -> list[Fraction]:
        """Polygon height at x = 0, 1, ..., 2q."""
        ys = [Fraction(0)]
        for s, h in self.slopes():
            for _ in range(h):
                ys.append(ys[-1] + s)
        return ys

    def breakpoints(self) -> list[int]:
        xs, x = [], 0
        for s, h in self.slopes()[:-1]:
            x += h
            xs.append(x)
        return xs

    def to_json(self) -> dict:
        return {"q": self.q, "factors": [list(f) for f in self.factors]}

    @classmethod
    def from_json(cls, data: dict) -> "NewtonPolygon":
        return cls(int(data["q"]), tuple(tuple(f) for f in data["factors"]))

    def __str__(self):
        return format_slopes(self)


def make_polygon(q: int, factors) -> NewtonPolygon:
    return NewtonPolygon(q, tuple(tuple(f) for f in factors))


def _fmt(s: Fraction) -> str:
    return str(s.numerator) if s.denominator == 1 else f"{s.numerator}/{s.denominator}"


def format_slopes(P: NewtonPolygon) -> str:
    """Display form, e.g. ``[0^4, 1/2, 1^4]``."""
    parts = []
    for m, n, mult in P.factors:
        s = _fmt(Fraction(m, m + n))
        parts.append(s if mult == 1 else f"{s}^{mult}")
    return "[" + ", ".join(parts) + "]"


def slope_multiset(P: NewtonPolygon) -> list[tuple[Fraction, int]]:
    """Slopes with their total heights, merged by slope."""
    return P.slopes()


def first_slope(P: NewtonPolygon) -> Fraction:
    return P.slopes()[0][0]


def polygon_p_rank(P: NewtonPolygon) -> int:
    return sum(mult for m, n, mult in P.factors if (m, n) == (0, 1))


def lies_on_or_above(P: NewtonPolygon, Q: NewtonPolygon) -> bool:
    if P.q != Q.q:
        raise QMismatch(f"polygons have q={P.q} and q={Q.q}")
    # Both polygons break only at integer x, so integer samples suffice.
    return all(hp >= hq for hp, hq in zip(P.heights(), Q.heights()))


def _check_signature(a: int, b: int) -> None:
    if b < 0 or a < b or a + b < 1:
        raise BadSignature(f"signature ({a},{b}) needs a >= b >= 0 and a + b >= 1")


def mu_ordinary(a: int, b: int) -> NewtonPolygon:
    _check_signature(a, b)
    factors = [(0, 1, 2 * b), (1, 1, a - b), (1, 0, 2 * b)]
    return make_polygon(a + b, [f for f in factors if f[2] > 0])


def supersingular(q: int) -> NewtonPolygon:
    return make_polygon(q, [(1, 1, q)])


def _half_factor_lists(budget: int, pairs: list[tuple[int, int]], start: int = 0):
    """Multisets of (m, n) with m < n whose paired height 2*(m+n) fits the budget."""
    yield []
    for k in range(start, len(pairs)):
        m, n = pairs[k]
        cost = 2 * (m + n)
        if cost <= budget:
            for rest in _half_factor_lists(budget - cost, pairs, k):
                yield [(m, n)] + rest


def all_symmetric_polygons(q: int) -> list[NewtonPolygon]:
    """Every symmetric polygon of dimension q and height 2q."""
    pairs = [(m, n) for n in range(1, 2 * q) for m in range(0, n) if gcd(m, n) == 1 and 2 * (m + n) <= 2 * q]
    seen = {}
    for half in _half_factor_lists(2 * q, pairs):
        used = sum(2 * (m + n) for m, n in half)
        counts = Counter()
        for m, n in half:
            counts[(m, n)] += 1
            counts[(n, m)] += 1
        counts[(1, 1)] += (2 * q - used) // 2
        P = make_polygon(q, [(m, n, c) for (m, n), c in counts.items() if c])
        seen[P.factors] = P
    return list(seen.values())


def admissible_polygons(a: int, b: int) -> list[NewtonPolygon]:
    """Polygons between mu-ordinary and the straight line with even breakpoints.

    Ordered by ``lies_on_or_above`` from highest to lowest; incomparable
    polygons are ordered by their slope lists.
    """
    _check_signature(a, b)
    q = a + b
    top, bottom = supersingular(q), mu_ordinary(a, b)
    found = [
        P
        for P in all_symmetric_polygons(q)
        if lies_on_or_above(top, P)
        and lies_on_or_above(P, bottom)
        and all(x % 2 == 0 for x in P.breakpoints())
    ]

    def below(P):
        return sum(1 for Q in found if Q != P and lies_on_or_above(P, Q))

    return sorted(found, key=lambda P: (-below(P), P.slope_list()))
