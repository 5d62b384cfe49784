"""phi-Newton polygons: lower convex hulls, principal parts and index counts.

Abscissas follow the descending phi-adic convention: the point at abscissa i
carries v_p of the coefficient of phi^(t-i), so the leading term sits at 0.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd
from typing import Iterable, Sequence

from quartic_basis.polyring import (
    INFINITY,
    IntPoly,
    PhiExpansion,
    Valuation,
    phi_expand,
    vp_poly,
)

logger = logging.getLogger(__name__)


class NewtonPolygonError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ValuationPoint:
    abscissa: int
    ordinate: int

    def __str__(self) -> str:
        return f"({self.abscissa},{self.ordinate})"


@dataclass(frozen=True)
class Side:
    start: ValuationPoint
    end: ValuationPoint

    def __post_init__(self) -> None:
        if self.end.abscissa <= self.start.abscissa:
            raise NewtonPolygonError(f"side {self.start}->{self.end} has non-positive length")

    @property
    def length(self) -> int:
        return self.end.abscissa - self.start.abscissa

    @property
    def height(self) -> int:
        return self.end.ordinate - self.start.ordinate

    @property
    def degree(self) -> int:
        return gcd(self.height, self.length)

    @property
    def slope(self) -> Fraction:
        return Fraction(self.height, self.length)

    @property
    def ramification(self) -> int:
        """E, the denominator of the reduced slope; length = degree * E."""
        return self.length // self.degree

    def ordinate_at(self, j: int) -> Fraction:
        return self.start.ordinate + self.slope * (j - self.start.abscissa)

    def describe(self) -> str:
        slope = self.slope
        return (
            f"side: {self.start}->{self.end} "
            f"slope={slope.numerator}/{slope.denominator} degree={self.degree}"
        )


@dataclass(frozen=True)
class NewtonPolygon:
    sides: tuple[Side, ...]
    points: tuple[ValuationPoint, ...]

    @property
    def vertices(self) -> tuple[ValuationPoint, ...]:
        if not self.sides:
            return ()
        return (self.sides[0].start,) + tuple(s.end for s in self.sides)

    @property
    def length(self) -> int:
        return sum(s.length for s in self.sides)

    @property
    def height(self) -> int:
        return sum(s.height for s in self.sides)

    @property
    def slopes(self) -> tuple[Fraction, ...]:
        return tuple(s.slope for s in self.sides)

    def is_empty(self) -> bool:
        return not self.sides

    def principal_part(self) -> "NewtonPolygon":
        return principal_part(self)

    def ordinate(self, j: int) -> Fraction:
        return polygon_ordinate(self, j)

    def describe(self) -> list[str]:
        return [s.describe() for s in self.sides]


def _cross(o: ValuationPoint, a: ValuationPoint, b: ValuationPoint) -> int:
    return (a.abscissa - o.abscissa) * (b.ordinate - o.ordinate) - (
        a.ordinate - o.ordinate
    ) * (b.abscissa - o.abscissa)


def build_polygon(points: Iterable[ValuationPoint]) -> NewtonPolygon:
    """Lower convex hull by the monotone chain; collinear points are absorbed."""
    pts = sorted(points)
    if not pts:
        raise NewtonPolygonError("cannot build a polygon from no points")
    if len({pt.abscissa for pt in pts}) != len(pts):
        raise NewtonPolygonError("abscissas must be distinct")
    hull: list[ValuationPoint] = []
    for pt in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    sides = tuple(Side(a, b) for a, b in zip(hull, hull[1:]))
    return NewtonPolygon(sides=sides, points=tuple(pts))


def points_from_valuations(values: Sequence[Valuation]) -> list[ValuationPoint]:
    """One point per finite valuation; infinite ones are omitted."""
    return [ValuationPoint(i, v) for i, v in enumerate(values) if v is not INFINITY]


def principal_part(polygon: NewtonPolygon) -> NewtonPolygon:
    sides = tuple(s for s in polygon.sides if s.slope > 0)
    if not sides:
        return NewtonPolygon(sides=(), points=())
    lo, hi = sides[0].start.abscissa, sides[-1].end.abscissa
    pts = tuple(pt for pt in polygon.points if lo <= pt.abscissa <= hi)
    return NewtonPolygon(sides=sides, points=pts)


def polygon_ordinate(polygon: NewtonPolygon, j: int) -> Fraction:
    for side in polygon.sides:
        if side.start.abscissa <= j <= side.end.abscissa:
            return side.ordinate_at(j)
    raise NewtonPolygonError(f"abscissa {j} lies outside the polygon")


def phi_polygon(poly: IntPoly, phi: IntPoly, p: int) -> tuple[NewtonPolygon, PhiExpansion]:
    """The phi-Newton polygon of P at p together with the expansion it came from."""
    expansion = phi_expand(poly, phi)
    values = [vp_poly(term, p) for term in expansion.terms]
    polygon = build_polygon(points_from_valuations(values))
    logger.debug("phi polygon phi=%s p=%s vertices=%s", phi, p, [str(v) for v in polygon.vertices])
    return polygon, expansion


@dataclass(frozen=True)
class PolygonIndex:
    """ind_N(P) with the per-abscissa heights h_0..h_t (h_0 = h_t = 0)."""

    total: int
    heights: tuple[int, ...]

    def h(self, j: int) -> int:
        return self.heights[j] if 0 <= j < len(self.heights) else 0


def polygon_index(principal: NewtonPolygon, t: int) -> PolygonIndex:
    """Count lattice points on or below the principal polygon, strictly above the axis."""
    heights = [0] * (t + 1)
    if not principal.is_empty():
        lo = principal.sides[0].start.abscissa
        hi = principal.sides[-1].end.abscissa
        for j in range(max(lo, 1), min(hi, t)):
            heights[j] = floor(polygon_ordinate(principal, j))
    return PolygonIndex(total=sum(heights), heights=tuple(heights))


def ind_N(poly: IntPoly, phi: IntPoly, p: int) -> PolygonIndex:
    polygon, expansion = phi_polygon(poly, phi, p)
    return polygon_index(principal_part(polygon), expansion.length)


def render_polygon(polygon: NewtonPolygon) -> str:
    """ASCII plot: 'o' for points, '*' for lattice points on the hull, '.' elsewhere."""
    if not polygon.points:
        return ""
    width = max(pt.abscissa for pt in polygon.points)
    top = max(pt.ordinate for pt in polygon.points)
    low = min(pt.ordinate for pt in polygon.points)
    marks = {(pt.abscissa, pt.ordinate): "o" for pt in polygon.points}
    rows: list[str] = []
    for y in range(top, low - 1, -1):
        cells = []
        for x in range(width + 1):
            mark = marks.get((x, y))
            if mark is None:
                on_hull = any(
                    s.start.abscissa <= x <= s.end.abscissa and s.ordinate_at(x) == y
                    for s in polygon.sides
                )
                mark = "*" if on_hull else "."
            cells.append(mark)
        rows.append(f"{y:>3} | " + " ".join(cells))
    rows.append("    +-" + "--" * (width + 1))
    rows.append("      " + " ".join(str(x % 10) for x in range(width + 1)))
    return "\n".join(rows)
