"""Wall lines and the first-wall geometry for the pushforward class.

A wall for a class e is carried by a line through pr(e) when s(e) != 0, or
by a line of slope r(e)/c(e) when s(e) = 0.  The wall bounding the Gieseker
chamber of i_*F lives on a line through the pivot pr(v(i_*F)) on the
x-axis; candidate walls are classified against the segment p_u p_v by exact
slope comparison at that shared pivot.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .mukai import MukaiVector, Surface, distinguished_vectors
from .plane import RatPoint, Segment, grey_vertices, project, rp


@dataclass(frozen=True)
class Line:
    """anchor + t * direction; direction is a primitive integer vector with
    positive first nonzero component."""

    anchor: RatPoint
    direction: tuple[int, int]

    @staticmethod
    def through(a: RatPoint, b: RatPoint) -> "Line":
        if a == b:
            raise ValueError("two coincident points do not span a line")
        return Line(a, _normalize_direction(b.x - a.x, b.y - a.y))

    @staticmethod
    def with_slope(anchor: RatPoint, rise: Fraction, run: Fraction) -> "Line":
        return Line(anchor, _normalize_direction(run, rise))

    def contains(self, pt: RatPoint) -> bool:
        dx, dy = self.direction
        return (pt.x - self.anchor.x) * dy == (pt.y - self.anchor.y) * dx

    def slope(self) -> Fraction | float:
        dx, dy = self.direction
        return math.inf if dx == 0 else Fraction(dy, dx)


def _normalize_direction(dx: Fraction, dy: Fraction) -> tuple[int, int]:
    dx, dy = Fraction(dx), Fraction(dy)
    if dx == 0 and dy == 0:
        raise ValueError("zero direction")
    den = math.lcm(dx.denominator, dy.denominator)
    ix, iy = dx.numerator * (den // dx.denominator), dy.numerator * (
        den // dy.denominator
    )
    g = math.gcd(abs(ix), abs(iy))
    ix, iy = ix // g, iy // g
    if ix < 0 or (ix == 0 and iy < 0):
        ix, iy = -ix, -iy
    return ix, iy


def wall_line(e: MukaiVector, through: RatPoint) -> Line:
    """The line carrying a wall for e, pinned by one extra point.

    s(e) != 0: the line through pr(e) and ``through`` (must differ);
    s(e) == 0: the line through ``through`` with slope r(e)/c(e).
    Invariant under scaling of e.
    """
    if e.s != 0:
        anchor = project(e)
        if anchor == through:
            raise ValueError("through-point coincides with pr(e)")
        return Line.through(anchor, through)
    if e.c == 0:
        raise ValueError("rank direction undefined: c = 0 and s = 0")
    return Line.with_slope(through, Fraction(e.r), Fraction(e.c))


def first_wall_pivot(surface: Surface) -> RatPoint:
    """pr(v(i_*F)) = (m / (p(2-m)), 0); rank zero forces the x-axis."""
    m = distinguished_vectors(surface).m
    return rp(Fraction(m, surface.p * (2 - m)), 0)


def first_wall_segment(surface: Surface) -> Segment:
    """The closed segment p_u p_v carrying the first wall for i_*F."""
    g = grey_vertices(surface)
    seg = Segment(g["p_u"], g["p_v"])
    pivot = first_wall_pivot(surface)
    line = Line.through(seg.a, seg.b)
    assert line.contains(pivot), "pivot must be collinear with p_u p_v"
    return seg


def first_wall_slope(surface: Surface) -> Fraction:
    """Slope of p_u p_v, equal to m(m-2)/(m-1)."""
    g = grey_vertices(surface)
    s = (g["p_v"].y - g["p_u"].y) / (g["p_v"].x - g["p_u"].x)
    m = distinguished_vectors(surface).m
    assert s == Fraction(m * (m - 2), m - 1)
    return s


@dataclass(frozen=True)
class WallClassification:
    """Position of a candidate wall line relative to the first wall.

    verdict is 'below', 'on' or 'above', decided by exact slope comparison
    at the shared pivot pr(v(i_*F)).  q1 and q2 are the intersections of
    the candidate line with the rays o p_u and o p_v (None when parallel).
    """

    verdict: str
    pivot: RatPoint
    q1: RatPoint | None
    q2: RatPoint | None


def _ray_intersection(
    pivot: RatPoint, slope: Fraction, ray_slope: Fraction
) -> RatPoint | None:
    """Intersection of y = slope (x - pivot.x) with y = ray_slope x."""
    if slope == ray_slope:
        return None
    x = slope * pivot.x / (slope - ray_slope)
    return RatPoint(x, ray_slope * x)


def classify_candidate_wall(
    destabilizer_pr: RatPoint, surface: Surface
) -> WallClassification:
    """Classify the wall through pr(v(i_*F)) and a destabilizer projection.

    'on' is the restriction case (the wall is the segment p_u p_v);
    'below' is smaller slope, 'above' larger.
    """
    pivot = first_wall_pivot(surface)
    if destabilizer_pr == pivot:
        raise ValueError("destabilizer projection coincides with the pivot")
    if destabilizer_pr.x == pivot.x:
        raise ValueError("vertical candidate wall never bounds the chamber")
    slope = (destabilizer_pr.y - pivot.y) / (destabilizer_pr.x - pivot.x)
    reference = first_wall_slope(surface)
    if slope == reference:
        verdict = "on"
    elif slope < reference:
        verdict = "below"
    else:
        verdict = "above"
    g = grey_vertices(surface)
    slope_ou = g["p_u"].y / g["p_u"].x
    slope_ov = g["p_v"].y / g["p_v"].x
    return WallClassification(
        verdict=verdict,
        pivot=pivot,
        q1=_ray_intersection(pivot, slope, slope_ou),
        q2=_ray_intersection(pivot, slope, slope_ov),
    )


def brill_noether_line(e: MukaiVector) -> Line:
    """The wall line through o' = pr(v(O_X)) = (0, 1) used by the h^0 bound."""
    o_prime = rp(0, 1)
    if e.s != 0:
        anchor = project(e)
        if anchor == o_prime:
            raise ValueError("coincides with o'")
        return Line.through(o_prime, anchor)
    if e.c == 0:
        raise ValueError("rank direction undefined: c = 0 and s = 0")
    return Line.with_slope(o_prime, Fraction(e.r), Fraction(e.c))
