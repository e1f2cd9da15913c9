"""Upper bounds for the number of global sections.

Three bounds cooperate:

* the Brill-Noether bound chi/2 + sqrt((r-s)^2 + 4p c^2 + 4 gcd(r-s, c)^2)/2
  for a semistable object sharing the structure sheaf's phase near o';
* the polygon bound chi/2 + (1/2) sum of edge lengths of the limiting
  Harder-Narasimhan polygon, measured in the norm
  ||x + iy|| = sqrt(x^2 + (4p+4) y^2);
* the parity refinement that floors each group of consecutive polygon
  edges separately, gaining up to one for every group boundary.

Floors of radical values are always computed through the exact kernel,
never with floating point: several verdicts sit within 0.05 of an integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import RadicalSum, floor_avg_sqrt
from .mukai import MukaiVector, Surface


@dataclass(frozen=True)
class GaussPoint:
    """A point rk - s + i c of the limiting central charge plane."""

    a: int
    b: int

    def __sub__(self, other: "GaussPoint") -> "GaussPoint":
        return GaussPoint(self.a - other.a, self.b - other.b)

    def __add__(self, other: "GaussPoint") -> "GaussPoint":
        return GaussPoint(self.a + other.a, self.b + other.b)


def norm_sq(g: GaussPoint, surface: Surface) -> int:
    """Squared norm a^2 + (4p+4) b^2."""
    return g.a * g.a + (4 * surface.p + 4) * g.b * g.b


def norm_radical(g: GaussPoint, surface: Surface) -> RadicalSum:
    return RadicalSum.sqrt_of(norm_sq(g, surface))


def _angle_class(e: GaussPoint) -> int:
    """0 for 180 deg, 1 for the open range (0, 180), 2 for 0 deg.

    Horizontal edges need the class because a cross product cannot tell the
    directions (-1, 0) and (1, 0) apart.
    """
    if e.a == 0 and e.b == 0:
        raise ValueError("zero edge")
    if e.b < 0:
        raise ValueError(f"edge {e} has negative imaginary part")
    if e.b > 0:
        return 1
    return 0 if e.a < 0 else 2


class Chain:
    """A convex chain of Gauss points modeling a candidate HN polygon.

    The first vertex is the origin, every edge has nonnegative imaginary
    part, and edge directions have weakly decreasing angle in (0, 180];
    ``normalize`` merges consecutive collinear edges, after which angles
    strictly decrease.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices: tuple[GaussPoint, ...] | list[GaussPoint]):
        vertices = tuple(vertices)
        if len(vertices) < 2:
            raise ValueError("chain needs at least two vertices")
        if vertices[0] != GaussPoint(0, 0):
            raise ValueError("chain must start at the origin")
        edges = [vertices[i + 1] - vertices[i] for i in range(len(vertices) - 1)]
        classes = [_angle_class(e) for e in edges]
        for c1, c2 in zip(classes, classes[1:]):
            if c1 > c2:
                raise ValueError("edge angles must be weakly decreasing")
        for e1, e2, c1, c2 in zip(edges, edges[1:], classes, classes[1:]):
            if c1 == c2 == 1 and e1.a * e2.b - e1.b * e2.a > 0:
                raise ValueError("edge angles must be weakly decreasing")
        self.vertices = vertices

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Chain) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return "Chain(" + " -> ".join(f"{v.a}+{v.b}i" for v in self.vertices) + ")"

    @property
    def edges(self) -> list[GaussPoint]:
        return [
            self.vertices[i + 1] - self.vertices[i]
            for i in range(len(self.vertices) - 1)
        ]

    def normalize(self) -> "Chain":
        """Merge consecutive collinear edges."""
        verts = [self.vertices[0]]
        edges = self.edges
        i = 0
        while i < len(edges):
            acc = edges[i]
            while (
                i + 1 < len(edges)
                and _angle_class(acc) == _angle_class(edges[i + 1])
                and acc.a * edges[i + 1].b - acc.b * edges[i + 1].a == 0
            ):
                acc = acc + edges[i + 1]
                i += 1
            verts.append(verts[-1] + acc)
            i += 1
        return Chain(tuple(verts))

    def length(self, surface: Surface) -> RadicalSum:
        total = RadicalSum(())
        for e in self.edges:
            total = total + norm_radical(e, surface)
        return total


def polygon_bound(
    ch: Chain, chi: int, surface: Surface
) -> tuple[RadicalSum, int]:
    """chi/2 + (1/2) sum of edge norms, as an exact value and its floor."""
    value = ch.length(surface).scaled(Fraction(1, 2)) + RadicalSum.from_rational(
        Fraction(chi, 2)
    )
    return value, value.floor()


def bn_bound_int(e: MukaiVector, surface: Surface) -> int:
    """Brill-Noether bound floor((chi + sqrt(D)) / 2).

    D = (r-s)^2 + 4p c^2 + 4 k^2 with k = gcd(|r-s|, |c|) and gcd(0, n) =
    |n|.  The class proportional to v(O_X) is handled separately by the
    source argument and is rejected here.
    """
    a, c = e.r - e.s, e.c
    if a == 0 and c == 0:
        raise ValueError("class proportional to v(O_X); bound degenerate")
    k = math.gcd(abs(a), abs(c))
    d = a * a + 4 * surface.p * c * c + 4 * k * k
    return floor_avg_sqrt(e.chi, d)


def prop52_identity(surface: Surface) -> int:
    """floor((p+m^2)/2 + sqrt(4pm^2 + (p-m^2)^2 + 4)/2) = p + m^2, exactly.

    Uses 4pm^2 + (p-m^2)^2 = (p+m^2)^2; an assertion failure here signals
    an arithmetic regression, not a mathematical possibility.
    """
    from .mukai import distinguished_vectors

    p = surface.p
    m = distinguished_vectors(surface).m
    t = p + m * m
    d = 4 * p * m * m + (p - m * m) ** 2 + 4
    assert d == t * t + 4
    value = floor_avg_sqrt(t, d)
    assert value == t, "Prop 5.2 identity failed"
    return value


# ---------------------------------------------------------------------------
# Parity refinement
# ---------------------------------------------------------------------------


def parity_group_value(a_disp: int, chi: int, length: RadicalSum) -> int:
    """Bound for one group of consecutive factors.

    Odd real displacement (and hence odd group chi):
        (chi - 1)/2 + floor((1 + L)/2);
    even: chi/2 + floor(L/2).
    """
    if (a_disp - chi) % 2 != 0:
        raise ValueError("group chi parity must match its a-displacement parity")
    half = length.scaled(Fraction(1, 2))
    if a_disp % 2:
        return (chi - 1) // 2 + (
            half + RadicalSum.from_rational(Fraction(1, 2))
        ).floor()
    return chi // 2 + half.floor()


def parity_refined_bound_from_parts(
    parts: list[tuple[int, int, RadicalSum]]
) -> int:
    """Sum of per-group parity bounds; parts are (a_disp, chi, length)."""
    return sum(parity_group_value(a, chi, length) for a, chi, length in parts)


def parity_refined_bound(
    ch: Chain,
    group_boundaries: list[int],
    chis: list[int],
    surface: Surface,
) -> int:
    """Parity-refined bound for a chain split at the given vertex indices.

    ``group_boundaries`` must be increasing, starting at 0 and ending at the
    last vertex index; ``chis`` gives each group's Euler characteristic,
    whose parity must match the group's real displacement.
    """
    n = len(ch.vertices) - 1
    if (
        len(group_boundaries) < 2
        or group_boundaries[0] != 0
        or group_boundaries[-1] != n
        or any(a >= b for a, b in zip(group_boundaries, group_boundaries[1:]))
    ):
        raise ValueError("group boundaries must include both endpoints")
    if len(chis) != len(group_boundaries) - 1:
        raise ValueError("one chi per group required")
    parts = []
    for (i, j), chi in zip(zip(group_boundaries, group_boundaries[1:]), chis):
        length = RadicalSum(())
        for k in range(i, j):
            length = length + norm_radical(
                ch.vertices[k + 1] - ch.vertices[k], surface
            )
        parts.append((ch.vertices[j].a - ch.vertices[i].a, chi, length))
    return parity_refined_bound_from_parts(parts)


def min_square_decomposition(n_parts: int) -> int:
    """Minimal square of a sum of n root classes that are not all equal.

    Grouping the classes by isomorphism type with multiplicities n_i gives
    (sum)^2 >= -2 sum n_i^2, and over compositions with at least two parts
    the maximum of sum n_i^2 is (n-1)^2 + 1; so the minimum is
    -2((n-1)^2 + 1).  The caller must certify primitivity of the decomposed
    vector (which rules out the all-equal case) before relying on this.
    """
    if n_parts <= 1:
        raise ValueError("a primitive vector needs at least 2 classes")
    return -2 * ((n_parts - 1) ** 2 + 1)
