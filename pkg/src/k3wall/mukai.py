"""The Mukai lattice of a Picard-rank-1 K3 surface.

Vectors (r, cH, s) in Z + Z.H + Z, the signature-(2,1) pairing
<a, b> = a.c b.c H^2 - a.r b.s - b.r a.s, the Euler form chi = -<.,.>,
slopes, the root system {d : <d,d> = -2}, and the distinguished classes
attached to the minimal non-divisor m of p + 1:

    v = (m^2, mH, p),   w = v(i_*F) = (0, m^2 H, 2pm - m^2 p),   u = w - v.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import is_prime

#: Slope of a rank-zero class; compares greater than every Fraction.
SLOPE_INFINITY = math.inf


@dataclass(frozen=True)
class Surface:
    """A polarised K3 surface with Pic(X) = Z.H and H^2 = 2p, p >= 13 prime."""

    p: int

    def __post_init__(self) -> None:
        if self.p < 13 or not is_prime(self.p):
            raise ValueError(f"p = {self.p}: need a prime >= 13 (genus >= 14)")

    @classmethod
    def from_genus(cls, g: int) -> "Surface":
        """Construct from the genus g = p + 1 (H^2 = 2g - 2)."""
        return cls(g - 1)

    @property
    def h_sq(self) -> int:
        return 2 * self.p

    @property
    def genus(self) -> int:
        return self.p + 1


@dataclass(frozen=True)
class MukaiVector:
    """(rank, H-coefficient of c1, s); chi = r + s."""

    r: int
    c: int
    s: int

    def __add__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(self.r + other.r, self.c + other.c, self.s + other.s)

    def __sub__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(self.r - other.r, self.c - other.c, self.s - other.s)

    def __neg__(self) -> "MukaiVector":
        return MukaiVector(-self.r, -self.c, -self.s)

    def scaled(self, k: int) -> "MukaiVector":
        return MukaiVector(k * self.r, k * self.c, k * self.s)

    @property
    def chi(self) -> int:
        return self.r + self.s

    def is_zero(self) -> bool:
        return self.r == 0 and self.c == 0 and self.s == 0


O_X = MukaiVector(1, 0, 1)


def pairing(a: MukaiVector, b: MukaiVector, surface: Surface) -> int:
    """Mukai pairing <a, b> = a.c b.c H^2 - a.r b.s - b.r a.s."""
    return a.c * b.c * surface.h_sq - a.r * b.s - b.r * a.s


def euler(a: MukaiVector, b: MukaiVector, surface: Surface) -> int:
    """Euler form chi(a, b) = -<a, b>."""
    return -pairing(a, b, surface)


def is_root(a: MukaiVector, surface: Surface) -> bool:
    """True iff <a, a> = -2, equivalently p c^2 - r s = -1."""
    return surface.p * a.c * a.c - a.r * a.s == -1


def slope(a: MukaiVector):
    """Slope c/r as an exact Fraction; +inf for rank zero."""
    if a.r == 0:
        return SLOPE_INFINITY
    return Fraction(a.c, a.r)


def min_nondivisor(p: int) -> int:
    """m = min{k > 0 : k does not divide p + 1}; always >= 3 for odd p."""
    if p < 13 or not is_prime(p):
        raise ValueError("min_nondivisor needs a prime p >= 13")
    k = 1
    while (p + 1) % k == 0:
        k += 1
    return k


@dataclass(frozen=True)
class DistinguishedClasses:
    """m and the three classes v, u, w = v(i_*F) with v + u = w."""

    m: int
    v: MukaiVector
    u: MukaiVector
    w: MukaiVector


def distinguished_vectors(surface: Surface) -> DistinguishedClasses:
    """The classes v = (m^2, mH, p), w = v(i_*F), u = w - v.

    Guarantees checked here: v + u = w, <v, v> = 0, gcd(m, p - m^2) = 1 and
    gcd(p, m) = 1; a failure indicates an arithmetic regression.
    """
    p = surface.p
    m = min_nondivisor(p)
    v = MukaiVector(m * m, m, p)
    w = MukaiVector(0, m * m, 2 * p * m - m * m * p)
    u = w - v
    assert u == MukaiVector(-m * m, m * m - m, -p * (m - 1) ** 2)
    assert pairing(v, v, surface) == 0
    assert math.gcd(m, p - m * m) == 1
    assert math.gcd(p, m) == 1
    return DistinguishedClasses(m=m, v=v, u=u, w=w)


@dataclass(frozen=True)
class MBoundCheck:
    """Exact evaluations of the two a-priori bounds on m.

    ``inequality_42``: m < (p-1)/2 - 1.  ``asymptotic``: m^2 <= 2p/5, which
    the source argument claims only for p > 250; ``asymptotic_claimed``
    flags whether p is in that range.
    """

    m: int
    inequality_42: bool
    asymptotic: bool
    asymptotic_claimed: bool


def m_bound_check(p: int) -> MBoundCheck:
    m = min_nondivisor(p)
    return MBoundCheck(
        m=m,
        inequality_42=2 * m < p - 3,
        asymptotic=5 * m * m <= 2 * p,
        asymptotic_claimed=p > 250,
    )
