"""The projection plane of the stability-condition slice.

A class (r, cH, s) with s != 0 projects to pr = (c/s, r/s); the kernel of
the central charge Z_(b,w) projects to k(b,w).  The region V(X) of actual
stability conditions is the open parabola region y > p x^2 minus a hole
segment I_delta for every root delta.  This module computes all of that in
exact rational arithmetic: charges, phase comparison, kernel points, hole
segments, membership in V(X), the grey quadrilateral o p_u q p_v whose
root-freeness drives the wall analysis, and bounded enumeration of roots
projecting into a convex region.

Root enumeration iterates the s-coordinate and solves the quadratic
congruence p c^2 + 1 = 0 (mod s) directly, so the per-s cost is polynomial
in log s instead of linear in s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactnum import GREATER, LESS, EQUAL  # noqa: F401  (re-exported orderings)
from .mukai import MukaiVector, Surface, is_root

_FractionLike = Fraction | int


@dataclass(frozen=True)
class RatPoint:
    x: Fraction
    y: Fraction


def rp(x: _FractionLike, y: _FractionLike) -> RatPoint:
    return RatPoint(Fraction(x), Fraction(y))


@dataclass(frozen=True)
class Charge:
    re: Fraction
    im: Fraction

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0


def _cross(ax: Fraction, ay: Fraction, bx: Fraction, by: Fraction) -> Fraction:
    return ax * by - ay * bx


@dataclass(frozen=True)
class Segment:
    """Line segment with independent openness flags at either endpoint."""

    a: RatPoint
    b: RatPoint
    open_a: bool = False
    open_b: bool = False

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise ValueError("degenerate segment")

    def contains(self, pt: RatPoint) -> bool:
        dx, dy = self.b.x - self.a.x, self.b.y - self.a.y
        px, py = pt.x - self.a.x, pt.y - self.a.y
        if _cross(dx, dy, px, py) != 0:
            return False
        t = (px * dx + py * dy) / (dx * dx + dy * dy)
        if t < 0 or t > 1:
            return False
        if t == 0 and self.open_a:
            return False
        if t == 1 and self.open_b:
            return False
        return True


@dataclass(frozen=True)
class Region:
    """Convex polygon, counterclockwise, with designated included boundary.

    Membership is the strict interior plus the listed ``open_segments``
    (boundary pieces counted as inside; their own openness flags apply).
    All vertices are excluded unless an open segment covers them.
    """

    vertices: tuple[RatPoint, ...]
    open_segments: tuple[Segment, ...] = ()

    def __post_init__(self) -> None:
        n = len(self.vertices)
        if n < 3:
            raise ValueError("region needs at least 3 vertices")
        for i in range(n):
            o, a, b = (
                self.vertices[i],
                self.vertices[(i + 1) % n],
                self.vertices[(i + 2) % n],
            )
            turn = _cross(a.x - o.x, a.y - o.y, b.x - a.x, b.y - a.y)
            if turn <= 0:
                raise ValueError("vertices must be strictly convex, counterclockwise")

    def strictly_inside(self, pt: RatPoint) -> bool:
        n = len(self.vertices)
        for i in range(n):
            a, b = self.vertices[i], self.vertices[(i + 1) % n]
            if _cross(b.x - a.x, b.y - a.y, pt.x - a.x, pt.y - a.y) <= 0:
                return False
        return True

    def contains(self, pt: RatPoint) -> bool:
        if self.strictly_inside(pt):
            return True
        return any(seg.contains(pt) for seg in self.open_segments)

    @property
    def x_min(self) -> Fraction:
        return min(v.x for v in self.vertices)

    @property
    def x_max(self) -> Fraction:
        return max(v.x for v in self.vertices)


# ---------------------------------------------------------------------------
# Projection, charges, phases
# ---------------------------------------------------------------------------


def project(a: MukaiVector) -> RatPoint:
    """pr(r, cH, s) = (c/s, r/s); undefined on s = 0."""
    if a.s == 0:
        raise ValueError("projection undefined: s = 0")
    return rp(Fraction(a.c, a.s), Fraction(a.r, a.s))


def central_charge(
    a: MukaiVector, b: _FractionLike, w_sq: _FractionLike, surface: Surface
) -> Charge:
    """Z_(b,w) at a rational point (b, w^2) with w^2 > 0.

    Re = c b H^2 - (r H^2 / 2)(b^2 - w^2) - s and Im = c - r b; w enters
    only through w^2, so irrational walls like w = sqrt(2/H^2) are reached
    exactly via w_sq = 1/p.
    """
    b, w_sq = Fraction(b), Fraction(w_sq)
    if w_sq <= 0:
        raise ValueError("w^2 must be positive")
    h2 = surface.h_sq
    re = a.c * b * h2 - Fraction(a.r * h2, 2) * (b * b - w_sq) - a.s
    im = a.c - a.r * b
    return Charge(re, im)


def phase_compare(z1: Charge, z2: Charge) -> int:
    """Compare phases in (0, 1] without trigonometry.

    Both charges must be nonzero and lie in the closed upper half plane with
    the positive real axis excluded.  The sign of re1*im2 - re2*im1 decides;
    charges on the negative real axis share the maximal phase 1.
    """
    for z in (z1, z2):
        if z.is_zero():
            raise ValueError("vector in kernel of Z")
        if z.im < 0 or (z.im == 0 and z.re > 0):
            raise ValueError("not a heart phase")
    cross = z1.re * z2.im - z2.re * z1.im
    if cross > 0:
        return LESS
    if cross < 0:
        return GREATER
    return EQUAL


def kernel_point(
    b: _FractionLike, w_sq: _FractionLike, surface: Surface
) -> RatPoint:
    """k(b,w) = (2b, 2) / (H^2 (b^2 + w^2)); lies on the line x = b y."""
    b, w_sq = Fraction(b), Fraction(w_sq)
    if w_sq <= 0:
        raise ValueError("w^2 must be positive")
    denom = surface.h_sq * (b * b + w_sq)
    return rp(2 * b / denom, 2 / denom)


# ---------------------------------------------------------------------------
# Holes and V(X)
# ---------------------------------------------------------------------------


def hole_segment(delta: MukaiVector, surface: Surface) -> Segment:
    """The closed hole I_delta from p_delta to the parabola y = p x^2.

    The far endpoint q_delta is the intersection of the parabola with the
    line through the origin and p_delta; for a genuine root p_delta is
    automatically strictly inside the cone (y - p x^2 = 1/s^2).
    """
    if not is_root(delta, surface):
        raise ValueError("hole segments exist only for roots")
    p_delta = project(delta)
    if p_delta.y <= surface.p * p_delta.x * p_delta.x:
        raise ValueError("root outside cone")
    if p_delta.x == 0:
        q_delta = rp(0, 0)
    else:
        t = p_delta.y / (surface.p * p_delta.x)
        q_delta = rp(t, surface.p * t * t)
    return Segment(p_delta, q_delta)


@dataclass(frozen=True)
class VStatus:
    """Membership verdict for a point of the plane in V(X).

    kind is one of 'inside', 'on_hole', 'outside_cone'; 'on_hole' carries
    the witness root.  The decision is exact: a hole through a given point
    must project a root along the ray from the origin through that point,
    and the primitivity forced by p c^2 - r s = -1 pins down at most one
    candidate on each ray.
    """

    kind: str
    witness: MukaiVector | None = None
    note: str = ""


def _ray_root(pt: RatPoint, surface: Surface) -> MukaiVector | None:
    """The unique root (up to sign) whose projection lies on ray(o, pt)."""
    # (c, r) must be proportional to (x, y) with gcd(c, r) = 1.
    num_a = pt.x.numerator * pt.y.denominator
    num_b = pt.x.denominator * pt.y.numerator
    g = math.gcd(abs(num_a), abs(num_b))
    alpha, beta = num_a // g, num_b // g  # beta > 0 because pt.y > 0
    n = surface.p * alpha * alpha + 1
    if n % beta != 0:
        return None
    return MukaiVector(beta, alpha, n // beta)


def in_v(pt: RatPoint, surface: Surface, s_max: int | None = None) -> VStatus:
    """Exact membership of pt in V(X) = {y > p x^2} minus all holes.

    ``s_max`` is accepted for interface compatibility with bounded searches
    but is not needed: the ray argument decides membership exactly, so the
    'unknown' state never occurs for single points.
    """
    if pt.y <= surface.p * pt.x * pt.x:
        return VStatus(kind="outside_cone", note="outside cone: y <= p x^2")
    delta = _ray_root(pt, surface)
    if delta is not None and pt.y <= project(delta).y:
        return VStatus(kind="on_hole", witness=delta)
    return VStatus(kind="inside", note="exact ray decision")


# ---------------------------------------------------------------------------
# The grey region of the root-absence lemma
# ---------------------------------------------------------------------------


def grey_vertices(surface: Surface) -> dict[str, RatPoint]:
    """o, p_u, q, p_v and o' for the grey quadrilateral."""
    from .mukai import distinguished_vectors

    p = surface.p
    m = distinguished_vectors(surface).m
    return {
        "o": rp(0, 0),
        "p_v": rp(Fraction(m, p), Fraction(m * m, p)),
        "p_u": rp(Fraction(-m, p * (m - 1)), Fraction(m * m, p * (m - 1) ** 2)),
        "q": rp(Fraction(-1, m), Fraction(p, m * m)),
        "o_prime": rp(0, 1),
    }


def grey_region(surface: Surface) -> Region:
    """The quadrilateral o -> p_u -> q -> p_v, stored counterclockwise.

    The included boundary is the four open segments (o p_u), (p_u q),
    (q o') and (o p_v); the closed piece [o', p_v] of the edge q p_v and
    all four vertices are excluded.
    """
    g = grey_vertices(surface)
    return Region(
        vertices=(g["o"], g["p_v"], g["q"], g["p_u"]),
        open_segments=(
            Segment(g["o"], g["p_u"], open_a=True, open_b=True),
            Segment(g["p_u"], g["q"], open_a=True, open_b=True),
            Segment(g["q"], g["o_prime"], open_a=True, open_b=True),
            Segment(g["o"], g["p_v"], open_a=True, open_b=True),
        ),
    )


def grey_contains(pt: RatPoint, surface: Surface) -> bool:
    return grey_region(surface).contains(pt)


# ---------------------------------------------------------------------------
# Quadratic congruence machinery for root enumeration
# ---------------------------------------------------------------------------


@lru_cache(maxsize=4)
def _spf_table(limit: int) -> list[int]:
    """Smallest prime factor for every integer up to limit."""
    spf = list(range(limit + 1))
    for q in range(2, math.isqrt(limit) + 1):
        if spf[q] == q:
            for multiple in range(q * q, limit + 1, q):
                if spf[multiple] == multiple:
                    spf[multiple] = q
    return spf


def _factorize(n: int, spf: list[int]) -> list[tuple[int, int]]:
    out: list[tuple[int, int]] = []
    while n > 1:
        q = spf[n]
        e = 0
        while n % q == 0:
            n //= q
            e += 1
        out.append((q, e))
    return out


def _sqrt_mod_odd_prime(a: int, q: int) -> list[int]:
    """Solutions of x^2 = a (mod q) for an odd prime q and unit a."""
    a %= q
    if pow(a, (q - 1) // 2, q) != 1:
        return []
    if q % 4 == 3:
        x = pow(a, (q + 1) // 4, q)
    else:
        # Tonelli-Shanks.
        s, e = q - 1, 0
        while s % 2 == 0:
            s //= 2
            e += 1
        n = 2
        while pow(n, (q - 1) // 2, q) != q - 1:
            n += 1
        x = pow(a, (s + 1) // 2, q)
        b, g, r = pow(a, s, q), pow(n, s, q), e
        while b != 1:
            t, mm = b, 0
            while t != 1:
                t = t * t % q
                mm += 1
            gs = pow(g, 1 << (r - mm - 1), q)
            x, g, b, r = x * gs % q, gs * gs % q, b * gs * gs % q, mm
    return [x, q - x] if x != q - x else [x]


def _sqrt_mod_odd_prime_power(a: int, q: int, e: int) -> list[int]:
    """Hensel lift of the mod-q square roots of a unit a to mod q^e."""
    roots = _sqrt_mod_odd_prime(a, q)
    if not roots or e == 1:
        return roots
    modulus = q
    lifted = roots
    while modulus < q**e:
        modulus_next = min(modulus * modulus, q**e)
        new = []
        for x in lifted:
            inv = pow(2 * x, -1, modulus_next)
            new.append((x - (x * x - a) * inv) % modulus_next)
        modulus, lifted = modulus_next, new
    return lifted


def _sqrt_mod_power_of_two(a: int, e: int) -> list[int]:
    """Solutions of x^2 = a (mod 2^e) for odd a."""
    a %= 1 << e
    if e == 1:
        return [1]
    if e == 2:
        return [1, 3] if a % 4 == 1 else []
    if a % 8 != 1:
        return []
    sols = [1, 3, 5, 7]  # every odd square is 1 mod 8
    for k in range(3, e):
        mod_next = 1 << (k + 1)
        step = 1 << k
        sols = [
            x
            for cand in sols
            for x in (cand, cand + step)
            if (x * x - a) % mod_next == 0
        ]
    return sorted(set(sols))


def _solve_pc2_plus_1(p: int, s: int, spf: list[int]) -> list[int]:
    """Residues c mod s with p c^2 + 1 = 0 (mod s)."""
    if s == 1:
        return [0]
    if s % p == 0:
        return []
    residues = [0]
    modulus = 1
    a_total = -pow(p, -1, s)
    for q, e in _factorize(s, spf):
        qe = q**e
        a = a_total % qe
        part = (
            _sqrt_mod_power_of_two(a, e)
            if q == 2
            else _sqrt_mod_odd_prime_power(a, q, e)
        )
        if not part:
            return []
        inv_modulus = pow(modulus, -1, qe) if modulus > 1 else 1
        residues = [
            (r + modulus * (((x - r) * inv_modulus) % qe)) % (modulus * qe)
            for r in residues
            for x in part
        ]
        modulus *= qe
    return residues


@dataclass(frozen=True)
class SegmentCertificate:
    """An exact (unconditional) proof that a boundary segment is root-free."""

    name: str
    proved: bool
    reason: str


def segment_certificates(surface: Surface) -> dict[str, SegmentCertificate]:
    """Exact root-freeness of the open segments (o p_v), (o q), (o p_u).

    A root on a ray from the origin has (c : r) primitive, so each segment
    reduces to one divisibility condition; all three fail unconditionally
    for m = min{k : k does not divide p+1}.
    """
    from .mukai import min_nondivisor

    p = surface.p
    m = min_nondivisor(p)
    certs = {}
    certs["op_v"] = SegmentCertificate(
        name="op_v",
        proved=(p + 1) % m != 0,
        reason=f"a root on (o p_v) needs m | p+1; m={m} does not divide {p + 1}",
    )
    certs["oq"] = SegmentCertificate(
        name="oq",
        proved=(p * m * m + 1) % p != 0,
        reason="a root on (o q) needs p | p m^2 + 1, i.e. p | 1",
    )
    certs["op_u"] = SegmentCertificate(
        name="op_u",
        proved=(p * (m - 1) ** 2 + 1) % m != 0,
        reason=(
            f"a root on (o p_u) needs m | p(m-1)^2+1 = p+1 (mod m); "
            f"m={m} does not divide {p + 1}"
        ),
    )
    assert all(c.proved for c in certs.values())
    return certs


@dataclass(frozen=True)
class RootScan:
    """Result of a bounded root enumeration over a convex region."""

    roots: tuple[MukaiVector, ...]
    certificates: dict[str, SegmentCertificate]
    s_max: int


def enumerate_roots_in_region(
    region: Region, surface: Surface, s_max: int
) -> RootScan:
    """All roots with 1 <= s <= s_max whose projection the region contains.

    Roots come in +/- pairs with identical projections; the canonical
    representative returned has s > 0.  The search is bounded: projections
    of roots accumulate on the parabola, so emptiness within s_max is a
    certificate for the searched bound, not a proof for the whole region.
    The three segment certificates attached to the result are exact.
    """
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    p = surface.p
    x_lo, x_hi = region.x_min, region.x_max
    spf = _spf_table(max(s_max, 3))
    found: list[MukaiVector] = []
    for s in range(1, s_max + 1):
        c_lo = math.ceil(x_lo * s)
        c_hi = math.floor(x_hi * s)
        if c_lo > c_hi:
            continue
        for c0 in _solve_pc2_plus_1(p, s, spf):
            c = c_lo + ((c0 - c_lo) % s)
            while c <= c_hi:
                r, rem = divmod(p * c * c + 1, s)
                if rem == 0 and region.contains(rp(Fraction(c, s), Fraction(r, s))):
                    found.append(MukaiVector(r, c, s))
                c += s
    return RootScan(
        roots=tuple(found),
        certificates=segment_certificates(surface),
        s_max=s_max,
    )
