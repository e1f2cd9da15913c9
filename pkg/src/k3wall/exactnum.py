"""Exact arithmetic kernel.

Arbitrary-precision integer square roots, exact floors of (A + sqrt(D))/2,
and certified comparison of sums of square roots against rationals.

A value ``sum_i q_i * sqrt(n_i)`` with rational q_i and nonnegative integer
n_i is represented by :class:`RadicalSum` with every radicand reduced to
squarefree form.  Square roots of distinct squarefree integers are linearly
independent over Q, so after normalization the representation is unique and
exact zero detection is syntactic.  Comparisons are decided by dyadic
interval arithmetic at doubling precision; termination is guaranteed because
a nonzero RadicalSum is a nonzero real number.

Everything the geometry modules decide about inequalities between radical
expressions and rationals is routed through :func:`radical_cmp`; floating
point appears only in search heuristics (re-verified exactly) and in SVG
coordinate emission.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

LESS = -1
EQUAL = 0
GREATER = 1

#: Interval refinement starts here and doubles per round.
_START_BITS = 64
#: Hard cap on refinement rounds; unreachable for nonzero sums, defensive.
_MAX_ROUNDS = 24


def isqrt(n: int) -> int:
    """Integer square root: the unique k with k^2 <= n < (k+1)^2."""
    if n < 0:
        raise ValueError("isqrt of negative integer")
    return math.isqrt(n)


def floor_avg_sqrt(a: int, d: int) -> int:
    """floor((a + sqrt(d)) / 2) in integer arithmetic, d >= 0.

    With s = isqrt(d) the value (a + sqrt(d))/2 lies in [(a+s)/2, (a+s+1)/2),
    an interval containing exactly one half-open unit-half, so the floor is
    (a + s) // 2 whether or not d is a perfect square.
    """
    if d < 0:
        raise ValueError("radicand must be nonnegative")
    return (a + math.isqrt(d)) // 2


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all 64-bit (and beyond) inputs."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    """All primes <= n via a byte sieve."""
    if n < 2:
        return []
    sieve = bytearray(b"\x01") * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for q in range(2, math.isqrt(n) + 1):
        if sieve[q]:
            sieve[q * q :: q] = b"\x00" * len(range(q * q, n + 1, q))
    return [i for i, flag in enumerate(sieve) if flag]


_SMALL_PRIMES: list[int] = primes_up_to(1 << 10)


def _trial_primes(limit: int) -> list[int]:
    global _SMALL_PRIMES
    if _SMALL_PRIMES[-1] < limit:
        _SMALL_PRIMES = primes_up_to(max(limit, 2 * _SMALL_PRIMES[-1]))
    return _SMALL_PRIMES


@lru_cache(maxsize=None)
def squarefree_split(n: int) -> tuple[int, int]:
    """Write n = s^2 * f with f squarefree; returns (s, f).  Requires n >= 1.

    Trial division runs to n^(1/3); the remaining cofactor has at most two
    prime factors, so it is squarefree unless it is a perfect square.
    """
    if n < 1:
        raise ValueError("squarefree_split needs a positive integer")
    s, f, rem = 1, 1, n
    cube_limit = round(rem ** (1 / 3)) + 2
    for q in _trial_primes(cube_limit):
        if q > cube_limit:
            break
        if rem % q == 0:
            e = 0
            while rem % q == 0:
                rem //= q
                e += 1
            s *= q ** (e // 2)
            if e % 2:
                f *= q
            cube_limit = round(rem ** (1 / 3)) + 2
    r = math.isqrt(rem)
    if r * r == rem:
        s *= r
    else:
        f *= rem
    return s, f


_FractionLike = Fraction | int


@dataclass(frozen=True)
class RadicalSum:
    """Exact value sum_i coeff_i * sqrt(radicand_i).

    ``terms`` is sorted by radicand, radicands are squarefree and distinct
    (radicand 1 holds the rational part), and no coefficient is zero.  Use
    the constructors below; raw terms are normalized by :meth:`make`.
    """

    terms: tuple[tuple[Fraction, int], ...]

    @staticmethod
    def make(raw: list[tuple[Fraction, int]]) -> "RadicalSum":
        pool: dict[int, Fraction] = {}
        for coeff, rad in raw:
            if rad < 0:
                raise ValueError("negative radicand")
            if coeff == 0 or rad == 0:
                continue
            s, f = squarefree_split(rad)
            pool[f] = pool.get(f, Fraction(0)) + coeff * s
        terms = tuple(
            (coeff, rad) for rad, coeff in sorted(pool.items()) if coeff != 0
        )
        return RadicalSum(terms)

    @staticmethod
    def from_rational(q: _FractionLike) -> "RadicalSum":
        return RadicalSum.make([(Fraction(q), 1)])

    @staticmethod
    def sqrt_of(q: _FractionLike) -> "RadicalSum":
        """sqrt(q) for a nonnegative rational q: sqrt(a/b) = sqrt(ab)/b."""
        q = Fraction(q)
        if q < 0:
            raise ValueError("square root of negative rational")
        if q == 0:
            return RadicalSum(())
        return RadicalSum.make(
            [(Fraction(1, q.denominator), q.numerator * q.denominator)]
        )

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "RadicalSum") -> "RadicalSum":
        return RadicalSum.make(list(self.terms) + list(other.terms))

    def __sub__(self, other: "RadicalSum") -> "RadicalSum":
        return self + (-other)

    def __neg__(self) -> "RadicalSum":
        return RadicalSum(tuple((-c, r) for c, r in self.terms))

    def scaled(self, k: _FractionLike) -> "RadicalSum":
        k = Fraction(k)
        if k == 0:
            return RadicalSum(())
        return RadicalSum(tuple((c * k, r) for c, r in self.terms))

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return all(r == 1 for _, r in self.terms)

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational value")
        return self.terms[0][0] if self.terms else Fraction(0)

    # -- evaluation ---------------------------------------------------------

    def interval(self, bits: int) -> tuple[Fraction, Fraction]:
        """Enclosing dyadic interval with ~bits fractional bits per term."""
        lo = hi = Fraction(0)
        scale = 1 << bits
        sq = scale * scale
        for coeff, rad in self.terms:
            if rad == 1:
                lo += coeff
                hi += coeff
                continue
            root_lo = math.isqrt(rad * sq)
            frac_lo = Fraction(root_lo, scale)
            frac_hi = Fraction(root_lo + 1, scale)
            if coeff > 0:
                lo += coeff * frac_lo
                hi += coeff * frac_hi
            else:
                lo += coeff * frac_hi
                hi += coeff * frac_lo
        return lo, hi

    def __float__(self) -> float:
        return sum(float(c) * math.sqrt(r) for c, r in self.terms)

    def sign(self) -> int:
        """Exact sign; terminates because nonzero sums are nonzero reals."""
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            return 1 if self.terms[0][0] > 0 else -1
        bits = _START_BITS
        for _ in range(_MAX_ROUNDS):
            lo, hi = self.interval(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2
        raise ArithmeticError("interval refinement failed to separate from 0")

    def floor(self) -> int:
        """Exact floor via interval refinement (exact when rational)."""
        if self.is_rational():
            return math.floor(self.rational_value())
        bits = _START_BITS
        for _ in range(_MAX_ROUNDS):
            lo, hi = self.interval(bits)
            if math.floor(lo) == math.floor(hi):
                return math.floor(lo)
            bits *= 2
        raise ArithmeticError("interval refinement failed to bracket floor")


def radical_cmp(x: RadicalSum, t: _FractionLike) -> int:
    """Exact ordering of the real number x against the rational t.

    Returns LESS, EQUAL or GREATER.  Strategy: normalize x - t; the zero
    RadicalSum means equality (sound by linear independence of square roots
    of distinct squarefree integers); otherwise dyadic intervals at doubling
    precision separate the difference from zero.
    """
    return (x - RadicalSum.from_rational(t)).sign()


def radical_cmp_sums(x: RadicalSum, y: RadicalSum) -> int:
    """Exact ordering of two RadicalSums."""
    return (x - y).sign()
