import math
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k3wall.exactnum import (
    EQUAL,
    GREATER,
    LESS,
    RadicalSum,
    floor_avg_sqrt,
    is_prime,
    isqrt,
    primes_up_to,
    radical_cmp,
    radical_cmp_sums,
    squarefree_split,
)


def test_isqrt_values():
    assert isqrt(0) == 0
    assert isqrt(488) == 22
    assert isqrt(1485) == 38
    with pytest.raises(ValueError):
        isqrt(-1)


def test_isqrt_random_large():
    rng = random.Random(0)
    for _ in range(2000):
        n = rng.randrange(10**30)
        k = isqrt(n)
        assert k * k <= n < (k + 1) * (k + 1)


def test_floor_avg_sqrt_values():
    assert floor_avg_sqrt(22, 488) == 22
    assert floor_avg_sqrt(0, 4) == 1
    assert floor_avg_sqrt(-39, 0) == -20
    with pytest.raises(ValueError):
        floor_avg_sqrt(1, -1)


def test_floor_avg_sqrt_vs_mpmath():
    rng = random.Random(1)
    mpmath.mp.prec = 256
    for _ in range(2000):
        a = rng.randrange(-(10**12), 10**12)
        d = rng.randrange(10**24)
        got = floor_avg_sqrt(a, d)
        approx = (a + mpmath.sqrt(d)) / 2
        # Exact path is authoritative within 2^-200 of an integer.
        if abs(approx - mpmath.nint(approx)) > mpmath.mpf(2) ** -200:
            assert got == int(mpmath.floor(approx))


def test_squarefree_split():
    assert squarefree_split(1) == (1, 1)
    assert squarefree_split(8) == (2, 2)
    assert squarefree_split(520) == (2, 130)
    assert squarefree_split(3865) == (1, 3865)
    s, f = squarefree_split(2**20 * 3**3 * 49)
    assert s * s * f == 2**20 * 3**3 * 49
    assert f == 3


def test_radical_normalization_merges_radicands():
    x = RadicalSum.make([(Fraction(1), 2), (Fraction(1), 8)])
    assert x == RadicalSum.make([(Fraction(3), 2)])
    assert radical_cmp_sums(x, RadicalSum.sqrt_of(2).scaled(3)) == EQUAL


def test_radical_cmp_examples():
    # ||z1|| for (13,3) is sqrt(520) = 2 sqrt(130) ~ 22.80 < 23.
    assert radical_cmp(RadicalSum.sqrt_of(520), 23) == LESS
    assert radical_cmp(RadicalSum.sqrt_of(520), 22) == GREATER
    f1 = RadicalSum.from_rational(Fraction(81, 80))
    assert radical_cmp(f1, Fraction(81, 80)) == EQUAL


def test_radical_cmp_close_call():
    # sqrt(2) + sqrt(3) vs the convergent 3.146264369941973 (very close).
    x = RadicalSum.sqrt_of(2) + RadicalSum.sqrt_of(3)
    t = Fraction(3146264369941972, 10**15)
    mpmath.mp.prec = 256
    expected = mpmath.sqrt(2) + mpmath.sqrt(3)
    want = GREATER if expected > mpmath.mpf(t.numerator) / t.denominator else LESS
    assert radical_cmp(x, t) == want


def test_radical_zero_detection():
    x = RadicalSum.sqrt_of(18) - RadicalSum.sqrt_of(2).scaled(3)
    assert x.is_zero()
    assert radical_cmp(x, 0) == EQUAL


def test_floor_of_radical_sums():
    # Triangle value for (13,3): -39/2 + (sqrt(520) + sqrt(3865))/2.
    x = (
        RadicalSum.from_rational(Fraction(-39, 2))
        + (RadicalSum.sqrt_of(520) + RadicalSum.sqrt_of(3865)).scaled(
            Fraction(1, 2)
        )
    )
    assert x.floor() == 22
    assert RadicalSum.from_rational(Fraction(-7, 2)).floor() == -4
    assert RadicalSum.sqrt_of(Fraction(1, 2)).floor() == 0


def test_radical_cmp_vs_mpmath_random():
    rng = random.Random(2)
    mpmath.mp.prec = 256
    for _ in range(500):
        terms = [
            (Fraction(rng.randrange(-50, 51), rng.randrange(1, 10)), rng.randrange(1, 400))
            for _ in range(rng.randrange(1, 4))
        ]
        x = RadicalSum.make(terms)
        t = Fraction(rng.randrange(-2000, 2000), rng.randrange(1, 50))
        approx = sum(
            mpmath.mpf(c.numerator) / c.denominator * mpmath.sqrt(r)
            for c, r in terms
        ) - mpmath.mpf(t.numerator) / t.denominator
        got = radical_cmp(x, t)
        if abs(approx) > mpmath.mpf(2) ** -200:
            assert got == (GREATER if approx > 0 else LESS)


def test_radical_cmp_transitivity_sample():
    rng = random.Random(3)
    values = [
        RadicalSum.make(
            [(Fraction(rng.randrange(-9, 10)), rng.randrange(1, 60)) for _ in range(2)]
        )
        for _ in range(30)
    ]
    for _ in range(200):
        a, b, c = rng.sample(values, 3)
        if radical_cmp_sums(a, b) <= 0 and radical_cmp_sums(b, c) <= 0:
            assert radical_cmp_sums(a, c) <= 0


@given(
    st.lists(
        st.tuples(
            st.fractions(
                min_value=Fraction(-100),
                max_value=Fraction(100),
                max_denominator=30,
            ),
            st.integers(min_value=0, max_value=5000),
        ),
        max_size=5,
    )
)
@settings(max_examples=200, deadline=None)
def test_normalization_idempotent(raw):
    x = RadicalSum.make([(Fraction(c), r) for c, r in raw])
    again = RadicalSum.make(list(x.terms))
    assert again == x
    assert all(squarefree_split(r)[0] == 1 for _, r in x.terms)


def test_primality_helpers():
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(2) and is_prime(59) and is_prime(2**31 - 1)
    assert not is_prime(1) and not is_prime(561) and not is_prime(10**9)
    for n in range(2, 2000):
        assert is_prime(n) == all(n % d for d in range(2, math.isqrt(n) + 1))
