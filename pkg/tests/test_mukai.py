import math
import random
from fractions import Fraction

import pytest

from k3wall.exactnum import primes_up_to
from k3wall.mukai import (
    SLOPE_INFINITY,
    MukaiVector,
    Surface,
    distinguished_vectors,
    euler,
    is_root,
    m_bound_check,
    min_nondivisor,
    pairing,
    slope,
)

PAPER_PAIRS = [(13, 3), (17, 4), (19, 3), (23, 5), (29, 4), (47, 5), (59, 7)]


def test_surface_validation():
    assert Surface(13).h_sq == 26
    assert Surface(13).genus == 14
    assert Surface.from_genus(14) == Surface(13)
    with pytest.raises(ValueError):
        Surface(12)
    with pytest.raises(ValueError):
        Surface(11)  # prime but genus 12 < 14


def test_pairing_examples():
    x13 = Surface(13)
    o = MukaiVector(1, 0, 1)
    assert pairing(o, o, x13) == -2
    assert euler(o, o, x13) == 2
    v = MukaiVector(9, 3, 13)
    assert pairing(v, v, x13) == 0
    h = MukaiVector(0, 1, 0)
    assert pairing(h, h, x13) == 26


def test_pairing_symmetric_bilinear():
    rng = random.Random(0)
    x = Surface(17)
    for _ in range(200):
        a, b, c = (
            MukaiVector(*(rng.randrange(-9, 10) for _ in range(3))) for _ in range(3)
        )
        k = rng.randrange(-4, 5)
        assert pairing(a, b, x) == pairing(b, a, x)
        assert pairing(a + b.scaled(k), c, x) == pairing(a, c, x) + k * pairing(
            b, c, x
        )
        assert pairing(a, a, x) % 2 == 0


def test_is_root():
    x13 = Surface(13)
    assert is_root(MukaiVector(1, 0, 1), x13)
    assert is_root(MukaiVector(1, 1, 14), x13)
    assert not is_root(MukaiVector(0, 1, 0), x13)


def test_slope():
    assert slope(MukaiVector(2, 3, 0)) == Fraction(3, 2)
    assert slope(MukaiVector(0, 1, -5)) == SLOPE_INFINITY
    assert Fraction(10**9) < SLOPE_INFINITY


def test_min_nondivisor_pairs():
    for p, m in PAPER_PAIRS:
        assert min_nondivisor(p) == m
    with pytest.raises(ValueError):
        min_nondivisor(12)


def test_distinguished_vectors_examples():
    d13 = distinguished_vectors(Surface(13))
    assert d13.m == 3
    assert d13.v == MukaiVector(9, 3, 13)
    assert d13.w == MukaiVector(0, 9, -39)
    d23 = distinguished_vectors(Surface(23))
    assert d23.m == 5
    assert d23.v == MukaiVector(25, 5, 23)
    assert d23.u == MukaiVector(-25, 20, -368)
    d17 = distinguished_vectors(Surface(17))
    assert d17.w.chi == -136
    for p, _ in PAPER_PAIRS:
        d = distinguished_vectors(Surface(p))
        assert d.v + d.u == d.w


def test_m_bound_check():
    r13 = m_bound_check(13)
    assert r13.m == 3 and r13.inequality_42 and not r13.asymptotic_claimed
    r251 = m_bound_check(251)
    assert r251.m == 5 and r251.asymptotic and r251.asymptotic_claimed
    r17 = m_bound_check(17)
    assert r17.m == 4 and not r17.asymptotic and not r17.asymptotic_claimed


def test_m_properties_over_prime_range():
    for p in primes_up_to(5000):
        if p < 13:
            continue
        x = Surface(p)
        d = distinguished_vectors(x)
        m = d.m
        assert (p + 1) % m != 0
        assert all((p + 1) % k == 0 for k in range(1, m))
        assert pairing(d.v, d.v, x) == 0
        assert math.gcd(m, p - m * m) == 1
        assert m_bound_check(p).inequality_42
        if p > 250:
            assert m_bound_check(p).asymptotic
