from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chardeg.errors import PrecisionCapError
from chardeg.exactmath import (
    EQUAL, GREATER, LESS,
    RatInterval, factorize, interval_gt, iroot, is_prime, p_part,
    pow_compare, prime_power, root_interval, sqrt_interval,
)


def test_p_part_examples():
    assert p_part(5616, 3) == 27
    assert p_part(1, 7) == 1
    assert p_part(504, 2) == 8


def test_p_part_rejects_bad_inputs():
    with pytest.raises(ValueError):
        p_part(12, 4)
    with pytest.raises(ValueError):
        p_part(0, 3)


@given(st.integers(min_value=1, max_value=10**6), st.sampled_from([2, 3, 5, 7, 11, 13]))
def test_p_part_splits_off_coprime_part(n, p):
    part = p_part(n, p)
    assert n % part == 0
    assert (n // part) % p != 0


def test_factorize_round_trip():
    for n in list(range(1, 500)) + [5616, 2**20, 3**12 * 7]:
        prod = 1
        for p, e in factorize(n):
            assert is_prime(p)
            prod *= p**e
        assert prod == n


def test_prime_power():
    assert prime_power(8) == (2, 3)
    assert prime_power(81) == (3, 4)
    with pytest.raises(ValueError):
        prime_power(12)
    with pytest.raises(ValueError):
        prime_power(1)


def test_pow_compare_examples():
    assert pow_compare(27, 8, 5616, 3) == GREATER
    assert pow_compare(4, 1, 2, 2) == EQUAL
    assert pow_compare(2, 3, 3, 2) == LESS


def test_pow_compare_exhaustive_against_direct_exponentiation():
    powers = {(a, x): a**x for a in range(1, 101) for x in range(1, 11)}
    for a in range(1, 101, 7):
        for x in range(1, 11):
            for b in range(1, 101, 9):
                for y in range(1, 11):
                    lhs, rhs = powers[(a, x)], powers[(b, y)]
                    expected = (lhs > rhs) - (lhs < rhs)
                    assert pow_compare(a, x, b, y) == expected
                    assert pow_compare(b, y, a, x) == -expected


def test_iroot():
    assert iroot(0, 5) == 0
    assert iroot(1, 9) == 1
    assert iroot(2**30, 3) == 2**10
    for m in (7, 26, 27, 28, 10**18, 10**18 + 1):
        for k in (2, 3, 5, 8):
            r = iroot(m, k)
            assert r**k <= m < (r + 1) ** k


def test_sqrt_interval_examples():
    iv = sqrt_interval(4, 10)
    assert iv.contains(2) and iv.width <= Fraction(1, 2**10)
    iv = sqrt_interval(2, 20)
    assert iv.lo**2 <= 2 <= iv.hi**2
    iv = sqrt_interval(150, 30)
    assert iv.lo**2 <= 150 <= iv.hi**2
    assert iv.width <= Fraction(1, 2**30)


@given(st.integers(min_value=0, max_value=10**9),
       st.integers(min_value=1, max_value=40))
def test_sqrt_interval_encloses(n, bits):
    iv = sqrt_interval(n, bits)
    assert iv.lo**2 <= n <= iv.hi**2
    assert iv.width <= Fraction(1, 2**bits)


@given(st.integers(min_value=0, max_value=10**6),
       st.integers(min_value=1, max_value=20))
def test_sqrt_interval_precision_monotone(n, bits):
    assert sqrt_interval(n, bits + 8).width <= sqrt_interval(n, bits).width


def test_root_interval():
    iv = root_interval(5**8, 8, 20)
    assert iv.contains(5)
    iv = root_interval(75**3, 8, 30)
    assert iv.lo**8 <= 75**3 <= iv.hi**8


def test_interval_arithmetic():
    a = RatInterval(Fraction(1), Fraction(2))
    b = RatInterval(Fraction(3), Fraction(4))
    assert (a + b).lo == 4 and (a + b).hi == 6
    assert (b - a).lo == 1 and (b - a).hi == 3
    assert (a * b).lo == 3 and (a * b).hi == 8
    assert (b / a).lo == Fraction(3, 2) and (b / a).hi == 4
    assert (1 / b).lo == Fraction(1, 4)
    with pytest.raises(ZeroDivisionError):
        1 / RatInterval(Fraction(-1), Fraction(1))


def test_interval_gt_separates():
    assert interval_gt(lambda bits: sqrt_interval(5, bits),
                       lambda bits: sqrt_interval(4, bits))
    assert not interval_gt(lambda bits: sqrt_interval(4, bits),
                           lambda bits: sqrt_interval(5, bits))


def test_interval_gt_inconclusive_on_equal_irrationals():
    with pytest.raises(PrecisionCapError):
        interval_gt(lambda bits: sqrt_interval(2, bits),
                    lambda bits: sqrt_interval(2, bits), cap_bits=256)
