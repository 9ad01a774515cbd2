"""Exact integer, rational, and interval arithmetic primitives.

Every inequality verified by this package reduces to an exact integer or
rational comparison.  Fractional powers are compared by cross-exponentiation
(a > b^(x/y) iff a**y > b**x for positive integers), and genuinely irrational
quantities such as square roots are enclosed in rational intervals with
outward rounding, so a strict inequality is accepted only when the intervals
separate completely.  No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import PrecisionCapError

LESS, EQUAL, GREATER = -1, 0, 1


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as (prime, exponent) pairs, ascending."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e:
                out.append((p, e))
        f += 6
    if n > 1:
        out.append((n, 1))
    return out


def prime_power(n: int) -> tuple[int, int]:
    """Return (p, f) with n = p**f, or raise ValueError if n is not a prime power."""
    if n < 2:
        raise ValueError(f"{n} is not a prime power")
    fac = factorize(n)
    if len(fac) != 1:
        raise ValueError(f"{n} is not a prime power")
    return fac[0]


def is_prime_power(n: int) -> bool:
    try:
        prime_power(n)
        return True
    except ValueError:
        return False


def p_part(n: int, p: int) -> int:
    """Largest power of the prime p dividing n >= 1."""
    if not is_prime(p):
        raise ValueError(f"p_part requires a prime, got {p}")
    if n < 1:
        raise ValueError(f"p_part requires n >= 1, got {n}")
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def pow_compare(a: int, x: int, b: int, y: int) -> int:
    """Compare a**x with b**y exactly; returns LESS, EQUAL, or GREATER.

    This is the exact form of every fractional-power comparison in the
    package: a > b**(y/x) is decided as a**x > b**y.
    """
    if a < 1 or b < 1 or x < 1 or y < 1:
        raise ValueError("pow_compare requires positive integer arguments")
    lhs = a**x
    rhs = b**y
    if lhs < rhs:
        return LESS
    if lhs > rhs:
        return GREATER
    return EQUAL


def iroot(m: int, k: int) -> int:
    """Floor of the k-th root of m >= 0, by Newton iteration on integers."""
    if m < 0 or k < 1:
        raise ValueError("iroot requires m >= 0 and k >= 1")
    if k == 1 or m in (0, 1):
        return m
    if k == 2:
        return isqrt(m)
    x = 1 << (m.bit_length() // k + 1)
    while True:
        y = ((k - 1) * x + m // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x**k > m:
        x -= 1
    while (x + 1) ** k <= m:
        x += 1
    return x


@dataclass(frozen=True)
class RatInterval:
    """Closed interval with exact rational endpoints, lo <= hi.

    Arithmetic follows outward (Moore) rules; endpoints stay exact so the
    only approximation ever introduced is at the root enclosures.
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> "RatInterval":
        x = Fraction(x)
        return cls(x, x)

    @staticmethod
    def _coerce(x) -> "RatInterval":
        if isinstance(x, RatInterval):
            return x
        return RatInterval.point(x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        x = Fraction(x)
        return self.lo <= x <= self.hi

    def __add__(self, other):
        o = self._coerce(other)
        return RatInterval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self):
        return RatInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        products = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return RatInterval(min(products), max(products))

    __rmul__ = __mul__

    def _reciprocal(self) -> "RatInterval":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval straddles zero")
        return RatInterval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        return self * self._coerce(other)._reciprocal()

    def __rtruediv__(self, other):
        return self._coerce(other) * self._reciprocal()


def sqrt_interval(n: int, precision_bits: int) -> RatInterval:
    """Enclose sqrt(n) in an interval of width <= 2**-precision_bits.

    Endpoints satisfy lo*lo <= n <= hi*hi.
    """
    if n < 0:
        raise ValueError("sqrt_interval requires n >= 0")
    if precision_bits < 0:
        raise ValueError("precision_bits must be nonnegative")
    scale = 1 << precision_bits
    s = isqrt(n << (2 * precision_bits))
    lo = Fraction(s, scale)
    if s * s == n << (2 * precision_bits):
        return RatInterval(lo, lo)
    return RatInterval(lo, Fraction(s + 1, scale))


def root_interval(m: int, k: int, precision_bits: int) -> RatInterval:
    """Enclose the k-th root of m >= 0 in an interval of width <= 2**-precision_bits."""
    if m < 0:
        raise ValueError("root_interval requires m >= 0")
    scale = 1 << precision_bits
    r = iroot(m << (k * precision_bits), k)
    lo = Fraction(r, scale)
    if r**k == m << (k * precision_bits):
        return RatInterval(lo, lo)
    return RatInterval(lo, Fraction(r + 1, scale))


def interval_gt(lhs, rhs, start_bits: int = 32, cap_bits: int = 4096) -> bool:
    """Decide LHS > RHS where both sides are interval-valued functions of precision.

    lhs and rhs map a bit count to a RatInterval enclosing the quantity at
    that precision.  Precision doubles until the intervals separate; if the
    cap is reached without separation a PrecisionCapError is raised.
    """
    bits = start_bits
    while bits <= cap_bits:
        a = lhs(bits)
        b = rhs(bits)
        if a.lo > b.hi:
            return True
        if a.hi <= b.lo:
            return False
        bits *= 2
    raise PrecisionCapError(f"inconclusive at precision cap ({cap_bits} bits)")
