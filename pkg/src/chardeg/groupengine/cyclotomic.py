"""Exact cyclotomic integers on the power basis of a primitive m-th root.

A value is an integer vector (c_0, ..., c_{m-1}) standing for the sum of
c_u zeta**u.  Products are convolutions modulo x**m - 1; equality and the
zero test reduce modulo the m-th cyclotomic polynomial, so they are exact
and never float-thresholded.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..gf2poly import _divisors


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact quotient of integer polynomials (little-endian); remainder must vanish."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for shift in range(len(num) - len(den), -1, -1):
        coef = num[shift + len(den) - 1]
        if coef % den[-1]:
            raise AssertionError("non-exact polynomial division")
        coef //= den[-1]
        out[shift] = coef
        for i, d in enumerate(den):
            num[shift + i] -= coef * d
    if any(num):
        raise AssertionError("nonzero remainder in exact division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of the m-th cyclotomic polynomial, little-endian."""
    if m < 1:
        raise ValueError("m must be positive")
    if m == 1:
        return (-1, 1)
    num = [0] * (m + 1)
    num[0] = -1
    num[m] = 1
    out = num
    for d in _divisors(m):
        if d < m:
            out = _polydiv_exact(out, list(cyclotomic_polynomial(d)))
    return tuple(out)


def _reduce(coeffs: tuple[int, ...], m: int) -> tuple[int, ...]:
    """Remainder of the vector modulo the m-th cyclotomic polynomial."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    work = list(coeffs)
    for shift in range(len(work) - 1 - deg, -1, -1):
        coef = work[shift + deg]
        if coef:
            for i in range(deg + 1):
                work[shift + i] -= coef * phi[i]
    out = work[:deg]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Cyc:
    """Cyclotomic integer over the m-th roots of unity."""

    m: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.m:
            raise ValueError("coefficient vector must have length m")

    @classmethod
    def integer(cls, m: int, value: int) -> "Cyc":
        return cls(m, (value,) + (0,) * (m - 1))

    @classmethod
    def root_power(cls, m: int, u: int, mult: int = 1) -> "Cyc":
        coeffs = [0] * m
        coeffs[u % m] = mult
        return cls(m, tuple(coeffs))

    def reduced(self) -> tuple[int, ...]:
        return _reduce(self.coeffs, self.m)

    def is_zero(self) -> bool:
        return not self.reduced()

    def as_int(self) -> int | None:
        """The rational-integer value, or None if not a rational integer."""
        red = self.reduced()
        if len(red) <= 1:
            return red[0] if red else 0
        return None

    def conjugate(self) -> "Cyc":
        out = [0] * self.m
        for u, c in enumerate(self.coeffs):
            out[(-u) % self.m] += c
        return Cyc(self.m, tuple(out))

    def __add__(self, other: "Cyc") -> "Cyc":
        self._check(other)
        return Cyc(self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Cyc") -> "Cyc":
        self._check(other)
        return Cyc(self.m, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other) -> "Cyc":
        if isinstance(other, int):
            return Cyc(self.m, tuple(c * other for c in self.coeffs))
        self._check(other)
        out = [0] * self.m
        for u, a in enumerate(self.coeffs):
            if a:
                for v, b in enumerate(other.coeffs):
                    if b:
                        out[(u + v) % self.m] += a * b
        return Cyc(self.m, tuple(out))

    __rmul__ = __mul__

    def _check(self, other: "Cyc") -> None:
        if self.m != other.m:
            raise ValueError("mixed root orders")

    def __eq__(self, other):
        if isinstance(other, int):
            return self.as_int() == other
        if not isinstance(other, Cyc):
            return NotImplemented
        return self.m == other.m and (self - other).is_zero()

    def __hash__(self):
        return hash((self.m, self.reduced()))

    def __repr__(self):
        return f"Cyc({self.m}, {self.coeffs})"
