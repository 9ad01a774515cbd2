"""Closed-form character degree data for the two-dimensional projective
special linear groups, with the field-automorphism invariance criteria and
the extendibility witnesses built on them.

For even q the group coincides with SL2(q) and its nontrivial degrees are q,
q+1 (the chi series) and q-1 (the theta series).  For odd q the chi and
theta indices are restricted to even values and two extra characters of
degree (q+1)/2 or (q-1)/2 appear according to q mod 4.
"""

from __future__ import annotations

from dataclasses import dataclass

from .degrees import DegreeMultiset
from .errors import UnsupportedFamilyError
from .exactmath import prime_power

FAMILIES = ("trivial", "steinberg", "chi", "theta", "xi", "eta")


@dataclass(frozen=True)
class Psl2Char:
    """One irreducible character of PSL2(q), identified by series and index."""

    q: int
    family: str
    index: int | None = None

    def __post_init__(self):
        p, f = prime_power(self.q)
        if self.q < 4:
            raise ValueError("q must be a prime power >= 4")
        fam, i = self.family, self.index
        if fam not in FAMILIES:
            raise ValueError(f"unknown family {fam!r}")
        if fam in ("trivial", "steinberg"):
            if i is not None:
                raise ValueError(f"{fam} takes no index")
        elif fam == "chi":
            if p == 2:
                if not (i is not None and 1 <= i <= (self.q - 2) // 2):
                    raise ValueError(f"chi index {i} out of range for q = {self.q}")
            else:
                if not (i is not None and 1 <= i <= (self.q - 3) // 2 and i % 2 == 0):
                    raise ValueError(f"chi index {i} must be even and <= {(self.q - 3) // 2}")
        elif fam == "theta":
            if p == 2:
                if not (i is not None and 1 <= i <= self.q // 2):
                    raise ValueError(f"theta index {i} out of range for q = {self.q}")
            else:
                if not (i is not None and 1 <= i <= (self.q - 1) // 2 and i % 2 == 0):
                    raise ValueError(f"theta index {i} must be even and <= {(self.q - 1) // 2}")
        elif fam == "xi":
            if self.q % 4 != 1:
                raise ValueError("xi characters exist only for q = 1 mod 4")
            if i not in (1, 2):
                raise ValueError("xi index must be 1 or 2")
        elif fam == "eta":
            if self.q % 4 != 3:
                raise ValueError("eta characters exist only for q = 3 mod 4")
            if i not in (1, 2):
                raise ValueError("eta index must be 1 or 2")

    @property
    def degree(self) -> int:
        return {
            "trivial": 1,
            "steinberg": self.q,
            "chi": self.q + 1,
            "theta": self.q - 1,
            "xi": (self.q + 1) // 2,
            "eta": (self.q - 1) // 2,
        }[self.family]


def psl2_order(q: int) -> int:
    p, _ = prime_power(q)
    return q * (q * q - 1) // (1 if p == 2 else 2)


def psl2_characters(q: int) -> list[Psl2Char]:
    """The full list of irreducible characters of PSL2(q), q >= 4."""
    if q < 4:
        raise ValueError("q must be a prime power >= 4")
    p, _ = prime_power(q)
    chars = [Psl2Char(q, "trivial"), Psl2Char(q, "steinberg")]
    if p == 2:
        chars.extend(Psl2Char(q, "chi", i) for i in range(1, (q - 2) // 2 + 1))
        chars.extend(Psl2Char(q, "theta", j) for j in range(1, q // 2 + 1))
    else:
        chars.extend(Psl2Char(q, "chi", i) for i in range(2, (q - 3) // 2 + 1, 2))
        chars.extend(Psl2Char(q, "theta", j) for j in range(2, (q - 1) // 2 + 1, 2))
        if q % 4 == 1:
            chars.extend(Psl2Char(q, "xi", i) for i in (1, 2))
        else:
            chars.extend(Psl2Char(q, "eta", i) for i in (1, 2))
    return chars


def psl2_degrees(q: int) -> DegreeMultiset:
    """Degree multiset of PSL2(q); multiplicities are index counts of the series."""
    if q < 4:
        raise ValueError("q must be a prime power >= 4")
    p, _ = prime_power(q)
    pairs = [(1, 1), (q, 1)]
    if p == 2:
        n_chi = len(range(1, (q - 2) // 2 + 1))
        n_theta = len(range(1, q // 2 + 1))
    else:
        n_chi = len(range(2, (q - 3) // 2 + 1, 2))
        n_theta = len(range(2, (q - 1) // 2 + 1, 2))
        pairs.append(((q + 1) // 2 if q % 4 == 1 else (q - 1) // 2, 2))
    if n_chi:
        pairs.append((q + 1, n_chi))
    if n_theta:
        pairs.append((q - 1, n_theta))
    return DegreeMultiset.from_pairs(pairs)


def field_invariance(c: Psl2Char, k: int) -> bool:
    """Whether the character is fixed by the k-th power of the field automorphism.

    For the chi series the criterion is (p**f - 1) | i(p**k - 1) or
    (p**f - 1) | i(p**k + 1); for the theta series the same with p**f + 1.
    No criterion is available for the other families.
    """
    p, f = prime_power(c.q)
    if not 1 <= k <= f:
        raise ValueError(f"k must satisfy 1 <= k <= {f}")
    if c.family == "chi":
        modulus = p**f - 1
    elif c.family == "theta":
        modulus = p**f + 1
    else:
        raise UnsupportedFamilyError(f"no invariance criterion for family {c.family!r}")
    i = c.index
    return i * (p**k - 1) % modulus == 0 or i * (p**k + 1) % modulus == 0


def extendible_witness_even(q: int) -> Psl2Char:
    """Nontrivial non-Steinberg character of SL2(2**f) fixed by every field
    automorphism, hence extendible to the full automorphism group.

    For odd f, 3 divides 2**f + 1 and theta at index (2**f + 1)/3 works; for
    even f, 3 divides 2**f - 1 and chi at index (2**f - 1)/3 works.
    """
    p, f = prime_power(q)
    if p != 2 or f < 3:
        raise ValueError("requires q = 2**f with f >= 3")
    if f % 2 == 1:
        return Psl2Char(q, "theta", (q + 1) // 3)
    return Psl2Char(q, "chi", (q - 1) // 3)


@dataclass
class Theta2StabilizerReport:
    """Divisibility evidence that no proper field-automorphism power fixes
    the first even-index theta character of PSL2(q), q odd.

    For each 1 <= k < f neither p**f + 1 divides 2(p**k - 1) nor 2(p**k + 1);
    the stabilizer inside the automorphism group is then the projective
    general linear group, of index f.
    """

    q: int
    p: int
    f: int
    checks: list[tuple[int, bool]]
    stabilizer_index: int

    @property
    def all_pass(self) -> bool:
        return all(ok for _, ok in self.checks)


def theta2_stabilizer_odd(q: int) -> Theta2StabilizerReport:
    p, f = prime_power(q)
    if p == 2 or q < 5:
        raise ValueError("requires an odd prime power q >= 5")
    modulus = p**f + 1
    checks = []
    for k in range(1, f):
        divides = 2 * (p**k - 1) % modulus == 0 or 2 * (p**k + 1) % modulus == 0
        checks.append((k, not divides))
    return Theta2StabilizerReport(q=q, p=p, f=f, checks=checks, stabilizer_index=f)
