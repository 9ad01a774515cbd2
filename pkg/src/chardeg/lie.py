"""Order formulas for the finite simple groups of Lie type, Steinberg degrees,
the eighth-power-versus-cube order check, the minimal-torus degree bound, and
the semisimple-centralizer degree calculus over the two-element field.

A centralizer shape records the factorization C = K x GL(k1,e1) x ... of the
centralizer of a semisimple element in SL_n(2), Sp_2n(2), or one of the
even-dimensional orthogonal groups over GF(2); GL factors carry a field
extension exponent d, a dimension k, and a sign (+1 linear, -1 unitary).
The degree of the irreducible character attached to (class, Steinberg of C)
is the odd part of [S : C] times the Steinberg degree of C, and all ratio
bounds are evaluated as exact rationals.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from pathlib import Path
from typing import Iterator

from . import gf2poly
from .errors import ExcludedCaseError
from .exactmath import GREATER, factorize, p_part, pow_compare, prime_power

FAMILIES = (
    "A", "2A", "B", "C", "D", "2D",
    "G2", "F4", "E6", "2E6", "E7", "E8",
    "2B2", "2G2", "2F4", "3D4",
)

_FIXED_RANK = {"G2": 2, "F4": 4, "E6": 6, "2E6": 6, "E7": 7, "E8": 8,
               "2B2": 2, "2G2": 2, "2F4": 4, "3D4": 4}


def _is_odd_power_of(q: int, p: int) -> bool:
    base, f = prime_power(q)
    return base == p and f % 2 == 1


@dataclass(frozen=True)
class SimpleGroupId:
    """Symbolic name (family, rank, q) of a finite simple group of Lie type.

    Parameter combinations that fail to be simple (for example rank-one
    groups over tiny fields) are rejected at construction.
    """

    family: str
    rank: int
    q: int

    def __post_init__(self):
        fam, n, q = self.family, self.rank, self.q
        if fam not in FAMILIES:
            raise ValueError(f"unknown family {fam!r}")
        prime_power(q)
        fixed = _FIXED_RANK.get(fam)
        if fixed is not None and n != fixed:
            raise ValueError(f"{fam} has rank {fixed}, got {n}")
        if fam == "A":
            if n < 1:
                raise ValueError("type A needs rank >= 1")
            if n == 1 and q in (2, 3):
                raise ValueError(f"A1({q}) is not simple")
        elif fam == "2A":
            if n < 2:
                raise ValueError("type 2A needs rank >= 2")
            if n == 2 and q == 2:
                raise ValueError("2A2(2) is not simple")
        elif fam in ("B", "C"):
            if n < 2:
                raise ValueError(f"type {fam} needs rank >= 2")
            if n == 2 and q == 2:
                raise ValueError(f"{fam}2(2) is not simple")
        elif fam in ("D", "2D"):
            if n < 4:
                raise ValueError(f"type {fam} needs rank >= 4")
        elif fam == "G2" and q == 2:
            raise ValueError("G2(2) is not simple")
        elif fam in ("2B2", "2F4"):
            if not _is_odd_power_of(q, 2) or q < 8:
                raise ValueError(f"{fam} needs q an odd power of 2, q >= 8")
        elif fam == "2G2":
            if not _is_odd_power_of(q, 3) or q < 27:
                raise ValueError("2G2 needs q an odd power of 3, q >= 27")

    @property
    def characteristic(self) -> int:
        return prime_power(self.q)[0]


def _order_parts(gid: SimpleGroupId) -> tuple[int, list[int], int]:
    """(q-power part, cyclotomic factors, center order) of the simply
    connected group; the simple group order is the product of the first two
    divided by the third."""
    fam, n, q = gid.family, gid.rank, gid.q
    if fam == "A":
        return q ** (n * (n + 1) // 2), [q**i - 1 for i in range(2, n + 2)], \
            _gcd(n + 1, q - 1)
    if fam == "2A":
        return q ** (n * (n + 1) // 2), \
            [q**i - (-1) ** i for i in range(2, n + 2)], _gcd(n + 1, q + 1)
    if fam in ("B", "C"):
        return q ** (n * n), [q ** (2 * i) - 1 for i in range(1, n + 1)], _gcd(2, q - 1)
    if fam == "D":
        return q ** (n * (n - 1)), \
            [q**n - 1] + [q ** (2 * i) - 1 for i in range(1, n)], _gcd(4, q**n - 1)
    if fam == "2D":
        return q ** (n * (n - 1)), \
            [q**n + 1] + [q ** (2 * i) - 1 for i in range(1, n)], _gcd(4, q**n + 1)
    if fam == "G2":
        return q**6, [q**6 - 1, q**2 - 1], 1
    if fam == "F4":
        return q**24, [q**12 - 1, q**8 - 1, q**6 - 1, q**2 - 1], 1
    if fam == "E6":
        return q**36, [q**12 - 1, q**9 - 1, q**8 - 1, q**6 - 1, q**5 - 1, q**2 - 1], \
            _gcd(3, q - 1)
    if fam == "2E6":
        return q**36, [q**12 - 1, q**9 + 1, q**8 - 1, q**6 - 1, q**5 + 1, q**2 - 1], \
            _gcd(3, q + 1)
    if fam == "E7":
        return q**63, [q**18 - 1, q**14 - 1, q**12 - 1, q**10 - 1, q**8 - 1,
                       q**6 - 1, q**2 - 1], _gcd(2, q - 1)
    if fam == "E8":
        return q**120, [q**30 - 1, q**24 - 1, q**20 - 1, q**18 - 1, q**14 - 1,
                        q**12 - 1, q**8 - 1, q**2 - 1], 1
    if fam == "2B2":
        return q**2, [q**2 + 1, q - 1], 1
    if fam == "2G2":
        return q**3, [q**3 + 1, q - 1], 1
    if fam == "2F4":
        return q**12, [q**6 + 1, q**4 - 1, q**3 + 1, q - 1], 1
    if fam == "3D4":
        return q**12, [q**8 + q**4 + 1, q**6 - 1, q**2 - 1], 1
    raise AssertionError(fam)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def simply_connected_order(gid: SimpleGroupId) -> int:
    qpart, factors, _ = _order_parts(gid)
    return qpart * prod(factors)


def simple_order(gid: SimpleGroupId) -> int:
    qpart, factors, center = _order_parts(gid)
    total = qpart * prod(factors)
    if total % center:
        raise AssertionError("center does not divide the group order")
    return total // center


def steinberg_degree(gid: SimpleGroupId) -> int:
    """Degree of the Steinberg character: the p-part of the group order."""
    return p_part(simple_order(gid), gid.characteristic)


def verify_lie_38(gid: SimpleGroupId) -> bool:
    """Whether St(1)**8 > |S|**3, the exact form of St(1) > |S|**(3/8).

    The rank-one linear groups are excluded: their largest degree is only
    about the cube root of the order, so the inequality genuinely fails
    there and they are handled by separate arguments.
    """
    if gid.family == "A" and gid.rank == 1:
        raise ExcludedCaseError("rank-one type A is excluded from this check")
    return pow_compare(steinberg_degree(gid), 8, simple_order(gid), 3) == GREATER


def prime_powers_up_to(limit: int) -> list[int]:
    out = []
    for q in range(2, limit + 1):
        try:
            prime_power(q)
            out.append(q)
        except ValueError:
            pass
    return out


def iter_simple_ids(max_rank: int, max_q: int) -> Iterator[SimpleGroupId]:
    """Every valid id with rank <= max_rank and q <= max_q, deterministically."""
    qs = prime_powers_up_to(max_q)
    for fam in FAMILIES:
        fixed = _FIXED_RANK.get(fam)
        ranks = [fixed] if fixed is not None else range(1, max_rank + 1)
        for n in ranks:
            if n > max_rank:
                continue
            for q in qs:
                try:
                    yield SimpleGroupId(fam, n, q)
                except ValueError:
                    continue


# ---------------------------------------------------------------------------
# Minimal-torus degree bound for the high-rank classical groups over GF(3)
# and GF(2) left open by low-rank degree tables.

SEITZ_UNTWISTED = {
    "A": (3, range(8, 14)),    # PSL_n(3), 9 <= n <= 14 (rank n-1)
    "B": (3, range(9, 18)),    # Omega_{2n+1}(3), 9 <= n <= 17
    "C": (3, range(9, 18)),    # PSp_{2n}(3), 9 <= n <= 17
    "D": (3, range(9, 31)),    # POmega+_{2n}(3), 9 <= n <= 30
}
SEITZ_TWISTED = {
    "2A": (2, range(8, 14)),   # PSU_n(2), 9 <= n <= 14 (rank n-1)
    "2D": (3, range(9, 31)),   # POmega-_{2n}(3), 9 <= n <= 30
}


def seitz_ids(twisted: bool = False) -> list[SimpleGroupId]:
    table = SEITZ_TWISTED if twisted else SEITZ_UNTWISTED
    out = []
    for fam, (q, ranks) in table.items():
        out.extend(SimpleGroupId(fam, n, q) for n in ranks)
    return out


def split_torus_order(gid: SimpleGroupId) -> int:
    """(q-1)**rank, the minimal maximal-torus order of an untwisted split group."""
    if gid.family not in SEITZ_UNTWISTED and gid.family not in (
            "G2", "F4", "E6", "E7", "E8"):
        raise ValueError(f"{gid.family} is not untwisted split")
    return (gid.q - 1) ** gid.rank


@dataclass(frozen=True)
class SeitzReport:
    gid: SimpleGroupId
    torus_order: int
    bound: int
    passes_2b2: bool


def seitz_check(gid: SimpleGroupId, torus_order: int | None = None) -> SeitzReport:
    """Bound the largest degree by the odd-over-torus index of the simply
    connected group and test order > 2 * bound**2.

    torus_order defaults to the split value for untwisted families and must
    be supplied (from a torus table) for twisted ones.
    """
    in_untwisted = any(gid.family == f and gid.q == q and gid.rank in r
                       for f, (q, r) in SEITZ_UNTWISTED.items())
    in_twisted = any(gid.family == f and gid.q == q and gid.rank in r
                     for f, (q, r) in SEITZ_TWISTED.items())
    if not (in_untwisted or in_twisted):
        raise ValueError(f"{gid} is not in the supported torus-bound list")
    if torus_order is None:
        if in_twisted:
            raise ValueError(f"{gid} is twisted; a torus order must be supplied")
        torus_order = split_torus_order(gid)
    sc = simply_connected_order(gid)
    if torus_order < 1 or sc % torus_order:
        raise ValueError(f"torus order {torus_order} does not divide the group order")
    quotient = sc // torus_order
    bound = quotient // p_part(quotient, gid.characteristic)
    order = simple_order(gid)
    return SeitzReport(gid, torus_order, bound, order > 2 * bound * bound)


def load_torus_table(path) -> dict[tuple[str, int, int], int]:
    """Read a torus-order table: JSON object mapping "family/rank/q" keys to
    decimal order strings."""
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    table = {}
    for key, value in raw.items():
        fam, rank, q = key.split("/")
        table[(fam, int(rank), int(q))] = int(value)
    return table


# ---------------------------------------------------------------------------
# Semisimple centralizer shapes over GF(2).

AMBIENTS = ("SL", "Sp", "O+", "O-")


def gl_order(d: int, k: int, eps: int) -> int:
    """Order of GL_k(2**d) for eps = +1, of the unitary group GU_k(2**d) for
    eps = -1."""
    if d < 1 or k < 1 or eps not in (1, -1):
        raise ValueError("need d >= 1, k >= 1, eps = +-1")
    return (1 << (d * k * (k - 1) // 2)) * prod(
        (1 << (d * i)) - eps**i for i in range(1, k + 1))


def sp_order(m: int) -> int:
    return (1 << (m * m)) * prod((1 << (2 * i)) - 1 for i in range(1, m + 1))


def omega_order(m: int, beta: int) -> int:
    if m == 0:
        return 1
    return (1 << (m * (m - 1))) * ((1 << m) - beta) * prod(
        (1 << (2 * i)) - 1 for i in range(1, m))


def ambient_order(kind: str, n: int) -> int:
    if kind == "SL":
        return (1 << (n * (n - 1) // 2)) * prod((1 << i) - 1 for i in range(2, n + 1))
    if kind == "Sp":
        return sp_order(n)
    if kind == "O+":
        return omega_order(n, +1)
    if kind == "O-":
        return omega_order(n, -1)
    raise ValueError(f"unknown ambient {kind!r}")


@dataclass(frozen=True)
class ClassicalFactor:
    """One GL-type factor of a semisimple centralizer: GL_k(2**d) when
    eps = +1, the unitary group on k points over GF(2**d) when eps = -1."""

    d: int
    k: int
    eps: int

    def __post_init__(self):
        if self.d < 1 or self.k < 1 or self.eps not in (1, -1):
            raise ValueError(f"bad factor ({self.d}, {self.k}, {self.eps})")

    @property
    def ndim(self) -> int:
        """Contribution to the shape's dimension budget."""
        return self.d * self.k

    @property
    def order(self) -> int:
        return gl_order(self.d, self.k, self.eps)

    @property
    def steinberg(self) -> int:
        return 1 << (self.d * self.k * (self.k - 1) // 2)

    @property
    def sign(self) -> int:
        return self.eps**self.k

    def sort_key(self):
        # decreasing d*k, ties by decreasing d, then +1 before -1
        return (-self.ndim, -self.d, -self.eps)


def _canonical(factors) -> tuple[ClassicalFactor, ...]:
    return tuple(sorted(factors, key=ClassicalFactor.sort_key))


@dataclass(frozen=True)
class CentralizerShape:
    """Factor decomposition K x GL-factors of a semisimple centralizer.

    ambient is one of SL, Sp, O+, O- with dimension parameter n (dimension n
    over GF(2) for SL, 2n otherwise); m is the half-dimension of the
    eigenvalue-one block K (0 when absent) and beta its orthogonal sign.
    The dimension budget satisfies m + sum of d*k over factors = n, and for
    orthogonal ambients the factor signs must multiply to the ambient sign.
    """

    ambient: str
    n: int
    m: int
    beta: int | None
    factors: tuple[ClassicalFactor, ...]

    def __post_init__(self):
        if self.ambient not in AMBIENTS:
            raise ValueError(f"unknown ambient {self.ambient!r}")
        minimum = {"SL": 3, "Sp": 2, "O+": 3, "O-": 3}[self.ambient]
        if self.n < minimum:
            raise ValueError(f"{self.ambient} ambient needs n >= {minimum}")
        if self.m < 0:
            raise ValueError("m must be nonnegative")
        if self.ambient == "SL":
            if self.m != 0 or self.beta is not None:
                raise ValueError("SL ambient has no eigenvalue-one block")
            if any(f.eps != 1 for f in self.factors):
                raise ValueError("SL ambient admits only linear factors")
        elif self.ambient == "Sp":
            if self.beta is not None:
                raise ValueError("Sp block carries no sign")
        else:
            if self.m == 0 and self.beta is not None:
                raise ValueError("beta requires m >= 1")
            if self.m >= 1 and self.beta not in (1, -1):
                raise ValueError("orthogonal block needs beta = +-1")
            ambient_sign = 1 if self.ambient == "O+" else -1
            block_sign = self.beta if self.m >= 1 else 1
            if block_sign * prod(f.sign for f in self.factors) != ambient_sign:
                raise ValueError("factor signs do not multiply to the ambient sign")
        if self.m + sum(f.ndim for f in self.factors) != self.n:
            raise ValueError("dimension budget m + sum(d*k) != n")
        if sum(1 for f in self.factors if f.d == 1 and f.eps == 1) > 1:
            raise ValueError("a (d, eps) = (1, +) factor may occur at most once")

    @property
    def r(self) -> int:
        return len(self.factors)

    def with_factors(self, factors) -> "CentralizerShape":
        return CentralizerShape(self.ambient, self.n, self.m, self.beta,
                                _canonical(factors))


def make_shape(ambient: str, n: int, m: int, beta: int | None,
               factors) -> CentralizerShape:
    """Build a shape with the factors in canonical order."""
    return CentralizerShape(ambient, n, m, beta,
                            _canonical(ClassicalFactor(*f) if isinstance(f, tuple)
                                       else f for f in factors))


def k_factor_order(shape: CentralizerShape) -> int:
    if shape.ambient == "SL" or shape.m == 0:
        return 1
    if shape.ambient == "Sp":
        return sp_order(shape.m)
    return omega_order(shape.m, shape.beta)


def k_factor_steinberg(shape: CentralizerShape) -> int:
    if shape.ambient == "SL" or shape.m == 0:
        return 1
    if shape.ambient == "Sp":
        return 1 << (shape.m * shape.m)
    return 1 << (shape.m * (shape.m - 1))


def centralizer_order(shape: CentralizerShape) -> int:
    return k_factor_order(shape) * prod(f.order for f in shape.factors)


def shape_ambient_order(shape: CentralizerShape) -> int:
    return ambient_order(shape.ambient, shape.n)


def semisimple_degree(shape: CentralizerShape) -> int:
    """Degree of the character attached to (class of s, Steinberg of C):
    the odd part of [S : C] times the Steinberg degree of C."""
    s = shape_ambient_order(shape)
    c = centralizer_order(shape)
    if s % c:
        raise ValueError("centralizer order does not divide the ambient order")
    index = s // c
    odd = index >> ((index & -index).bit_length() - 1)
    degree = odd * k_factor_steinberg(shape) * prod(f.steinberg for f in shape.factors)
    if s % degree:
        raise AssertionError("computed degree does not divide the group order")
    return degree


SITUATIONS = ("i", "ii", "iii", "iv")


def _situation_context(shape: CentralizerShape, i: int, j: int):
    if shape.r < 4:
        raise ValueError("situations require at least four GL-type factors")
    if shape.factors != _canonical(shape.factors):
        raise ValueError("factors must be in canonical decreasing order")
    if not (1 <= i < j <= shape.r):
        raise ValueError(f"need 1 <= i < j <= {shape.r}")
    fi, fj = shape.factors[i - 1], shape.factors[j - 1]
    d0 = fi.ndim + fj.ndim
    if d0 % 2 or d0 < 4:
        raise ValueError(f"pair dimension d0 = {d0} must be even and >= 4")
    eps_prod = fi.sign * fj.sign
    rest = [f for t, f in enumerate(shape.factors, start=1) if t not in (i, j)]
    return fi, fj, d0, eps_prod, rest


def situation_shape(shape: CentralizerShape, i: int, j: int,
                    situation: str) -> CentralizerShape:
    """Shape of the comparison element t for one of the four merge moves.

    (i)  replace factors i, j by a fresh GL-type factor of extension d0;
    (ii) fold them into an existing factor of extension d0, same sign;
    (iii) replace them by a fresh unitary factor GU_2(2**(d0/2));
    (iv) fold them into an existing unitary factor of extension d0/2.
    Moves (iii) and (iv) require the pair signs to multiply to +1.
    """
    if situation not in SITUATIONS:
        raise ValueError(f"unknown situation {situation!r}")
    _, _, d0, eps_prod, rest = _situation_context(shape, i, j)
    if situation == "i":
        if any(f.d == d0 and f.eps == eps_prod for f in rest):
            raise ValueError(f"a (d={d0}, eps={eps_prod:+d}) factor is already present")
        new = rest + [ClassicalFactor(d0, 1, eps_prod)]
    elif situation == "ii":
        pos = next((t for t, f in enumerate(rest)
                    if f.d == d0 and f.eps == eps_prod), None)
        if pos is None:
            raise ValueError(f"no (d={d0}, eps={eps_prod:+d}) factor to merge into")
        old = rest[pos]
        new = rest[:pos] + [ClassicalFactor(d0, old.k + 1, eps_prod)] + rest[pos + 1:]
    elif situation == "iii":
        if eps_prod != 1:
            raise ValueError("situation iii requires the pair signs to multiply to +1")
        if any(f.d == d0 // 2 and f.eps == -1 for f in rest):
            raise ValueError(f"a unitary factor of extension {d0 // 2} is already present")
        new = rest + [ClassicalFactor(d0 // 2, 2, -1)]
    else:
        if eps_prod != 1:
            raise ValueError("situation iv requires the pair signs to multiply to +1")
        pos = next((t for t, f in enumerate(rest)
                    if f.d == d0 // 2 and f.eps == -1), None)
        if pos is None:
            raise ValueError(f"no unitary factor of extension {d0 // 2} to merge into")
        old = rest[pos]
        new = rest[:pos] + [ClassicalFactor(d0 // 2, old.k + 2, -1)] + rest[pos + 1:]
    out = shape.with_factors(new)
    assert out.m + sum(f.ndim for f in out.factors) == out.n
    return out


def situation_ratio(shape: CentralizerShape, i: int, j: int,
                    situation: str) -> Fraction:
    """psi(1)/chi(1) for the comparison element of the given situation,
    as an exact rational."""
    t_shape = situation_shape(shape, i, j, situation)
    return Fraction(semisimple_degree(t_shape), semisimple_degree(shape))


def applicable_situations(shape: CentralizerShape, i: int, j: int) -> list[str]:
    out = []
    for situation in SITUATIONS:
        try:
            situation_shape(shape, i, j, situation)
        except ValueError:
            continue
        out.append(situation)
    return out


# ---------------------------------------------------------------------------
# Shape generation: availability of polynomials bounds how many factors of a
# given (d, eps) type can coexist in a genuine centralizer.

def factor_availability(ambient: str, d: int, eps: int) -> int:
    """How many distinct GL-type factors with parameters (d, eps) can occur.

    In the symplectic/orthogonal ambients a +1 factor consumes an unordered
    pair {g, g~} of distinct irreducibles of degree d and a -1 factor a
    self-reciprocal irreducible of degree 2d; in the linear ambient each
    irreducible of degree d except x gives a factor.
    """
    if ambient == "SL":
        if eps != 1:
            raise ValueError("SL ambient has only +1 factors")
        n_d = gf2poly.count_irreducible_monic(d)
        return n_d - 1 if d == 1 else n_d
    if eps == 1:
        return gf2poly.reciprocal_pair_count(d)
    return gf2poly.count_self_reciprocal(d)


def iter_situation_instances(ns=(9, 10, 11, 12), ambients=("Sp", "O+", "O-"),
                             r: int = 4, max_dk: int = 6):
    """Exhaustively yield (shape, i, j, situation) for every realizable shape
    with exactly r GL-type factors of dimension contribution at most max_dk,
    every even pair of dimension at least 4, and every applicable situation.
    """
    base_types = []
    for d in range(1, max_dk + 1):
        for k in range(1, max_dk // d + 1):
            for eps in (1, -1):
                try:
                    avail = factor_availability("Sp", d, eps)
                except ValueError:
                    avail = 0
                if avail >= 1:
                    base_types.append((d, k, eps))
    base_types.sort()

    def multisets(start: int, count: int, chosen: list):
        if count == 0:
            yield list(chosen)
            return
        for t in range(start, len(base_types)):
            d, k, eps = base_types[t]
            used = sum(1 for (dd, _, ee) in chosen if (dd, ee) == (d, eps))
            if used + 1 > factor_availability("Sp", d, eps):
                continue
            chosen.append(base_types[t])
            yield from multisets(t, count - 1, chosen)
            chosen.pop()

    want_sp = "Sp" in ambients
    want_o = {"O+": 1, "O-": -1}
    wanted_signs = {sign for a, sign in want_o.items() if a in ambients}
    for combo in multisets(0, r, []):
        dims = sum(d * k for d, k, _ in combo)
        sign = prod(e**k for _, k, e in combo)
        for n in ns:
            m = n - dims
            if m < 0:
                continue
            shapes = []
            if want_sp:
                shapes.append(make_shape("Sp", n, m, None, combo))
            if m == 0:
                if sign in wanted_signs:
                    amb = "O+" if sign == 1 else "O-"
                    shapes.append(make_shape(amb, n, 0, None, combo))
            else:
                for beta in (1, -1):
                    if beta * sign in wanted_signs:
                        amb = "O+" if beta * sign == 1 else "O-"
                        shapes.append(make_shape(amb, n, m, beta, combo))
            for shape in shapes:
                for i in range(1, r + 1):
                    for j in range(i + 1, r + 1):
                        fi, fj = shape.factors[i - 1], shape.factors[j - 1]
                        d0 = fi.ndim + fj.ndim
                        if d0 % 2 or d0 < 4:
                            continue
                        for situation in applicable_situations(shape, i, j):
                            yield shape, i, j, situation


def random_shape(rng, n: int, r_max: int = 3, ambient_pool=("O+", "O-")):
    """Draw a realizable shape with at most r_max GL-type factors in an
    orthogonal (or symplectic) ambient of parameter n."""
    while True:
        r = rng.randint(0, r_max)
        factors = []
        budget = n
        ok = True
        for _ in range(r):
            if budget < 1:
                ok = False
                break
            d = rng.randint(1, budget)
            k = rng.randint(1, budget // d)
            eps = rng.choice((1, -1))
            used = sum(1 for f in factors if (f.d, f.eps) == (d, eps))
            if used + 1 > factor_availability("Sp", d, eps):
                ok = False
                break
            factors.append(ClassicalFactor(d, k, eps))
            budget -= d * k
        if not ok:
            continue
        m = budget
        sign = prod(f.sign for f in factors)
        if "Sp" in ambient_pool and rng.random() < 0.5:
            return make_shape("Sp", n, m, None, factors)
        if m == 0:
            amb = "O+" if sign == 1 else "O-"
            if amb not in ambient_pool:
                continue
            return make_shape(amb, n, 0, None, factors)
        beta = rng.choice((1, -1))
        amb = "O+" if beta * sign == 1 else "O-"
        if amb not in ambient_pool:
            beta = -beta
            amb = "O+" if beta * sign == 1 else "O-"
            if amb not in ambient_pool:
                continue
        return make_shape(amb, n, m, beta, factors)


def euler_tail_lower(q: int, start: int = 2, terms: int = 40) -> Fraction:
    """Rigorous rational lower bound for prod_{i >= start} (1 - q**-i).

    The first `terms` factors are multiplied exactly; the remaining tail is
    bounded below by 1 - q**-(start+terms-1) / (q-1) via the geometric series.
    """
    if q < 2:
        raise ValueError("q must be at least 2")
    if start < 1 or terms < 0:
        raise ValueError("need start >= 1, terms >= 0")
    partial = Fraction(1)
    for i in range(start, start + terms):
        partial *= 1 - Fraction(1, q**i)
    last = start + terms - 1
    tail = 1 - Fraction(1, q**last) / (q - 1)
    return partial * tail
