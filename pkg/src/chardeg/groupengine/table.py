"""Explicit small groups: breadth-first closure of a generating set, the
multiplication table interface, conjugacy classes, normal subgroup machinery,
and derived series."""

from __future__ import annotations

from math import gcd

from ..errors import ResourceLimitError

MAX_ELEMENTS = 5000


class GroupTable:
    """A closed list of group elements with index-based multiplication.

    Index 0 is the identity.  Products are computed through the element
    representation and memoized, so no full Cayley table is materialized
    unless actually visited.
    """

    def __init__(self, elements, generator_indices):
        self.elements = list(elements)
        self._index = {g: i for i, g in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate elements")
        self.generators = list(generator_indices)
        self._mult: dict[tuple[int, int], int] = {}
        self._inv: list[int | None] = [None] * len(self.elements)
        self._classes = None
        self._orders: list[int | None] = [None] * len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, element) -> int:
        return self._index[element]

    def mult(self, i: int, j: int) -> int:
        key = (i, j)
        out = self._mult.get(key)
        if out is None:
            out = self._index[self.elements[i] * self.elements[j]]
            self._mult[key] = out
        return out

    def inverse(self, i: int) -> int:
        out = self._inv[i]
        if out is None:
            out = self._index[self.elements[i].inverse()]
            self._inv[i] = out
        return out

    def conjugate(self, i: int, by: int) -> int:
        return self.mult(self.inverse(by), self.mult(i, by))

    def element_order(self, i: int) -> int:
        out = self._orders[i]
        if out is None:
            out = 1
            x = i
            while x != 0:
                x = self.mult(x, i)
                out += 1
            self._orders[i] = out
        return out

    def exponent(self) -> int:
        exp = 1
        for i in range(len(self.elements)):
            exp = exp * self.element_order(i) // gcd(exp, self.element_order(i))
        return exp

    def conjugacy_classes(self) -> list[list[int]]:
        """Orbits under conjugation, identity class first, then in order of
        the smallest member index; each class is sorted."""
        if self._classes is not None:
            return self._classes
        seen = [False] * len(self.elements)
        classes = []
        for start in range(len(self.elements)):
            if seen[start]:
                continue
            orbit = {start}
            frontier = [start]
            seen[start] = True
            while frontier:
                nxt = []
                for x in frontier:
                    for g in self.generators:
                        y = self.conjugate(x, g)
                        if not seen[y]:
                            seen[y] = True
                            orbit.add(y)
                            nxt.append(y)
                frontier = nxt
            classes.append(sorted(orbit))
        self._classes = classes
        return classes

    def class_of(self) -> list[int]:
        out = [0] * len(self.elements)
        for c, members in enumerate(self.conjugacy_classes()):
            for i in members:
                out[i] = c
        return out

    def subgroup_generated(self, idxs) -> frozenset[int]:
        gens = [i for i in idxs if i != 0]
        members = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mult(x, g)
                    if y not in members:
                        members.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(members)

    def is_normal(self, members: frozenset[int]) -> bool:
        return all(self.conjugate(x, g) in members
                   for x in members for g in self.generators)

    def minimal_normal_subgroups(self) -> list[frozenset[int]]:
        """Minimal elements among the normal closures of nontrivial classes.

        Every minimal normal subgroup is the closure of any of its classes,
        so this brute-force list is complete.
        """
        closures = set()
        for members in self.conjugacy_classes()[1:]:
            closures.add(self.subgroup_generated(members))
        minimal = []
        for h in closures:
            if not any(other < h for other in closures):
                minimal.append(h)
        return sorted(minimal, key=lambda h: (len(h), sorted(h)))

    def derived_subgroup(self, members: frozenset[int] | None = None) -> frozenset[int]:
        """Commutator subgroup of the given subgroup (whole group if None)."""
        pool = sorted(members) if members is not None else range(len(self.elements))
        commutators = set()
        for x in pool:
            for y in pool:
                c = self.mult(self.mult(self.inverse(x), self.inverse(y)),
                              self.mult(x, y))
                commutators.add(c)
        return self.subgroup_generated(commutators)

    def derived_series(self) -> list[frozenset[int]]:
        series = [frozenset(range(len(self.elements)))]
        while True:
            nxt = self.derived_subgroup(series[-1])
            if nxt == series[-1]:
                return series
            series.append(nxt)

    def is_solvable(self) -> bool:
        return self.derived_series()[-1] == frozenset({0})


def close_group(generators, limit: int = MAX_ELEMENTS) -> GroupTable:
    """Breadth-first closure of a generating set under multiplication.

    All generators must share one representation kind; matrix generators
    must be invertible.  Raises ResourceLimitError when the closure exceeds
    the element limit.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    first = gens[0]
    for g in gens[1:]:
        if not first.same_kind(g):
            raise ValueError("generators must share one representation kind")
    for g in gens:
        if hasattr(g, "is_invertible") and not g.is_invertible():
            raise ValueError(f"singular matrix generator {g!r}")
        if hasattr(g, "mat") and not g.mat.is_invertible():
            raise ValueError(f"singular matrix generator {g!r}")
    identity = first.identity_like()
    elements = [identity]
    index = {identity: 0}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in index:
                    if len(elements) >= limit:
                        raise ResourceLimitError(
                            f"closure exceeded {limit} elements")
                    index[y] = len(elements)
                    elements.append(y)
                    nxt.append(y)
        frontier = nxt
    gen_idx = sorted({index[g] for g in gens})
    return GroupTable(elements, gen_idx)
