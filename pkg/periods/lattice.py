#!/usr/bin/env python3
"""
Period lattices for ExtWords
Subgroups of A below a degree bound, kept in Hermite normal form
"""

import logging
from typing import Dict, Iterable, List, Optional

from sympy.core.intfunc import igcdex

from exponents.exponent import Exponent
from utils.errors import DegreeBoundError

logger = logging.getLogger(__name__)


class PeriodLattice:
    """At most one basis row per degree, positive pivots, reduced off-diagonal entries"""

    def __init__(self, bound: int, generators: Iterable[Exponent] = ()):
        self.bound = max(int(bound), 0)
        self.rows: Dict[int, Exponent] = {}
        for vector in generators:
            self._insert(Exponent.of(vector))
        self._reduce()

    def _insert(self, vector: Exponent):
        while not vector.is_zero():
            d = vector.degree
            if d >= self.bound:
                raise DegreeBoundError(f"lattice vector {vector} has degree >= {self.bound}")
            row = self.rows.get(d)
            if row is None:
                self.rows[d] = vector if vector.leading > 0 else -vector
                return
            a, b = row.leading, vector.leading
            x, y, g = igcdex(a, b)
            g = int(g)
            self.rows[d] = row * int(x) + vector * int(y)
            vector = row * (b // g) - vector * (a // g)
        return

    def _reduce(self):
        for d in sorted(self.rows):
            row = self.rows[d]
            if row.leading < 0:
                row = -row
            for i in range(d - 1, -1, -1):
                pivot = self.rows.get(i)
                if pivot is None:
                    continue
                q = row.coefficient(i) // pivot.leading
                if q:
                    row = row - pivot * q
            self.rows[d] = row

    def basis(self) -> List[Exponent]:
        """HNF rows by ascending degree"""
        return [self.rows[d] for d in sorted(self.rows)]

    def row(self, degree: int) -> Optional[Exponent]:
        return self.rows.get(degree)

    @property
    def is_trivial(self) -> bool:
        return not self.rows

    def member(self, pi: Exponent) -> bool:
        """Back-substitution against the HNF rows"""
        pi = Exponent.of(pi)
        if pi.degree >= self.bound:
            return False
        while not pi.is_zero():
            row = self.rows.get(pi.degree)
            if row is None or pi.leading % row.leading:
                return False
            pi = pi - row * (pi.leading // row.leading)
        return True

    def contains(self, other: 'PeriodLattice') -> bool:
        return all(self.member(v) for v in other.basis())

    def with_bound(self, bound: int) -> 'PeriodLattice':
        return PeriodLattice(bound, self.basis())

    def intersect(self, other: 'PeriodLattice') -> 'PeriodLattice':
        """Rows of the stacked system [b, b] / [0, c] with zero upper half"""
        width = max(self.bound, other.bound)
        stacked = []
        for b in self.basis():
            low = [b.coefficient(i) for i in range(width)]
            stacked.append(Exponent(low + low))
        for c in other.basis():
            stacked.append(Exponent([0] * width + [c.coefficient(i) for i in range(width)]))
        combined = PeriodLattice(2 * width, stacked)
        meet = [row for d, row in combined.rows.items() if d < width]
        return PeriodLattice(min(self.bound, other.bound), meet)

    def __eq__(self, other):
        return isinstance(other, PeriodLattice) and self.basis() == other.basis()

    def __hash__(self):
        return hash(tuple(self.basis()))

    def __repr__(self):
        return f"PeriodLattice(<{', '.join(str(r) for r in self.basis())}>, bound={self.bound})"

    def to_json(self) -> List[List[int]]:
        return [list(r.coeffs) for r in self.basis()]

    @classmethod
    def from_json(cls, bound: int, rows: List[List[int]]) -> 'PeriodLattice':
        return cls(bound, [Exponent(r) for r in rows])


def trivial_lattice(bound: int = 0) -> PeriodLattice:
    return PeriodLattice(bound)


def lattice_member(lattice: PeriodLattice, pi: Exponent) -> bool:
    return lattice.member(pi)


def lattice_intersect(first: PeriodLattice, second: PeriodLattice) -> PeriodLattice:
    return first.intersect(second)


def intersect_all(lattices: Iterable[PeriodLattice], bound: int) -> PeriodLattice:
    result = None
    for lattice in lattices:
        result = lattice if result is None else result.intersect(lattice)
    if result is None:
        return PeriodLattice(bound)
    return result.with_bound(bound)
