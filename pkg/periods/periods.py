#!/usr/bin/env python3
"""
Periods for ExtWords
Period tests, stabilizers of ray patterns, proper-period lattices and boundary words
"""

import logging
from functools import lru_cache
from typing import List, Optional, Tuple

from exponents.exponent import Exponent, ZERO, ONE
from periods.lattice import PeriodLattice, intersect_all
from utils.errors import InvalidInputError, NotAPeriodError
from words.compare import equal, left_ray_equal
from words.word import (Word, Atom, EMPTY, flat_blocks, expand_letters, factor, rotate, ray_prefix,
                        ray_suffix, concat_raw)

logger = logging.getLogger(__name__)


class Line:
    """One level-k class of a word: optional left ray, finite-degree middle, optional right ray"""

    __slots__ = ('left', 'middle', 'right', 'level')

    def __init__(self, left: Optional[Word], middle: Word, right: Optional[Word], level: int):
        self.left = left
        self.middle = middle
        self.right = right
        self.level = level

    def __repr__(self):
        return f"Line({self.left}, {self.middle}, {self.right}, level={self.level})"


def components(w: Word, level: int) -> List[Line]:
    """Split w at its atoms of the given level"""
    lines = []
    left = None
    middle = []
    for block in flat_blocks(w):
        if isinstance(block, Atom) and block.level == level:
            lines.append(Line(left, Word(middle), block.rho, level))
            left = block.lam
            middle = []
        else:
            middle.append(block)
    lines.append(Line(left, Word(middle), None, level))
    return lines


def is_pure(line: Line) -> bool:
    """The line is one periodic bi-infinite ray with no defect"""
    middle = line.middle
    if line.right is not None:
        if not equal(middle, ray_suffix(line.right, middle.length)):
            return False
        if line.left is None:
            return True
        return left_ray_equal(line.left, rotate(line.right, -middle.length))
    if line.left is not None:
        return equal(middle, ray_prefix(line.left, middle.length))
    return False


def sublines(line: Line) -> List[Line]:
    """Classes one level down, dropping the artificial outer ones"""
    parts = []
    if line.left is not None:
        parts += [line.left, line.left]
    parts.append(line.middle)
    if line.right is not None:
        parts += [line.right, line.right]
    comps = components(concat_raw(*parts), line.level - 1)
    if line.left is not None:
        comps = comps[1:]
    if line.right is not None:
        comps = comps[:-1]
    return comps


def line_periods(line: Line) -> PeriodLattice:
    """Periods of degree < level of the class content"""
    if line.left is None and line.right is None:
        return PeriodLattice(line.level)
    if is_pure(line):
        return stabilizer(line.right if line.right is not None else line.left)
    if line.level <= 1:
        return PeriodLattice(line.level)
    return intersect_all((line_periods(sub) for sub in sublines(line)), line.level)


def primitive_root_length(letters) -> int:
    n = len(letters)
    for q in range(1, n + 1):
        if n % q == 0 and all(letters[i] == letters[i % q] for i in range(n)):
            return q
    return n


def _divisors(n: int) -> List[int]:
    return [a for a in range(1, n + 1) if n % a == 0]


def _solve_lower(m: int, target: Exponent, lattice: PeriodLattice, top: int) -> List[Exponent]:
    """All x of degree < top, up to the lattice, with m*x = target modulo the lattice"""
    solutions = []

    def walk(j: int, residual: Exponent, chosen: List[int]):
        if j < 0:
            if residual.is_zero():
                solutions.append(Exponent(reversed(chosen)))
            return
        c = residual.coefficient(j)
        row = lattice.row(j)
        if row is None:
            if c % m == 0:
                walk(j - 1, residual - Exponent.t_power(j, c // m) * m, chosen + [c // m])
            return
        h = row.leading
        for x in range(h):
            if (m * x - c) % h == 0:
                y = (c - m * x) // h
                walk(j - 1, residual - Exponent.t_power(j, m * x) - row * y, chosen + [x])

    walk(top - 1, target, [])
    return solutions


@lru_cache(maxsize=4096)
def stabilizer(pattern: Word) -> PeriodLattice:
    """Periods of the bi-infinite power of pattern, as a lattice of degree < deg(pattern)+1"""
    k = pattern.degree
    if k <= 0:
        letters = expand_letters(pattern)
        return PeriodLattice(1, [Exponent.of(primitive_root_length(letters))])
    inner = intersect_all((line_periods(sub) for sub in sublines(Line(pattern, EMPTY, pattern, k + 1))), k)
    n = pattern.length.leading
    lower = pattern.length.low(k)
    for a in _divisors(n)[:-1]:
        for x in _solve_lower(n // a, lower, inner, k):
            candidate = Exponent.t_power(k, a) + x
            if equal(rotate(pattern, candidate), pattern):
                logger.debug(f"stabilizer of {pattern}: top row {candidate}")
                return PeriodLattice(k + 1, inner.basis() + [candidate])
    return PeriodLattice(k + 1, inner.basis() + [pattern.length])


def minimal_period(pattern: Word) -> Exponent:
    """Shortest positive period of the same degree as the pattern"""
    lattice = stabilizer(pattern)
    return lattice.row(max(pattern.degree, 0))


def is_period(w: Word, pi: Exponent) -> bool:
    """w(beta) = w(beta + pi) wherever both sides are defined"""
    pi = Exponent.of(pi)
    if pi < ZERO:
        pi = -pi
    if pi.is_zero() or pi >= w.length:
        return True
    return equal(factor(w, ONE, w.length - pi), factor(w, ONE + pi, w.length))


@lru_cache(maxsize=4096)
def proper_period_lattice(w: Word) -> PeriodLattice:
    """Periods of w of degree < deg(w)"""
    if w.is_empty:
        raise InvalidInputError("the empty word has no period lattice")
    d = w.degree
    if d <= 0:
        return PeriodLattice(0)
    return intersect_all((line_periods(line) for line in components(w, d)), d)


def boundary_words(g: Word, beta: Exponent) -> Tuple[Word, Word]:
    """Prefix r and suffix s of length beta, with r g = g s"""
    beta = Exponent.of(beta)
    if beta < ZERO or not proper_period_lattice(g).member(beta):
        raise NotAPeriodError(f"{beta} is not a proper period of {g}")
    if beta.is_zero():
        return EMPTY, EMPTY
    r = factor(g, ONE, beta)
    s = factor(g, g.length - beta + ONE, g.length)
    if not equal(concat_raw(r, g), concat_raw(g, s)):
        raise NotAPeriodError(f"boundary relation fails for period {beta}")
    return r, s
