#!/usr/bin/env python3
"""
Degree reduction for ExtWords
Word problem, reduced degree and order search in Ext(A,G)
"""

import logging
from typing import List, Optional, Tuple

from exponents.exponent import BOTTOM, ZERO, ONE
from extension.element import ExtElement
from extension.preprocess import preprocess
from extension.table import GeneratorTable
from groups.base_group import BaseGroupOracle, letters_of
from utils.errors import CapExceededError, DomainError, OracleError
from utils.limits import LIMITS
from words.canonical import concat
from words.compare import equal
from words.word import Word, EMPTY, factor, involute, word

logger = logging.getLogger(__name__)

Factors = List[Word]


def _involute_all(factors: Factors) -> Factors:
    return [involute(f) for f in reversed(factors)]


def _literal_power(u: Tuple[str, ...], v: Tuple[str, ...], oracle: BaseGroupOracle) -> Optional[int]:
    """k with u spelled as v^k letter for letter"""
    if not v or len(u) % len(v):
        return None
    k = len(u) // len(v)
    if u == v * k:
        return k
    if u == oracle.involute_letters(v) * k:
        return -k
    return None


def _pump_order(limit: int):
    for m in range(1, limit + 1):
        yield m
        yield -m


class DegreeReducer:
    """Cancels inverse pairs of top-degree generators until none is left"""

    def __init__(self, table: GeneratorTable, oracle: BaseGroupOracle, max_steps: int = None):
        self.table = table
        self.oracle = oracle
        self.max_steps = max_steps or LIMITS.max_steps
        self.steps = 0

    def _tick(self):
        self.steps += 1
        if self.steps > self.max_steps:
            raise CapExceededError(f"reduction exceeds max_steps={self.max_steps}", self.max_steps)

    def _tidy(self, factors: Factors) -> Factors:
        """Merge each run of finite factors into its normal form"""
        out: Factors = []
        run: List[str] = []
        for f in factors:
            if f.is_finite:
                run.extend(letters_of(f))
                continue
            self._flush(run, out)
            run = []
            out.append(f)
        self._flush(run, out)
        return out

    def _flush(self, run: List[str], out: Factors):
        nf = self.oracle.normal_form(run) if run else ()
        if nf:
            out.append(word(nf))

    def reduce(self, factors: Factors) -> Tuple[float, Factors]:
        """(reduced degree, remaining factors)"""
        factors = self._tidy([f for f in factors if not f.is_empty])
        while True:
            self._tick()
            if not factors:
                return BOTTOM, []
            d = max(f.degree for f in factors)
            if d <= 0:
                return 0, factors
            top = [i for i, f in enumerate(factors) if f.degree == d]
            replaced = None
            for i, j in zip(top, top[1:]):
                if not equal(involute(factors[i]), factors[j]):
                    continue
                middle = self.resolve_pair(factors[i], factors[i + 1:j])
                if middle is not None:
                    replaced = factors[:i] + middle + factors[j + 1:]
                    break
                logger.debug(f"pair at {i},{j} of degree {d} does not cancel")
            if replaced is None:
                return d, factors
            factors = self._tidy(replaced)

    def resolve_pair(self, g: Word, middle: Factors) -> Optional[Factors]:
        """Factors equal to g h g^-1 of degree below deg g, or None"""
        d = g.degree
        prefix: Factors = []
        current = middle
        while True:
            self._tick()
            e, h = self.reduce(current)
            if e == BOTTOM:
                return prefix
            if e >= d:
                return None
            if e <= 0:
                tail = self._finite_middle(g, h)
                return None if tail is None else prefix + tail
            boundary = self.table.boundary(g, e)
            if boundary is None:
                return None
            _, head, suffix = boundary
            head_f = self.table.factorize(head)
            suffix_f = self.table.factorize(suffix)
            size = abs(sum((f.length for f in h), ZERO).coefficient(e))
            for m in _pump_order(max(size, 1)):
                pumped = suffix_f * m if m > 0 else _involute_all(suffix_f) * -m
                e2, rest = self.reduce(pumped + h)
                if e2 < e:
                    prefix = prefix + (_involute_all(head_f) * m if m > 0 else head_f * -m)
                    current = rest
                    break
            else:
                return None

    def _finite_middle(self, g: Word, h: Factors) -> Optional[Factors]:
        """g h g^-1 with h finite: h must be a power of the shortest finite boundary"""
        rho = self.table.period_row(g, 0)
        if rho is None:
            return None
        suffix = letters_of(factor(g, g.length - rho + ONE, g.length))
        letters = tuple(x for f in h for x in letters_of(f))
        target = self.oracle.involute_letters(letters)
        m = self.oracle.cyclic_member(target, suffix)
        if m is None:
            if _literal_power(target, suffix, self.oracle) is not None:
                raise OracleError(f"cyclic_member missed {target} as a power of {suffix}")
            return None
        power = suffix * m if m >= 0 else self.oracle.involute_letters(suffix) * -m
        if not self.oracle.equal(target, power):
            raise OracleError(f"cyclic_member gave {target} = {suffix}^{m}, which does not hold")
        head = factor(g, ONE, rho * abs(m))
        return [involute(head) if m >= 0 else head]


def table_for(x: ExtElement, oracle: BaseGroupOracle, table: GeneratorTable = None) -> GeneratorTable:
    return table if table is not None else preprocess(x.factors, oracle)


def reduced_degree(x: ExtElement, oracle: BaseGroupOracle,
                   table: GeneratorTable = None) -> Tuple[float, Word]:
    """rdeg(x) and a reduced representative"""
    if oracle.is_finite_group:
        if any(not f.is_finite for f in x.factors):
            raise DomainError("a finite base group has no infinite G-reduced words")
        nf = oracle.normal_form(tuple(a for f in x.factors for a in letters_of(f)))
        return (0, word(nf)) if nf else (BOTTOM, EMPTY)
    table = table_for(x, oracle, table)
    factors = [piece for f in x.factors for piece in table.factorize(f)]
    degree, rest = DegreeReducer(table, oracle).reduce(factors)
    logger.debug(f"rdeg = {degree} for {x}")
    return degree, concat(*rest)


def is_trivial(x: ExtElement, oracle: BaseGroupOracle, table: GeneratorTable = None) -> bool:
    degree, _ = reduced_degree(x, oracle, table)
    return degree == BOTTOM


def ext_equal(x: ExtElement, y: ExtElement, oracle: BaseGroupOracle, table: GeneratorTable = None) -> bool:
    z = x * y.inverse()
    return is_trivial(z, oracle, table)


def in_filtration(x: ExtElement, d: int, oracle: BaseGroupOracle, table: GeneratorTable = None) -> bool:
    """x lies in the subgroup of elements of reduced degree at most d"""
    degree, _ = reduced_degree(x, oracle, table)
    return degree <= d


def order_probe(x: ExtElement, max_n: int, oracle: BaseGroupOracle,
                table: GeneratorTable = None) -> Optional[int]:
    """Smallest n in [1, max_n] with x^n = 1"""
    if max_n < 1:
        raise DomainError(f"order search needs max_n >= 1, got {max_n}")
    table = None if oracle.is_finite_group else table_for(x, oracle, table)
    for n in range(1, max_n + 1):
        if is_trivial(x ** n, oracle, table):
            logger.info(f"order of {x} is {n}")
            return n
    return None
