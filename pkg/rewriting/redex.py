#!/usr/bin/env python3
"""
Redex search for ExtWords
Inverse pairs of generators that cancel down to lower degree
"""

import logging
from typing import Iterator, List, Optional

from extension.reduce import DegreeReducer
from extension.table import GeneratorTable
from groups.base_group import BaseGroupOracle
from words.canonical import concat
from words.compare import equal
from words.word import Word, involute

logger = logging.getLogger(__name__)


class Redex:
    """Factors i..j form g h g~ with a lower-degree replacement"""

    __slots__ = ('i', 'j', 'u', 'v', 'level', 'replacement')

    def __init__(self, i: int, j: int, u: Word, v: Word, level: int, replacement: List[Word]):
        self.i = i
        self.j = j
        self.u = u
        self.v = v
        self.level = level
        self.replacement = replacement

    def apply(self, factors: List[Word]) -> List[Word]:
        return factors[:self.i] + self.replacement + factors[self.j + 1:]

    def __repr__(self):
        return f"Redex({self.i}..{self.j}, level={self.level})"


def big_redexes(factors: List[Word], reducer: DegreeReducer) -> Iterator[Redex]:
    """Every cancelling pair whose middle has strictly lower degree, top degrees first"""
    levels = sorted({f.degree for f in factors if f.degree >= 1}, reverse=True)
    for e in levels:
        marks = [i for i, f in enumerate(factors) if f.degree >= e]
        for i, j in zip(marks, marks[1:]):
            if factors[i].degree != e or factors[j].degree != e:
                continue
            if not equal(involute(factors[i]), factors[j]):
                continue
            middle = factors[i + 1:j]
            replacement = reducer.resolve_pair(factors[i], middle)
            if replacement is None:
                continue
            yield Redex(i, j, factors[i], concat(*middle), e, replacement)


def find_big_redex(factors: List[Word], table: GeneratorTable, oracle: BaseGroupOracle) -> Optional[Redex]:
    """The first cancelling pair, or None when the product is degree-reduced"""
    reducer = DegreeReducer(table, oracle)
    return next(big_redexes(factors, reducer), None)
