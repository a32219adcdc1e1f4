#!/usr/bin/env python3
"""
Cyclically reduced decompositions for ExtWords
The partial monoid of freely reduced words x = c u c~ with u cyclically reduced
"""

import logging
from typing import Optional

from exponents.exponent import ONE
from groups.base_group import BaseGroupOracle
from groups.free_group import FreeGroup
from utils.errors import UnsupportedGroupError
from words.canonical import canonical, concat
from words.compare import lcp, equal
from words.reduced import is_freely_reduced, is_cyclically_reduced
from words.word import Word, EMPTY, factor, involute

logger = logging.getLogger(__name__)


class CdrElement:
    """x together with its decomposition x = c u c~"""

    __slots__ = ('x', 'c', 'u')

    def __init__(self, x: Word, c: Word, u: Word):
        self.x = x
        self.c = c
        self.u = u

    def __eq__(self, other):
        return isinstance(other, CdrElement) and equal(self.x, other.x)

    def __hash__(self):
        return hash(self.x.length)

    def __repr__(self):
        return f"CdrElement(c={self.c}, u={self.u})"


def _check_base(oracle: BaseGroupOracle):
    if oracle is not None and not isinstance(oracle, FreeGroup):
        raise UnsupportedGroupError(f"cdr needs a free base group, got {oracle.name}")


def cdr_decompose(x: Word, oracle: BaseGroupOracle = None) -> Optional[CdrElement]:
    """The decomposition of x, or None when x is not in cdr"""
    _check_base(oracle)
    x = canonical(x)
    if x.is_empty:
        return CdrElement(x, EMPTY, EMPTY)
    if not is_freely_reduced(x):
        return None
    common = lcp(x, involute(x))
    if not common.attained:
        logger.debug(f"{x}: prefix cancellation against its involute is unbounded")
        return None
    ell = common.length
    if ell * 2 >= x.length:
        return None
    u = canonical(factor(x, ell + ONE, x.length - ell))
    if not is_cyclically_reduced(u):
        return None
    return CdrElement(x, canonical(factor(x, ONE, ell)), u)


def cdr_product(x: CdrElement, y: CdrElement, oracle: BaseGroupOracle = None) -> Optional[CdrElement]:
    """x * y = p r when x = p q, y = q~ r and p r is freely reduced"""
    _check_base(oracle)
    common = lcp(involute(x.x), y.x)
    if not common.attained:
        return None
    ell = common.length
    p = factor(x.x, ONE, x.x.length - ell)
    r = factor(y.x, ell + ONE, y.x.length)
    product = concat(p, r)
    if not is_freely_reduced(product):
        return None
    return cdr_decompose(product, oracle)
