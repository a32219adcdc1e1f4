#!/usr/bin/env python3
"""
Torsion witnesses for ExtWords
Search for a conjugate of an element that equals its own involute
"""

import logging
from collections import deque
from typing import Optional

from extension.element import ExtElement
from extension.reduce import DegreeReducer, table_for
from extension.table import GeneratorTable
from groups.base_group import BaseGroupOracle
from utils.limits import LIMITS
from words.canonical import concat
from words.compare import equal
from words.word import Word, EMPTY, involute

logger = logging.getLogger(__name__)


def symmetric_witness(x: ExtElement, oracle: BaseGroupOracle, table: GeneratorTable = None,
                      cap: int = None) -> Optional[Word]:
    """A reduced conjugate y of x with y = y~, or None when the bounded search fails"""
    cap = cap or LIMITS.window
    table = table_for(x, oracle, table)
    reducer = DegreeReducer(table, oracle)
    factors = [piece for f in x.factors for piece in table.factorize(f)]
    degree, start = reducer.reduce(factors)
    if not start:
        return EMPTY
    queue = deque([start])
    seen = set()
    while queue and len(seen) < cap:
        current = queue.popleft()
        y = concat(*current)
        if y in seen:
            continue
        seen.add(y)
        if equal(y, involute(y)):
            logger.info(f"symmetric conjugate found after {len(seen)} candidates")
            return y
        for moved in (current[1:] + current[:1], current[-1:] + current[:-1]):
            d, reduced = reducer.reduce(moved)
            if reduced and d <= degree:
                queue.append(reduced)
    logger.debug(f"no symmetric conjugate within {cap} candidates")
    return None
