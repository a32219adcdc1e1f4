#!/usr/bin/env python3
"""
Base group factory for ExtWords
Builds oracles from specifiers such as free:a,b or abelian:2
"""

import logging
from typing import Dict, Any

from groups.abelian import FreeAbelian, CyclicZ
from groups.base_group import BaseGroupOracle
from groups.finite_table import FiniteTable
from groups.free_group import FreeGroup
from utils.errors import InvalidInputError

logger = logging.getLogger(__name__)


def parse_group_spec(spec: str, config: Dict[str, Any] = None) -> BaseGroupOracle:
    """free:a,b[,c...] | abelian:k | cyclic | table:FILE"""
    spec = spec.strip()
    kind, _, arg = spec.partition(':')
    if kind == 'free':
        names = [n.strip() for n in arg.split(',') if n.strip()]
        if not names or any(n.startswith('~') or not n.isidentifier() for n in names):
            raise InvalidInputError(f"bad free group generators in {spec!r}")
        return FreeGroup(names, config)
    if kind == 'abelian':
        try:
            rank = int(arg)
        except ValueError:
            raise InvalidInputError(f"bad abelian rank in {spec!r}")
        return FreeAbelian(rank, config)
    if kind == 'cyclic' and not arg:
        return CyclicZ(config)
    if kind == 'table' and arg:
        return FiniteTable.from_file(arg, config)
    raise InvalidInputError(f"unknown group specifier {spec!r}")
