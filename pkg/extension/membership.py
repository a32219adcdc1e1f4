#!/usr/bin/env python3
"""
Cyclic membership through commutation for ExtWords
u is a power of v exactly when u commutes with the ray pair [v v v ...)(... v v v]
"""

import logging
from typing import Sequence, Union

from constructions.builders import ray_pair, is_primitive
from extension.element import ExtElement
from extension.preprocess import preprocess
from extension.reduce import is_trivial
from groups.base_group import BaseGroupOracle
from groups.free_group import FreeGroup
from utils.errors import InvalidInputError
from words.reduced import is_cyclically_reduced
from words.word import Word, involute, word

logger = logging.getLogger(__name__)


def _finite(w: Union[Word, Sequence[str], str]) -> Word:
    return w if isinstance(w, Word) else word(w)


def membership_via_commutation(u, v, oracle: BaseGroupOracle) -> bool:
    """u in <v>, decided by the word problem for u V u~ V~"""
    u, v = _finite(u), _finite(v)
    if not u.is_finite or not v.is_finite:
        raise InvalidInputError("commutation membership takes finite words")
    if v.is_empty:
        raise InvalidInputError("v must be nonempty")
    u = oracle.normal_word(u)
    if isinstance(oracle, FreeGroup) and (not is_cyclically_reduced(v) or not is_primitive(v)):
        raise InvalidInputError(f"{v} must be cyclically reduced and primitive")
    big = ray_pair(v, v)
    table = preprocess([big, u], oracle)
    commutator = ExtElement([u, big, involute(u), involute(big)])
    result = is_trivial(commutator, oracle, table)
    logger.debug(f"{u} in <{v}>: {result}")
    return result
