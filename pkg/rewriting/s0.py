#!/usr/bin/env python3
"""
Base-group rewriting steps for ExtWords
Replace a finite window of a word by its normal form
"""

import logging

from exponents.exponent import Interval, ONE
from groups.base_group import BaseGroupOracle, letters_of
from utils.errors import DomainError
from words.canonical import concat
from words.word import Word, factor, word

logger = logging.getLogger(__name__)


def apply_S0(w: Word, window: Interval, oracle: BaseGroupOracle) -> Word:
    """Normalize the finite factor w[window] and re-canonicalize around it"""
    if window.is_empty:
        return w
    if not window.length().is_finite():
        raise DomainError(f"window {window} is not finite")
    if window.lo < ONE or window.hi > w.length:
        raise DomainError(f"window {window} outside [1, {w.length}]")
    middle = letters_of(factor(w, window.lo, window.hi))
    reduced = oracle.normal_form(middle)
    if reduced == middle:
        return w
    logger.debug(f"S0 step on {window}: {len(middle)} -> {len(reduced)} letters")
    return concat(factor(w, ONE, window.lo - ONE), word(reduced), factor(w, window.hi + ONE, w.length))
