#!/usr/bin/env python3
"""
Elements of Ext(A,G) for ExtWords
Finite products of G-reduced infinite words, kept as factor lists
"""

import logging
from typing import Iterable, List

from exponents.exponent import BOTTOM
from words.canonical import concat
from words.word import Word, involute

logger = logging.getLogger(__name__)


class ExtElement:
    """x = u_1 ... u_k with every u_i G-reduced"""

    __slots__ = ('factors',)

    def __init__(self, factors: Iterable[Word] = ()):
        self.factors: List[Word] = [f for f in factors if not f.is_empty]

    @classmethod
    def of(cls, *words: Word) -> 'ExtElement':
        return cls(words)

    @property
    def word(self) -> Word:
        """Concatenation of the factors; not reduced"""
        return concat(*self.factors)

    @property
    def degree(self):
        """Top degree among the factors, before any reduction"""
        if not self.factors:
            return BOTTOM
        return max(f.degree for f in self.factors)

    def inverse(self) -> 'ExtElement':
        return ExtElement(involute(f) for f in reversed(self.factors))

    def __mul__(self, other: 'ExtElement') -> 'ExtElement':
        return ExtElement(self.factors + other.factors)

    def __pow__(self, n: int) -> 'ExtElement':
        base = self if n >= 0 else self.inverse()
        return ExtElement(base.factors * abs(n))

    def conjugate(self, by: 'ExtElement') -> 'ExtElement':
        """by^-1 x by"""
        return by.inverse() * self * by

    def commutator(self, other: 'ExtElement') -> 'ExtElement':
        """x y x^-1 y^-1"""
        return self * other * self.inverse() * other.inverse()

    def __repr__(self):
        return f"ExtElement({' * '.join(str(f) for f in self.factors) or '1'})"
