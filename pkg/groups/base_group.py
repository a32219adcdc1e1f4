#!/usr/bin/env python3
"""
Base group oracle for ExtWords
Abstract interface for the group G that the extension is built over
"""

import logging
from abc import ABC, abstractmethod
from typing import Dict, Any, List, Optional, Sequence, Tuple

from utils.errors import ForeignLetterError, UnsupportedGroupError, InvalidInputError
from words.word import Word, invert_letter, expand_letters, word

logger = logging.getLogger(__name__)

Letters = Tuple[str, ...]


def letters_of(w: Word) -> Letters:
    """Letter tuple of a finite word"""
    if w.is_empty:
        return ()
    if not w.is_finite:
        raise InvalidInputError(f"expected a finite word, got length {w.length}")
    return expand_letters(w)


class BaseGroupOracle(ABC):
    """Normal forms, triviality and cyclic membership for the base group"""

    def __init__(self, name: str, generators: Sequence[str], config: Dict[str, Any] = None):
        self.name = name
        self.config = config or {}
        self.generators: List[str] = list(generators)
        self.alphabet: List[str] = []
        for g in self.generators:
            self.alphabet.append(g)
            inverse = invert_letter(g)
            if inverse not in self.alphabet:
                self.alphabet.append(inverse)
        self._alphabet_set = set(self.alphabet)
        logger.info(f"Initialized base group: {self.name}")

    is_finite_group = False

    @property
    def spec(self) -> str:
        return self.name

    def check_letters(self, letters: Sequence[str]):
        for x in letters:
            if x not in self._alphabet_set:
                raise ForeignLetterError(f"letter {x!r} not in the alphabet of {self.name}")

    def involute_letters(self, letters: Sequence[str]) -> Letters:
        return tuple(invert_letter(x) for x in reversed(letters))

    @abstractmethod
    def normal_form(self, letters: Sequence[str]) -> Letters:
        """Confluent normal form of a finite word"""
        pass

    @abstractmethod
    def cyclic_member(self, u: Sequence[str], v: Sequence[str]) -> Optional[int]:
        """m with u = v^m in G, or None"""
        pass

    def is_trivial(self, letters: Sequence[str]) -> bool:
        return not self.normal_form(letters)

    def equal(self, u: Sequence[str], v: Sequence[str]) -> bool:
        return self.is_trivial(tuple(u) + self.involute_letters(v))

    def geodesic_length(self, letters: Sequence[str]) -> Optional[int]:
        """Length of a shortest representative, None when unsupported"""
        return None

    @property
    def has_geodesics(self) -> bool:
        return False

    def is_local_geodesic_window(self, letters: Sequence[str]) -> bool:
        """Every factor is as short as its geodesic representative"""
        if not self.has_geodesics:
            raise UnsupportedGroupError(f"{self.name} has no geodesic length")
        letters = tuple(letters)
        n = len(letters)
        for i in range(n):
            for j in range(i + 1, n + 1):
                if self.geodesic_length(letters[i:j]) < j - i:
                    return False
        return True

    def normal_word(self, w: Word) -> Word:
        """normal_form lifted to finite words"""
        return word(self.normal_form(letters_of(w)))

    def seed_pattern(self) -> Letters:
        """A cyclically reduced pattern with no trivial factor in any power"""
        return (self.generators[0],)

    def to_dict(self) -> Dict[str, Any]:
        return {'group': self.spec, 'alphabet': self.alphabet}
