#!/usr/bin/env python3
"""
Finite group oracle for ExtWords
Multiplication-table groups loaded from JSON
"""

import json
import logging
from collections import deque
from typing import Dict, Any, List, Optional, Sequence

from groups.base_group import BaseGroupOracle, Letters
from utils.errors import InvalidInputError
from words.word import invert_letter, INVERSE_MARK

logger = logging.getLogger(__name__)


class FiniteTable(BaseGroupOracle):
    """Group given by elements, identity, a product table and letter images"""

    is_finite_group = True

    def __init__(self, data: Dict[str, Any], source: str = 'inline', config: Dict[str, Any] = None):
        try:
            self.elements: List[str] = list(data['elements'])
            self.identity: str = data['identity']
            self.table: Dict[str, str] = dict(data['table'])
            images: Dict[str, str] = dict(data['generators'])
        except (KeyError, TypeError) as e:
            raise InvalidInputError(f"malformed group table {source}: {e}")
        positive = [x for x in images if not x.startswith(INVERSE_MARK)]
        for x in positive:
            if invert_letter(x) not in images:
                if self.multiply(images[x], images[x]) != self.identity:
                    raise InvalidInputError(f"letter {x!r} has no inverse letter and is not an involution")
                # order-2 letter: its formal inverse names the same element
                images[invert_letter(x)] = images[x]
        self.images = images
        super().__init__(f"table:{source}", positive, config)
        self.alphabet = list(images)
        self._alphabet_set = set(self.alphabet)
        self._words = self._shortest_words()
        logger.warning(f"Base group {self.name} is finite: Ext(A,G) degenerates to G")

    @classmethod
    def from_file(cls, path: str, config: Dict[str, Any] = None) -> 'FiniteTable':
        try:
            with open(path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except FileNotFoundError:
            raise InvalidInputError(f"group table file not found: {path}")
        except json.JSONDecodeError as e:
            raise InvalidInputError(f"invalid JSON in group table {path}: {e}")
        return cls(data, source=path, config=config)

    def multiply(self, x: str, y: str) -> str:
        key = f"{x},{y}"
        if key not in self.table:
            raise InvalidInputError(f"group table has no entry for {key}")
        return self.table[key]

    def evaluate(self, letters: Sequence[str]) -> str:
        self.check_letters(letters)
        element = self.identity
        for x in letters:
            element = self.multiply(element, self.images[x])
        return element

    def _shortest_words(self) -> Dict[str, Letters]:
        """Breadth-first words; inverse elements get the involuted word"""
        words: Dict[str, Letters] = {self.identity: ()}
        queue = deque([self.identity])
        while queue:
            element = queue.popleft()
            for x in sorted(self.alphabet):
                nxt = self.multiply(element, self.images[x])
                if nxt in words:
                    continue
                candidate = words[element] + (x,)
                words[nxt] = candidate
                inverse = self.evaluate(self.involute_letters(candidate))
                if inverse not in words:
                    words[inverse] = self.involute_letters(candidate)
                    queue.append(inverse)
                elif inverse == nxt and self.involute_letters(candidate) != candidate:
                    logger.warning(f"no involution-symmetric normal word for order-2 element {nxt}")
                queue.append(nxt)
        return words

    def normal_form(self, letters: Sequence[str]) -> Letters:
        return self._words[self.evaluate(letters)]

    def cyclic_member(self, u: Sequence[str], v: Sequence[str]) -> Optional[int]:
        target = self.evaluate(u)
        step = self.evaluate(v)
        element = self.identity
        for m in range(len(self.elements)):
            if element == target:
                return m
            element = self.multiply(element, step)
        return None

    def geodesic_length(self, letters: Sequence[str]) -> Optional[int]:
        return len(self.normal_form(letters))

    @property
    def has_geodesics(self) -> bool:
        return True
