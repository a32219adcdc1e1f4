#!/usr/bin/env python3
"""
Free abelian oracles for ExtWords
Z^k on letters a, b, c, ... and the infinite cyclic group
"""

import logging
import string
from collections import Counter
from typing import Dict, Any, List, Optional, Sequence

from groups.base_group import BaseGroupOracle, Letters
from utils.errors import InvalidInputError
from words.word import invert_letter, INVERSE_MARK

logger = logging.getLogger(__name__)


class FreeAbelian(BaseGroupOracle):
    """Z^rank; normal form lists positive letters ascending, then inverse letters descending"""

    def __init__(self, rank: int, config: Dict[str, Any] = None, name: str = None):
        if not 1 <= rank <= len(string.ascii_lowercase):
            raise InvalidInputError(f"abelian rank must be in 1..26, got {rank}")
        super().__init__(name or f"abelian:{rank}", list(string.ascii_lowercase[:rank]), config)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def vector(self, letters: Sequence[str]) -> List[int]:
        self.check_letters(letters)
        counts = Counter()
        for x in letters:
            if x.startswith(INVERSE_MARK):
                counts[invert_letter(x)] -= 1
            else:
                counts[x] += 1
        return [counts[g] for g in self.generators]

    def from_vector(self, vector: Sequence[int]) -> Letters:
        positive: List[str] = []
        negative: List[str] = []
        for g, n in zip(self.generators, vector):
            if n > 0:
                positive.extend([g] * n)
        for g, n in reversed(list(zip(self.generators, vector))):
            if n < 0:
                negative.extend([invert_letter(g)] * -n)
        return tuple(positive + negative)

    def normal_form(self, letters: Sequence[str]) -> Letters:
        return self.from_vector(self.vector(letters))

    def cyclic_member(self, u: Sequence[str], v: Sequence[str]) -> Optional[int]:
        uv = self.vector(u)
        vv = self.vector(v)
        pivot = next((i for i, n in enumerate(vv) if n), None)
        if pivot is None:
            return 0 if not any(uv) else None
        if uv[pivot] % vv[pivot]:
            return None
        m = uv[pivot] // vv[pivot]
        if any(a != m * b for a, b in zip(uv, vv)):
            return None
        return m

    def geodesic_length(self, letters: Sequence[str]) -> Optional[int]:
        return sum(abs(n) for n in self.vector(letters))

    @property
    def has_geodesics(self) -> bool:
        return True

    def is_local_geodesic_window(self, letters: Sequence[str]) -> bool:
        # a factor is shorter than its length only if it holds a letter and its inverse
        self.check_letters(letters)
        present = set(letters)
        return not any(invert_letter(x) in present for x in present)


class CyclicZ(FreeAbelian):
    """The infinite cyclic group on the letter a"""

    def __init__(self, config: Dict[str, Any] = None):
        super().__init__(1, config, name='cyclic')
