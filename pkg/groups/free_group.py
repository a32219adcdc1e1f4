#!/usr/bin/env python3
"""
Free group oracle for ExtWords
Free reduction through sympy's free group elements
"""

import logging
from typing import Dict, Any, List, Optional, Sequence

from sympy.combinatorics.free_groups import free_group

from groups.base_group import BaseGroupOracle, Letters
from periods.periods import primitive_root_length
from words.word import invert_letter

logger = logging.getLogger(__name__)


class FreeGroup(BaseGroupOracle):
    """F(Sigma) on the given generator names"""

    def __init__(self, generators: Sequence[str], config: Dict[str, Any] = None):
        super().__init__(f"free:{','.join(generators)}", generators, config)
        group, *gens = free_group(','.join(self.generators))
        self._group = group
        self._symbol = dict(zip(self.generators, gens))
        self._name = {str(g): name for name, g in self._symbol.items()}

    @property
    def rank(self) -> int:
        return len(self.generators)

    def _element(self, letters: Sequence[str]):
        element = self._group.identity
        for x in letters:
            if x in self._symbol:
                element = element * self._symbol[x]
            else:
                element = element * self._symbol[invert_letter(x)] ** -1
        return element

    def _to_letters(self, element) -> Letters:
        out: List[str] = []
        for symbol, exp in element.array_form:
            name = self._name[str(symbol)]
            letter = name if exp > 0 else invert_letter(name)
            out.extend([letter] * abs(exp))
        return tuple(out)

    def normal_form(self, letters: Sequence[str]) -> Letters:
        self.check_letters(letters)
        return self._to_letters(self._element(letters))

    def cyclic_member(self, u: Sequence[str], v: Sequence[str]) -> Optional[int]:
        u = self.normal_form(u)
        v = list(self.normal_form(v))
        if not v:
            return 0 if not u else None
        # v = c v0 c^-1 with v0 cyclically reduced
        conjugator: List[str] = []
        while len(v) >= 2 and v[0] == invert_letter(v[-1]):
            conjugator.append(v[0])
            v = v[1:-1]
        c = tuple(conjugator)
        inner = self.normal_form(self.involute_letters(c) + tuple(u) + c)
        if not inner:
            return 0
        q = primitive_root_length(v)
        root = tuple(v[:q])
        k = len(v) // q
        reps, rest = divmod(len(inner), q)
        if rest:
            return None
        if inner == root * reps:
            j = reps
        elif inner == self.involute_letters(root) * reps:
            j = -reps
        else:
            return None
        if j % k:
            return None
        return j // k

    def geodesic_length(self, letters: Sequence[str]) -> Optional[int]:
        return len(self.normal_form(letters))

    @property
    def has_geodesics(self) -> bool:
        return True

    def is_local_geodesic_window(self, letters: Sequence[str]) -> bool:
        # reduced words are geodesic in a free group
        return len(self.normal_form(letters)) == len(letters)

    def seed_pattern(self) -> Letters:
        return tuple(self.generators[:2])
