#!/usr/bin/env python3
"""
Generator table for ExtWords
Preprocessed generators with period bases, boundary words and derivations
"""

import json
import logging
from typing import Dict, Any, Iterable, List, Optional, Tuple

from exponents.exponent import Exponent, ONE
from groups.base_group import BaseGroupOracle
from periods.lattice import PeriodLattice
from periods.periods import proper_period_lattice
from utils.errors import InvalidInputError
from words.canonical import canonical
from words.codec import word_to_json, word_from_json
from words.word import Word, expand_letters, factor, word

logger = logging.getLogger(__name__)


class GeneratorTable:
    """Finite generating set closed under involution, with per-generator period data"""

    def __init__(self,
                 oracle: BaseGroupOracle,
                 generators: Iterable[Word],
                 derivations: Dict[Word, Tuple[Word, ...]] = None,
                 inputs: Iterable[Word] = ()):
        self.oracle = oracle
        self.generators: List[Word] = []
        self._index: Dict[Word, int] = {}
        for g in generators:
            self._add(canonical(g))
        self.derivations: Dict[Word, Tuple[Word, ...]] = dict(derivations or {})
        self.inputs: List[Word] = [canonical(w) for w in inputs]
        self._lattices: Dict[Word, PeriodLattice] = {}
        logger.info(f"Generator table ready: {len(self.generators)} generators, "
                    f"{len(self.derivations)} derivations")

    def _add(self, g: Word):
        if not g.is_empty and g not in self._index:
            self._index[g] = len(self.generators)
            self.generators.append(g)

    def __contains__(self, w: Word) -> bool:
        return canonical(w) in self._index

    def __len__(self) -> int:
        return len(self.generators)

    def index(self, w: Word) -> int:
        return self._index[canonical(w)]

    def lattice(self, g: Word) -> PeriodLattice:
        """B(g): HNF basis of the proper periods"""
        g = canonical(g)
        if g not in self._lattices:
            self._lattices[g] = proper_period_lattice(g)
        return self._lattices[g]

    def period_row(self, g: Word, degree: int) -> Optional[Exponent]:
        if g.is_empty or g.degree <= 0:
            return None
        return self.lattice(g).row(degree)

    def boundary(self, g: Word, degree: int) -> Optional[Tuple[Exponent, Word, Word]]:
        """(beta, prefix, suffix) for the basis row of the given degree"""
        beta = self.period_row(g, degree)
        if beta is None:
            return None
        return beta, factor(g, ONE, beta), factor(g, g.length - beta + ONE, g.length)

    def factorize(self, w: Word) -> List[Word]:
        """Expand w into table generators, following recorded derivations"""
        w = canonical(w)
        if w.is_empty:
            return []
        if w in self._index:
            return [w]
        if w in self.derivations:
            out: List[Word] = []
            for part in self.derivations[w]:
                out.extend(self.factorize(part))
            return out
        out = []
        for block in w.blocks:
            if block.level == 0:
                out.extend(word([x]) for x in expand_letters(Word([block])))
                continue
            piece = Word([block])
            if piece in self._index or piece in self.derivations:
                out.extend(self.factorize(piece))
            else:
                logger.debug(f"atom {piece} not in the table; used as its own factor")
                out.append(piece)
        return out

    def to_json(self) -> Dict[str, Any]:
        """Generators, lattice rows, boundary words as generator indices, derivations"""
        entries = []
        for g in self.generators:
            entry: Dict[str, Any] = {'word': word_to_json(g)}
            if g.degree > 0:
                lattice = self.lattice(g)
                entry['lattice'] = lattice.to_json()
                boundary = {}
                for row in lattice.basis():
                    _, prefix, suffix = self.boundary(g, row.degree)
                    boundary[str(row.degree)] = {
                        'prefix': [self.index(x) for x in self.factorize(prefix) if x in self],
                        'suffix': [self.index(x) for x in self.factorize(suffix) if x in self],
                    }
                entry['boundary'] = boundary
            entries.append(entry)
        return {
            'group': self.oracle.spec,
            'generators': entries,
            'derivations': [{'word': word_to_json(k), 'parts': [word_to_json(p) for p in v]}
                            for k, v in self.derivations.items()],
            'inputs': [word_to_json(w) for w in self.inputs],
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any], oracle: BaseGroupOracle) -> 'GeneratorTable':
        if data.get('group') != oracle.spec:
            raise InvalidInputError(f"table was built for {data.get('group')}, session uses {oracle.spec}")
        try:
            generators = [word_from_json(e['word']) for e in data['generators']]
            derivations = {word_from_json(d['word']): tuple(word_from_json(p) for p in d['parts'])
                           for d in data.get('derivations', [])}
            inputs = [word_from_json(w) for w in data.get('inputs', [])]
        except (KeyError, TypeError) as e:
            raise InvalidInputError(f"malformed table JSON: {e}")
        table = cls(oracle, generators, derivations, inputs)
        for entry, g in zip(data['generators'], table.generators):
            if 'lattice' in entry:
                table._lattices[g] = PeriodLattice.from_json(g.degree, entry['lattice'])
        return table

    def save(self, path: str):
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(self.to_json(), f, indent=2)
        logger.info(f"Saved generator table to {path}")

    @classmethod
    def load(cls, path: str, oracle: BaseGroupOracle) -> 'GeneratorTable':
        try:
            with open(path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except FileNotFoundError:
            raise InvalidInputError(f"table file not found: {path}")
        except json.JSONDecodeError as e:
            raise InvalidInputError(f"invalid JSON in table file: {e}")
        logger.info(f"Loaded generator table from {path}")
        return cls.from_json(data, oracle)
