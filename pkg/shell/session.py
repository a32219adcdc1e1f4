#!/usr/bin/env python3
"""
Shell session for ExtWords
Base group, named bindings and evaluation of expression trees
"""

import logging
from typing import Dict, Any, Optional

from constructions.builders import ray_pair, w_m, x_d, x_infty, hnn_stable_letter, arbitrary_reduced_word
from constructions.cdr import cdr_decompose, cdr_product
from exponents.exponent import Exponent
from extension.element import ExtElement
from extension.table import GeneratorTable
from groups.factory import parse_group_spec
from shell.parser import (Node, Ident, Empty, Inverse, Product, PowerOf, Call, IntLit, ExpLit, Keyword,
                          keyword)
from utils.config_loader import DEFAULT_SHELL_CONFIG
from utils.errors import ForeignLetterError, InvalidInputError, DomainError
from words.canonical import canonical
from words.word import Word, Atom, word

logger = logging.getLogger(__name__)


class Session:
    """Evaluation context for one shell run"""

    def __init__(self, config: Dict[str, Any] = None):
        self.config = dict(DEFAULT_SHELL_CONFIG)
        self.config.update(config or {})
        self.oracle = parse_group_spec(self.config['group'])
        self.json_output = bool(self.config.get('json', False))
        self.bindings: Dict[str, ExtElement] = {}
        self.table: Optional[GeneratorTable] = None
        self._builtins = {
            'raypair': self._raypair,
            'wm': self._wm,
            'xd': self._xd,
            'xinf': self._xinf,
            'hnn': self._hnn,
            'cdr': self._cdr,
            'atom': self._atom,
            'reduced': self._reduced,
        }
        logger.info(f"Session over {self.oracle.name}")

    def bind(self, name: str, value: ExtElement):
        if name in self._builtins:
            raise InvalidInputError(f"{name!r} is a builtin and cannot be rebound")
        self.bindings[name] = value

    def resolve(self, name: str) -> ExtElement:
        """Binding, then alphabet letter, then a run of one-character letters"""
        if name in self.bindings:
            return self.bindings[name]
        letters = self.oracle.alphabet
        if name in letters:
            return ExtElement([word([name])])
        if all(ch in letters for ch in name):
            return ExtElement([word(list(name))])
        raise ForeignLetterError(f"{name!r} is neither a binding nor a word over {self.oracle.name}")

    def element(self, node: Node) -> ExtElement:
        if isinstance(node, Ident):
            return self.resolve(node.name)
        if isinstance(node, Empty):
            return ExtElement()
        if isinstance(node, Inverse):
            return self.element(node.operand).inverse()
        if isinstance(node, Product):
            result = ExtElement()
            for item in node.items:
                result = result * self.element(item)
            return result
        if isinstance(node, PowerOf):
            return self.element(node.base) ** node.exponent
        if isinstance(node, Call):
            builtin = self._builtins.get(node.name)
            if builtin is None:
                raise InvalidInputError(f"unknown builtin {node.name!r}")
            return ExtElement([builtin(node.args)])
        raise InvalidInputError(f"{type(node).__name__} is not a word expression")

    def word(self, node: Node) -> Word:
        return self.element(node).word

    def integer(self, node: Node) -> int:
        if not isinstance(node, IntLit):
            raise InvalidInputError("expected an integer argument")
        return node.value

    def exponent(self, node: Node) -> Exponent:
        if isinstance(node, ExpLit):
            return Exponent(node.coeffs)
        if isinstance(node, IntLit):
            return Exponent.of(node.value)
        raise InvalidInputError("expected an exponent literal")

    def _positional(self, args, count: int, name: str):
        plain = [a for a in args if not isinstance(a, Keyword)]
        if len(plain) not in (count if isinstance(count, tuple) else (count,)):
            raise InvalidInputError(f"{name} takes {count} arguments, got {len(plain)}")
        return plain

    def _raypair(self, args) -> Word:
        u, v = self._positional(args, 2, 'raypair')
        return ray_pair(self.word(u), self.word(v))

    def _wm(self, args) -> Word:
        plain = self._positional(args, (1, 2), 'wm')
        seed = self.word(plain[1]) if len(plain) == 2 else word([self.oracle.generators[0]])
        return w_m(self.integer(plain[0]), seed)

    def _xd(self, args) -> Word:
        x, d = self._positional(args, 2, 'xd')
        return x_d(self.word(x), self.integer(d), self.oracle)

    def _xinf(self, args) -> Word:
        x, = self._positional(args, 1, 'xinf')
        return x_infty(self.word(x), self.oracle)

    def _hnn(self, args) -> Word:
        u, v, w = self._positional(args, 3, 'hnn')
        return hnn_stable_letter(self.word(u), self.word(v), self.word(w), self.oracle)

    def _cdr(self, args) -> Word:
        plain = self._positional(args, (1, 2), 'cdr')
        x = cdr_decompose(self.word(plain[0]), self.oracle)
        if x is None:
            raise DomainError(f"{plain[0]} has no cyclically reduced decomposition")
        if len(plain) == 1:
            return x.x
        y = cdr_decompose(self.word(plain[1]), self.oracle)
        product = None if y is None else cdr_product(x, y, self.oracle)
        if product is None:
            raise DomainError("cdr product is undefined")
        return product.x

    def _atom(self, args) -> Word:
        rho, lam = self._positional(args, 2, 'atom')
        offset = keyword(args, 'c')
        r, l = self.word(rho), self.word(lam)
        c = self.exponent(offset) if offset is not None else Exponent()
        return canonical(Word([Atom(r.degree + 1, r, l, c)]))

    def _reduced(self, args) -> Word:
        alpha, = self._positional(args, 1, 'reduced')
        return arbitrary_reduced_word(self.oracle, self.exponent(alpha))
