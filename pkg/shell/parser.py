#!/usr/bin/env python3
"""
Expression parser for ExtWords
Recursive descent over juxtaposition products, with an AST printer that reparses to the same tree
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from shell.lexer import Token, tokenize
from utils.errors import ParseError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Ident:
    name: str


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Inverse:
    operand: 'Node'


@dataclass(frozen=True)
class Product:
    items: Tuple['Node', ...]


@dataclass(frozen=True)
class PowerOf:
    base: 'Node'
    exponent: int


@dataclass(frozen=True)
class Call:
    name: str
    args: Tuple['Node', ...]


@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class ExpLit:
    coeffs: Tuple[int, ...]


@dataclass(frozen=True)
class Keyword:
    name: str
    value: 'Node'


Node = Union[Ident, Empty, Inverse, Product, PowerOf, Call, IntLit, ExpLit, Keyword]

_STARTS_FACTOR = {'IDENT', 'INT', 'LPAREN', 'TILDE'}
_SEPARATORS = {'SEMI', 'COMMA'}


class Parser:
    """Power binds tighter than product; product is left-associative juxtaposition"""

    def __init__(self, text: str):
        self.tokens: List[Token] = tokenize(text)
        self.pos = 0

    def _peek(self, n: int = 0) -> Token:
        return self.tokens[min(self.pos + n, len(self.tokens) - 1)]

    def _next(self) -> Token:
        token = self._peek()
        self.pos += 1
        return token

    def _expect(self, kind: str) -> Token:
        token = self._next()
        if token.type != kind:
            raise ParseError(f"expected {kind}, found {token.value!r}", token.line, token.column)
        return token

    def _signed_int(self) -> int:
        sign = -1 if self._peek().type == 'MINUS' else 1
        if sign < 0:
            self._next()
        return sign * self._expect('INT').value

    def parse(self) -> Node:
        node = self.expression()
        self._expect('EOF')
        return node

    def sequence(self) -> List[Node]:
        """Expressions separated by top-level semicolons"""
        nodes = [self.expression()]
        while self._peek().type == 'SEMI':
            self._next()
            nodes.append(self.expression())
        self._expect('EOF')
        return nodes

    def expression(self) -> Node:
        items = [self.unary()]
        while self._peek().type in _STARTS_FACTOR:
            items.append(self.unary())
        return items[0] if len(items) == 1 else Product(tuple(items))

    def unary(self) -> Node:
        if self._peek().type == 'TILDE':
            self._next()
            return Inverse(self.unary())
        return self.postfix()

    def postfix(self) -> Node:
        node = self.primary()
        while self._peek().type == 'CARET':
            self._next()
            node = PowerOf(node, self._signed_int())
        return node

    def primary(self) -> Node:
        token = self._next()
        if token.type == 'IDENT':
            if self._peek().type == 'LPAREN':
                self._next()
                args = self.arguments()
                self._expect('RPAREN')
                return Call(token.value, tuple(args))
            return Ident(token.value)
        if token.type == 'INT':
            if token.value != 1:
                raise ParseError(f"integer {token.value} is not a word; only 1 denotes the empty word",
                                 token.line, token.column)
            return Empty()
        if token.type == 'LPAREN':
            node = self.expression()
            self._expect('RPAREN')
            return node
        raise ParseError(f"unexpected {token.value!r}", token.line, token.column)

    def arguments(self) -> List[Node]:
        if self._peek().type == 'RPAREN':
            return []
        args = [self.argument()]
        while self._peek().type in _SEPARATORS:
            self._next()
            args.append(self.argument())
        return args

    def argument(self) -> Node:
        token = self._peek()
        if token.type == 'IDENT' and self._peek(1).type == 'EQUALS':
            self._next()
            self._next()
            return Keyword(token.value, self.argument())
        if token.type == 'EXPONENT':
            self._next()
            return ExpLit(tuple(token.value))
        if token.type == 'MINUS' or (token.type == 'INT' and self._peek(1).type in _SEPARATORS | {'RPAREN'}):
            return IntLit(self._signed_int())
        return self.expression()


def parse(text: str) -> Node:
    return Parser(text).parse()


def parse_sequence(text: str) -> List[Node]:
    return Parser(text).sequence()


def _wrapped(node: Node) -> str:
    text = to_text(node)
    return f"({text})" if isinstance(node, (Product, Inverse)) else text


def to_text(node: Node) -> str:
    """Source text that parses back to node"""
    if isinstance(node, Ident):
        return node.name
    if isinstance(node, Empty):
        return '1'
    if isinstance(node, Inverse):
        inner = to_text(node.operand)
        return '~' + (f"({inner})" if isinstance(node.operand, Product) else inner)
    if isinstance(node, Product):
        return ' '.join(f"({to_text(i)})" if isinstance(i, Product) else to_text(i) for i in node.items)
    if isinstance(node, PowerOf):
        return f"{_wrapped(node.base)}^{node.exponent}"
    if isinstance(node, Call):
        args = ('(1)' if isinstance(a, Empty) else to_text(a) for a in node.args)
        return f"{node.name}({'; '.join(args)})"
    if isinstance(node, IntLit):
        return str(node.value)
    if isinstance(node, ExpLit):
        return '[' + ','.join(str(c) for c in node.coeffs) + ']'
    if isinstance(node, Keyword):
        return f"{node.name}={to_text(node.value)}"
    raise TypeError(f"not an expression node: {node!r}")


def keyword(args, name: str) -> Optional[Node]:
    for arg in args:
        if isinstance(arg, Keyword) and arg.name == name:
            return arg.value
    return None
