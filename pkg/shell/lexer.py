#!/usr/bin/env python3
"""
Lexer for ExtWords expressions
Identifiers, integers, exponent literals and punctuation with line/column positions
"""

import logging
from dataclasses import dataclass
from typing import Any, List

from utils.errors import ParseError

logger = logging.getLogger(__name__)

PUNCTUATION = {
    '~': 'TILDE',
    '^': 'CARET',
    '(': 'LPAREN',
    ')': 'RPAREN',
    ';': 'SEMI',
    ',': 'COMMA',
    '=': 'EQUALS',
    '-': 'MINUS',
}


@dataclass
class Token:
    """Token with type, value and 1-based source position"""
    type: str
    value: Any
    line: int
    column: int

    def __repr__(self) -> str:
        return f"Token({self.type}, {self.value!r}, {self.line}:{self.column})"


class Lexer:
    """Produces IDENT, INT, EXPONENT, punctuation and EOF tokens"""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.column = 1

    def _peek(self, n: int = 0) -> str:
        i = self.pos + n
        return self.text[i] if i < len(self.text) else ''

    def _advance(self) -> str:
        ch = self.text[self.pos]
        self.pos += 1
        if ch == '\n':
            self.line += 1
            self.column = 1
        else:
            self.column += 1
        return ch

    def _error(self, message: str):
        raise ParseError(message, self.line, self.column)

    def _read_while(self, accept) -> str:
        start = self.pos
        while self._peek() and accept(self._peek()):
            self._advance()
        return self.text[start:self.pos]

    def _read_exponent(self, line: int, column: int) -> Token:
        self._advance()
        body = self._read_while(lambda ch: ch != ']')
        if self._peek() != ']':
            raise ParseError("unterminated exponent literal", line, column)
        self._advance()
        parts = [p.strip() for p in body.split(',')] if body.strip() else []
        try:
            coeffs = [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"invalid exponent literal [{body}]", line, column)
        return Token('EXPONENT', coeffs, line, column)

    def tokens(self) -> List[Token]:
        out: List[Token] = []
        while True:
            self._read_while(str.isspace)
            line, column = self.line, self.column
            ch = self._peek()
            if not ch:
                out.append(Token('EOF', None, line, column))
                return out
            if ch == '#':
                self._read_while(lambda c: c != '\n')
            elif ch.isdigit():
                out.append(Token('INT', int(self._read_while(str.isdigit)), line, column))
            elif ch.isalpha() or ch == '_':
                name = self._read_while(lambda c: c.isalnum() or c == '_')
                out.append(Token('IDENT', name, line, column))
            elif ch == '[':
                out.append(self._read_exponent(line, column))
            elif ch in PUNCTUATION:
                self._advance()
                out.append(Token(PUNCTUATION[ch], ch, line, column))
            else:
                self._error(f"unexpected character {ch!r}")


def tokenize(text: str) -> List[Token]:
    return Lexer(text).tokens()
