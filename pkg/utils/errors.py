#!/usr/bin/env python3
"""
Error types for ExtWords
Every failure raised by the engine derives from ExtWordsError
"""

from typing import Optional


class ExtWordsError(Exception):
    """Base class for all engine errors"""

    exit_code = 1


class InvalidInputError(ExtWordsError):
    """Input rejected before or during computation"""

    exit_code = 2


class ParseError(InvalidInputError):
    """Syntax error in a shell expression or command"""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class DegreeBoundError(InvalidInputError):
    """An exponent degree is out of the allowed range"""


class DomainError(InvalidInputError):
    """A position or interval lies outside a word's domain"""


class NotAPeriodError(InvalidInputError):
    """An exponent is not a proper period of the word"""


class ForeignLetterError(InvalidInputError):
    """A letter does not belong to the base group alphabet"""


class NotReducedError(InvalidInputError):
    """A word is not G-reduced"""


class UnsupportedGroupError(InvalidInputError):
    """The operation needs a different kind of base group"""


class CapExceededError(ExtWordsError):
    """A step, round, unroll or recursion cap was exceeded"""

    exit_code = 3

    def __init__(self, message: str, cap: Optional[int] = None):
        super().__init__(message)
        self.cap = cap


class OracleError(ExtWordsError):
    """The base group oracle failed where an answer is guaranteed"""

    exit_code = 2
