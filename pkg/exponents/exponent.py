#!/usr/bin/env python3
"""
Exponents for ExtWords
Lexicographically ordered Z^(d+1), coefficient of t^i at index i
"""

import logging
import re
from functools import total_ordering
from typing import Iterable, Tuple, Union

from utils.errors import DegreeBoundError, ParseError

logger = logging.getLogger(__name__)

# degree of the zero exponent; below every integer degree
BOTTOM = float('-inf')

_LITERAL = re.compile(r'^\s*\[\s*(-?\d+(\s*,\s*-?\d+)*)?\s*\]\s*$')


@total_ordering
class Exponent:
    """Element of A = Z[t] truncated at d_max, ordered by its top coefficient"""

    __slots__ = ('coeffs', '_hash')

    def __init__(self, coeffs: Iterable[int] = ()):
        values = [int(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.coeffs: Tuple[int, ...] = tuple(values)
        self._hash = hash(self.coeffs)

    @classmethod
    def of(cls, value: Union[int, 'Exponent']) -> 'Exponent':
        """Coerce an integer to a degree-0 exponent"""
        if isinstance(value, Exponent):
            return value
        return cls((value,))

    @classmethod
    def t_power(cls, e: int, coeff: int = 1) -> 'Exponent':
        """coeff * t^e"""
        return cls([0] * e + [coeff])

    @classmethod
    def parse(cls, text: str) -> 'Exponent':
        """Parse the literal syntax [a0,a1,...]"""
        if not _LITERAL.match(text):
            raise ParseError(f"invalid exponent literal {text!r}")
        body = text.strip()[1:-1].strip()
        if not body:
            return ZERO
        return cls(int(part) for part in body.split(','))

    @property
    def degree(self):
        """Largest index with a nonzero coefficient, BOTTOM for zero"""
        return len(self.coeffs) - 1 if self.coeffs else BOTTOM

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def low(self, k: int) -> 'Exponent':
        """Part of degree < k"""
        return Exponent(self.coeffs[:max(k, 0)])

    def high(self, k: int) -> 'Exponent':
        """Part of degree >= k"""
        return Exponent([0] * k + list(self.coeffs[k:]))

    def sign(self) -> int:
        lead = self.leading
        return (lead > 0) - (lead < 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_finite(self) -> bool:
        """Degree at most 0"""
        return len(self.coeffs) <= 1

    def to_int(self) -> int:
        if len(self.coeffs) > 1:
            raise DegreeBoundError(f"{self} is not an integer")
        return self.coefficient(0)

    def __add__(self, other):
        other = Exponent.of(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return Exponent(self.coefficient(i) + other.coefficient(i) for i in range(size))

    __radd__ = __add__

    def __neg__(self):
        return Exponent(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-Exponent.of(other))

    def __rsub__(self, other):
        return Exponent.of(other) - self

    def __mul__(self, k: int):
        return Exponent(c * k for c in self.coeffs)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = Exponent.of(other)
        if not isinstance(other, Exponent):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __lt__(self, other):
        if isinstance(other, int):
            other = Exponent.of(other)
        if not isinstance(other, Exponent):
            return NotImplemented
        return (other - self).sign() > 0

    def __hash__(self):
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Exponent({list(self.coeffs)})"

    def __str__(self):
        return '[' + ','.join(str(c) for c in (self.coeffs or (0,))) + ']'

    def polynomial(self) -> str:
        """Render as a polynomial in t, e.g. 2t^2-t+3"""
        if not self.coeffs:
            return '0'
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = '-' if c < 0 else '+'
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                body = ('' if mag == 1 else str(mag)) + ('t' if i == 1 else f"t^{i}")
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ('-' if first_sign == '-' else '') + first_body
        for sign, body in parts[1:]:
            text += sign + body
        return text


ZERO = Exponent()
ONE = Exponent((1,))


def cmp(alpha: Exponent, beta: Exponent) -> int:
    """-1, 0 or 1 by the sign of the leading coefficient of beta - alpha"""
    return -(beta - alpha).sign()


def floor_div(beta: Exponent, mu: Exponent) -> Tuple[int, Exponent]:
    """beta = k*mu + r with 0 <= r < mu and k an integer"""
    beta = Exponent.of(beta)
    mu = Exponent.of(mu)
    if mu <= ZERO:
        raise DegreeBoundError(f"floor_div needs a positive divisor, got {mu}")
    if beta.degree > mu.degree:
        raise DegreeBoundError(f"floor_div quotient {beta} / {mu} is not an integer")
    if beta.is_zero():
        return 0, ZERO
    d = mu.degree
    # the quotient is fixed by the top coefficients, up to one correction
    k = beta.coefficient(d) // mu.coefficient(d)
    r = beta - mu * k
    while r < ZERO:
        k -= 1
        r = r + mu
    while r >= mu:
        k += 1
        r = r - mu
    return k, r


class Interval:
    """Closed interval [lo, hi] of A, or the empty interval"""

    __slots__ = ('lo', 'hi')

    def __init__(self, lo: Exponent = None, hi: Exponent = None):
        if lo is None or hi is None or hi < lo:
            self.lo = None
            self.hi = None
        else:
            self.lo = Exponent.of(lo)
            self.hi = Exponent.of(hi)

    @property
    def is_empty(self) -> bool:
        return self.lo is None

    def length(self) -> Exponent:
        if self.is_empty:
            return ZERO
        return self.hi - self.lo + ONE

    def contains(self, beta: Exponent) -> bool:
        return not self.is_empty and self.lo <= beta <= self.hi

    def __eq__(self, other):
        return isinstance(other, Interval) and (self.lo, self.hi) == (other.lo, other.hi)

    def __repr__(self):
        if self.is_empty:
            return "Interval(empty)"
        return f"Interval({self.lo}, {self.hi})"


EMPTY_INTERVAL = Interval()


def interval_length(interval: Interval) -> Exponent:
    return interval.length()
