#!/usr/bin/env python3
"""
Word representation for ExtWords
Closed A-words as block sequences: finite runs, finite powers and ray atoms
"""

import logging
from typing import Iterable, List, Sequence, Tuple, Union

from exponents.exponent import Exponent, ZERO, ONE, BOTTOM, floor_div
from utils.errors import DomainError, DegreeBoundError, CapExceededError
from utils.limits import LIMITS

logger = logging.getLogger(__name__)

INVERSE_MARK = '~'


def invert_letter(letter: str) -> str:
    """Formal inverse; the same for every base group"""
    if letter.startswith(INVERSE_MARK):
        return letter[len(INVERSE_MARK):]
    return INVERSE_MARK + letter


class Finite:
    """Nonempty run of letters"""

    __slots__ = ('letters', 'length', '_hash')
    level = 0

    def __init__(self, letters: Sequence[str]):
        self.letters: Tuple[str, ...] = tuple(letters)
        if not self.letters:
            raise DomainError("finite block must be nonempty")
        self.length = Exponent.of(len(self.letters))
        self._hash = hash(('F', self.letters))

    def __eq__(self, other):
        return isinstance(other, Finite) and self.letters == other.letters

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Finite({' '.join(self.letters)!r})"


class Power:
    """base^exp for a finite integer exp >= 2"""

    __slots__ = ('base', 'exp', 'length', 'level', '_hash')

    def __init__(self, base: 'Word', exp: int):
        if base.is_empty:
            raise DomainError("power base must be nonempty")
        if exp < 2:
            raise DomainError(f"power exponent must be >= 2, got {exp}")
        self.base = base
        self.exp = int(exp)
        self.length = base.length * self.exp
        self.level = base.level
        self._hash = hash(('P', base, self.exp))

    def __eq__(self, other):
        return isinstance(other, Power) and self.exp == other.exp and self.base == other.base

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Power({self.base!r}, {self.exp})"


class Atom:
    """Length t^e + c: right ray rho^oo from position 1, left ray oo^lam ending at the last position"""

    __slots__ = ('level', 'rho', 'lam', 'offset', 'length', '_hash')

    def __init__(self, level: int, rho: 'Word', lam: 'Word', offset: Union[Exponent, int] = ZERO):
        offset = Exponent.of(offset)
        if level < 1:
            raise DegreeBoundError(f"atom level must be >= 1, got {level}")
        if rho.is_empty or lam.is_empty:
            raise DomainError("atom rays need nonempty patterns")
        if rho.degree != level - 1 or lam.degree != level - 1:
            raise DegreeBoundError(
                f"atom of level {level} needs ray patterns of degree {level - 1}, "
                f"got {rho.degree} and {lam.degree}")
        if offset.degree >= level:
            raise DegreeBoundError(f"atom offset {offset} must have degree < {level}")
        self.level = level
        self.rho = rho
        self.lam = lam
        self.offset = offset
        self.length = Exponent.t_power(level) + offset
        self._hash = hash(('A', level, rho, lam, offset))

    def __eq__(self, other):
        return (isinstance(other, Atom) and self.level == other.level and self.offset == other.offset
                and self.rho == other.rho and self.lam == other.lam)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Atom({self.level}, {self.rho!r}, {self.lam!r}, {self.offset})"


Block = Union[Finite, Power, Atom]


def _normalize_blocks(blocks: Iterable[Block]) -> Tuple[Block, ...]:
    out: List[Block] = []
    for block in blocks:
        if isinstance(block, Word):
            pieces = block.blocks
        else:
            pieces = (block,)
        for piece in pieces:
            if isinstance(piece, Finite) and out and isinstance(out[-1], Finite):
                out[-1] = Finite(out[-1].letters + piece.letters)
            else:
                out.append(piece)
    return tuple(out)


class Word:
    """Closed A-word anchored at position 1"""

    __slots__ = ('blocks', 'length', 'level', '_hash')

    def __init__(self, blocks: Iterable[Block] = ()):
        self.blocks: Tuple[Block, ...] = _normalize_blocks(blocks)
        length = ZERO
        level = 0
        for block in self.blocks:
            length = length + block.length
            level = max(level, block.level)
        self.length: Exponent = length
        self.level = level
        self._hash = hash(self.blocks)

    @property
    def degree(self):
        return self.length.degree

    @property
    def is_empty(self) -> bool:
        return not self.blocks

    @property
    def is_finite(self) -> bool:
        return self.length.degree <= 0

    def __eq__(self, other):
        return isinstance(other, Word) and self._hash == other._hash and self.blocks == other.blocks

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Word({list(self.blocks)!r})"

    def __str__(self):
        return render(self)

    def __add__(self, other: 'Word') -> 'Word':
        return concat_raw(self, other)


EMPTY = Word()


def word(letters: Union[str, Sequence[str]]) -> Word:
    """Finite word from a letter sequence; a plain string is read one character per letter"""
    if isinstance(letters, str):
        seq = _split_letters(letters)
    else:
        seq = list(letters)
    return Word([Finite(seq)]) if seq else EMPTY


def _split_letters(text: str) -> List[str]:
    out = []
    pending = ''
    for ch in text:
        if ch.isspace():
            continue
        if ch == INVERSE_MARK:
            pending += ch
            continue
        out.append(pending + ch)
        pending = ''
    return out


def concat_raw(*words: Word) -> Word:
    """Concatenation without canonicalization"""
    return Word(words)


def power(base: Word, k: int) -> Word:
    """base^k for k >= 0"""
    if k < 0:
        raise DomainError("negative word power, use involute")
    if k == 0 or base.is_empty:
        return EMPTY
    if k == 1:
        return base
    return Word([Power(base, k)])


def involute_block(block: Block) -> Block:
    if isinstance(block, Finite):
        return Finite([invert_letter(x) for x in reversed(block.letters)])
    if isinstance(block, Power):
        return Power(involute(block.base), block.exp)
    return Atom(block.level, involute(block.lam), involute(block.rho), block.offset)


def involute(w: Word) -> Word:
    """Formal inverse: reverse the word and invert every letter"""
    return Word(involute_block(b) for b in reversed(w.blocks))


def _locate(w: Word, beta: Exponent) -> Tuple[Block, Exponent]:
    """Block holding position beta, and the position local to it"""
    if not (ONE <= beta <= w.length):
        raise DomainError(f"position {beta} outside [1, {w.length}]")
    offset = ZERO
    for block in w.blocks:
        if beta <= offset + block.length:
            return block, beta - offset
        offset = offset + block.length
    raise DomainError(f"position {beta} outside [1, {w.length}]")


def eval_at(w: Word, beta: Union[Exponent, int]) -> str:
    """Letter at position beta"""
    beta = Exponent.of(beta)
    block, local = _locate(w, beta)
    if isinstance(block, Finite):
        return block.letters[local.to_int() - 1]
    if isinstance(block, Power):
        _, r = floor_div(local - ONE, block.base.length)
        return eval_at(block.base, r + ONE)
    if local.degree < block.level:
        _, r = floor_div(local - ONE, block.rho.length)
        return eval_at(block.rho, r + ONE)
    delta = local - block.length
    _, r = floor_div(delta - ONE, block.lam.length)
    return eval_at(block.lam, r + ONE)


def ray_prefix(pattern: Word, n: Exponent) -> Word:
    """Prefix of length n of the right ray pattern^oo"""
    n = Exponent.of(n)
    if n <= ZERO:
        return EMPTY
    k, r = floor_div(n, pattern.length)
    return concat_raw(power(pattern, k), factor(pattern, ONE, r))


def ray_suffix(pattern: Word, n: Exponent) -> Word:
    """Suffix of length n of the left ray oo^pattern"""
    n = Exponent.of(n)
    if n <= ZERO:
        return EMPTY
    k, r = floor_div(n, pattern.length)
    return concat_raw(factor(pattern, pattern.length - r + ONE, pattern.length), power(pattern, k))


def _slice_block(block: Block, lo: Exponent, hi: Exponent) -> Word:
    """Factor [lo, hi] of a single block, local coordinates"""
    if lo == ONE and hi == block.length:
        return Word([block])
    if isinstance(block, Finite):
        return word(block.letters[lo.to_int() - 1:hi.to_int()])
    if isinstance(block, Power):
        size = block.base.length
        k1, r1 = floor_div(lo - ONE, size)
        k2, r2 = floor_div(hi - ONE, size)
        if k1 == k2:
            return factor(block.base, r1 + ONE, r2 + ONE)
        return concat_raw(factor(block.base, r1 + ONE, size),
                          power(block.base, k2 - k1 - 1),
                          factor(block.base, ONE, r2 + ONE))
    e = block.level
    n = hi - lo + ONE
    if hi.degree < e:
        return ray_prefix(rotate(block.rho, lo - ONE), n)
    delta_hi = hi - block.length
    if lo.degree >= e:
        return ray_suffix(rotate(block.lam, delta_hi), n)
    return Word([Atom(e, rotate(block.rho, lo - ONE), rotate(block.lam, delta_hi), n - Exponent.t_power(e))])


def factor(w: Word, beta: Union[Exponent, int], gamma: Union[Exponent, int]) -> Word:
    """The restriction of w to [beta, gamma], re-anchored at 1"""
    beta = Exponent.of(beta)
    gamma = Exponent.of(gamma)
    if gamma == beta - ONE:
        return EMPTY
    if gamma < beta or beta < ONE or gamma > w.length:
        raise DomainError(f"factor [{beta}, {gamma}] outside [1, {w.length}]")
    if beta == ONE and gamma == w.length:
        return w
    pieces = []
    offset = ZERO
    for block in w.blocks:
        start = offset + ONE
        end = offset + block.length
        offset = end
        if end < beta:
            continue
        if start > gamma:
            break
        lo = beta if beta > start else start
        hi = gamma if gamma < end else end
        pieces.append(_slice_block(block, lo - start + ONE, hi - start + ONE))
    return concat_raw(*pieces)


def rotate(w: Word, delta: Union[Exponent, int]) -> Word:
    """Length-|w| factor of the bi-infinite power of w starting at position delta+1"""
    delta = Exponent.of(delta)
    if w.is_empty:
        return w
    if delta.degree > w.degree:
        raise DegreeBoundError(f"rotation {delta} exceeds the degree of |w| = {w.length}")
    _, r = floor_div(delta, w.length)
    if r.is_zero():
        return w
    return concat_raw(factor(w, r + ONE, w.length), factor(w, ONE, r))


def flat_blocks(w: Word) -> List[Block]:
    """Finite runs, finite-base powers and atoms; powers of infinite words unrolled under the unroll cap"""
    out: List[Block] = []
    budget = [LIMITS.max_unroll]

    def emit(block):
        if isinstance(block, Finite) and out and isinstance(out[-1], Finite):
            out[-1] = Finite(out[-1].letters + block.letters)
        else:
            out.append(block)

    def walk(blocks):
        for block in blocks:
            if isinstance(block, Power) and block.level > 0:
                budget[0] -= block.exp
                if budget[0] < 0:
                    raise CapExceededError(f"unrolling exceeds max_unroll={LIMITS.max_unroll}",
                                           LIMITS.max_unroll)
                for _ in range(block.exp):
                    walk(block.base.blocks)
            else:
                emit(block)

    walk(w.blocks)
    return out


def expand_letters(w: Word) -> Tuple[str, ...]:
    """Letter tuple of a finite word, powers unrolled under the unroll cap"""
    if not w.is_finite:
        raise DomainError(f"expected a finite word, got length {w.length}")
    out: List[str] = []
    budget = [LIMITS.max_unroll]

    def walk(blocks):
        for block in blocks:
            if isinstance(block, Finite):
                out.extend(block.letters)
                continue
            budget[0] -= block.exp
            if budget[0] < 0:
                raise CapExceededError(f"unrolling exceeds max_unroll={LIMITS.max_unroll}",
                                       LIMITS.max_unroll)
            for _ in range(block.exp):
                walk(block.base.blocks)

    walk(w.blocks)
    return tuple(out)


def block_bounds(blocks: Sequence[Block]) -> List[Exponent]:
    """End positions of consecutive blocks"""
    ends = []
    offset = ZERO
    for block in blocks:
        offset = offset + block.length
        ends.append(offset)
    return ends


def first_letter(w: Word) -> str:
    return eval_at(w, ONE)


def last_letter(w: Word) -> str:
    return eval_at(w, w.length)


def render(w: Word) -> str:
    """Bracket notation, e.g. [a...)(...b] for a ray atom"""
    if w.is_empty:
        return '1'
    parts = []
    for block in w.blocks:
        if isinstance(block, Finite):
            parts.append(' '.join(block.letters))
        elif isinstance(block, Power):
            parts.append(f"({render(block.base)})^{block.exp}")
        else:
            text = f"[{render(block.rho)}...)(...{render(block.lam)}]"
            if block.offset:
                text += '{' + block.offset.polynomial() + '}'
            parts.append(text)
    return ' '.join(parts)


def degree_of(w: Word):
    return w.length.degree if not w.is_empty else BOTTOM
