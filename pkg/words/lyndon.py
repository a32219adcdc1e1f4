#!/usr/bin/env python3
"""
Finite normal forms for ExtWords
Lyndon factorizations of compressed letter strings

A node is a letter, or a tuple of (node, count) items: the factorization of a
Lyndon word under the opposite letter order. Orders alternate with depth, so a
long run such as a^n b stays a two-item node instead of n + 1 letters.
"""

import logging
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple, Union

from utils.errors import CapExceededError, DomainError
from utils.limits import LIMITS
from words.word import Word, Finite, Power, EMPTY

logger = logging.getLogger(__name__)

Node = Union[str, tuple]
Item = Tuple[Node, int]

# runs shorter than this stay spelled out
FOLD_LETTERS = 6


@lru_cache(maxsize=65536)
def size(node: Node) -> int:
    if isinstance(node, str):
        return 1
    return sum(size(part) * count for part, count in node)


def _first_letter(node: Node) -> str:
    while not isinstance(node, str):
        node = node[0][0]
    return node


def _take(stack: List[list], k: int):
    stack[-1][1] -= k
    if stack[-1][1] == 0:
        stack.pop()


def _open(stack: List[list]):
    node = stack[-1][0]
    _take(stack, 1)
    for part, count in reversed(node):
        stack.append([part, count])


def scan(xs: Sequence[Item], ys: Sequence[Item]) -> Tuple[int, Optional[str], Optional[str]]:
    """Common prefix length of two compressed strings and the letters where they part"""
    sx = [[node, count] for node, count in reversed(xs)]
    sy = [[node, count] for node, count in reversed(ys)]
    common = 0
    while sx and sy:
        nx, cx = sx[-1]
        ny, cy = sy[-1]
        if nx == ny:
            k = min(cx, cy)
            common += k * size(nx)
            _take(sx, k)
            _take(sy, k)
        elif isinstance(nx, str) and isinstance(ny, str):
            return common, nx, ny
        elif isinstance(ny, str) or (not isinstance(nx, str) and size(nx) >= size(ny)):
            _open(sx)
        else:
            _open(sy)
    lx = _first_letter(sx[-1][0]) if sx else None
    ly = _first_letter(sy[-1][0]) if sy else None
    return common, lx, ly


def _letter_cmp(x: str, y: str, sign: int) -> int:
    return sign * ((x > y) - (x < y))


def compare(x: Node, y: Node, sign: int) -> int:
    """Lexicographic order of two nodes' strings; a proper prefix is smaller"""
    if isinstance(x, str) and isinstance(y, str):
        return _letter_cmp(x, y, sign)
    _, lx, ly = scan(((x, 1),), ((y, 1),))
    if lx is None and ly is None:
        return 0
    if lx is None:
        return -1
    if ly is None:
        return 1
    return _letter_cmp(lx, ly, sign)


def _parts(node: Node) -> Tuple[Item, ...]:
    return ((node, 1),) if isinstance(node, str) else node


class Factorizer:
    """Stack merge of Lyndon words into a nonincreasing factorization"""

    def __init__(self, sign: int):
        self.sign = sign
        self.items: List[list] = []

    def push(self, node: Node, count: int):
        while self.items:
            top, n = self.items[-1]
            if top == node:
                self.items[-1][1] += count
                return
            if compare(top, node, self.sign) >= 0:
                break
            self.items.pop()
            node = _merge(top, n, node, count, self.sign)
            count = 1
        self.items.append([node, count])

    def extend(self, items: Sequence[Item]):
        for node, count in items:
            self.push(node, count)

    def result(self) -> Tuple[Item, ...]:
        return tuple((node, count) for node, count in self.items)


def _merge(top: Node, n: int, node: Node, count: int, sign: int) -> Node:
    """The Lyndon word top^n node^count, for top < node"""
    inner = Factorizer(-sign)
    inner.extend(power_items(_parts(top), n, -sign))
    inner.extend(power_items(_parts(node), count, -sign))
    merged = inner.result()
    if len(merged) == 1 and merged[0][1] == 1:
        return merged[0][0]
    return merged


def power_items(items: Sequence[Item], n: int, sign: int) -> Tuple[Item, ...]:
    """Factorization of the n-th power of a factorized string"""
    if n <= 0 or not items:
        return ()
    if n == 1:
        return tuple(items)
    copies = []
    for k in (2, 3):
        f = Factorizer(sign)
        for _ in range(min(k, n)):
            f.extend(items)
        copies.append(f.result())
    if n <= 3:
        return copies[n - 2]
    # u^n = x (y x)^(n-1) y for the least rotation y x of u: one count grows with n
    two, three = copies
    if len(two) == len(three):
        moved = [i for i in range(len(two)) if two[i] != three[i]]
        if len(moved) == 1 and two[moved[0]][0] == three[moved[0]][0]:
            i = moved[0]
            node, count = two[i]
            step = three[i][1] - count
            return two[:i] + ((node, count + (n - 2) * step),) + two[i + 1:]
    if n > LIMITS.max_unroll:
        raise CapExceededError(f"power of {n} copies exceeds max_unroll={LIMITS.max_unroll}",
                               LIMITS.max_unroll)
    logger.debug(f"power factorization fell back to {n} explicit copies")
    f = Factorizer(sign)
    for _ in range(n):
        f.extend(items)
    return f.result()


@lru_cache(maxsize=16384)
def factorize(w: Word) -> Tuple[Item, ...]:
    """Lyndon factorization of a finite word, equal counts grouped"""
    f = Factorizer(1)
    for block in w.blocks:
        if isinstance(block, Finite):
            for x in block.letters:
                f.push(x, 1)
        elif isinstance(block, Power) and block.level == 0:
            f.extend(power_items(factorize(block.base), block.exp, 1))
        else:
            raise DomainError(f"finite normal form of a word with infinite block {block!r}")
    return f.result()


def node_word(node: Node) -> Word:
    if isinstance(node, str):
        return Word([Finite([node])])
    return Word(item_word(part, count) for part, count in node)


def item_word(node: Node, count: int) -> Word:
    base = node_word(node)
    if count >= 2 and size(node) * count >= FOLD_LETTERS:
        return Word([Power(base, count)])
    return Word([base] * count)


def finite_normal(w: Word) -> Word:
    """Unique block form of a finite word; long periodic runs become powers"""
    if w.is_empty:
        return EMPTY
    return Word(item_word(node, count) for node, count in factorize(w))


def _spelled(w: Word) -> bool:
    return all(isinstance(block, Finite) for block in w.blocks)


def finite_equal(u: Word, v: Word) -> bool:
    if u.length != v.length:
        return False
    if _spelled(u) and _spelled(v):
        return u.blocks == v.blocks
    return factorize(u) == factorize(v)


def finite_lcp(u: Word, v: Word) -> int:
    """Length of the longest common prefix of two finite words"""
    if _spelled(u) and _spelled(v):
        x = u.blocks[0].letters if u.blocks else ()
        y = v.blocks[0].letters if v.blocks else ()
        i = 0
        while i < len(x) and i < len(y) and x[i] == y[i]:
            i += 1
        return i
    common, _, _ = scan(factorize(u), factorize(v))
    return common
