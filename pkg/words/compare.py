#!/usr/bin/env python3
"""
Word comparison for ExtWords
Semantic equality, ray equality and longest common prefixes
"""

import logging
from functools import lru_cache
from typing import List, Tuple

from exponents.exponent import Exponent, ZERO, ONE
from utils.errors import CapExceededError
from utils.limits import LIMITS
from words.lyndon import finite_equal, finite_lcp
from words.word import (Word, Atom, flat_blocks, block_bounds, factor, rotate, ray_prefix, ray_suffix,
                        _slice_block)

logger = logging.getLogger(__name__)


def _pieces(u: Word, v: Word) -> List[Tuple[Word, Word]]:
    """Cut two equal-length words at the union of their block boundaries"""
    fu = flat_blocks(u)
    fv = flat_blocks(v)
    ends_u = block_bounds(fu)
    ends_v = block_bounds(fv)
    cuts = sorted(set(ends_u) | set(ends_v))
    pairs = []
    iu = iv = 0
    start_u = start_v = ZERO
    prev = ZERO
    for cut in cuts:
        while ends_u[iu] < cut:
            start_u = ends_u[iu]
            iu += 1
        while ends_v[iv] < cut:
            start_v = ends_v[iv]
            iv += 1
        lo = prev + ONE
        pu = _slice_block(fu[iu], lo - start_u, cut - start_u)
        pv = _slice_block(fv[iv], lo - start_v, cut - start_v)
        pairs.append((pu, pv))
        prev = cut
    return pairs


def _single(w: Word):
    fb = flat_blocks(w)
    return fb[0] if len(fb) == 1 else None


@lru_cache(maxsize=65536)
def equal(u: Word, v: Word) -> bool:
    """True iff u and v denote the same closed word"""
    if u == v:
        return True
    if u.length != v.length:
        return False
    if u.is_empty:
        return True
    if u.is_finite:
        return finite_equal(u, v)
    bu = _single(u)
    bv = _single(v)
    if isinstance(bu, Atom) and isinstance(bv, Atom):
        return ray_equal(bu.rho, bv.rho) and left_ray_equal(bu.lam, bv.lam)
    return all(equal(pu, pv) for pu, pv in _pieces(u, v))


def ray_equal(p: Word, q: Word) -> bool:
    """p^oo == q^oo as right-infinite words"""
    if p.degree != q.degree:
        return False
    return equal(q, ray_prefix(p, q.length)) and equal(rotate(p, q.length), p)


def left_ray_equal(p: Word, q: Word) -> bool:
    """oo^p == oo^q as left-infinite words"""
    if p.degree != q.degree:
        return False
    return equal(q, ray_suffix(p, q.length)) and equal(rotate(p, q.length), p)


class CommonPrefix:
    """Result of a prefix comparison; attained is False when the common part is unbounded inside a ray"""

    __slots__ = ('length', 'attained')

    def __init__(self, length: Exponent, attained: bool = True):
        self.length = length
        self.attained = attained

    def __repr__(self):
        return f"CommonPrefix({self.length}, attained={self.attained})"


def _lcp_same_length(u: Word, v: Word) -> CommonPrefix:
    if equal(u, v):
        return CommonPrefix(u.length)
    if u.is_finite:
        return CommonPrefix(Exponent.of(finite_lcp(u, v)))
    bu = _single(u)
    bv = _single(v)
    if isinstance(bu, Atom) and isinstance(bv, Atom):
        if not ray_equal(bu.rho, bv.rho):
            return ray_lcp(bu.rho, bv.rho)
        # right rays agree, left rays differ: every finite-depth prefix is common
        return CommonPrefix(ZERO, attained=False)
    offset = ZERO
    for pu, pv in _pieces(u, v):
        if not equal(pu, pv):
            inner = _lcp_same_length(pu, pv)
            return CommonPrefix(offset + inner.length, inner.attained)
        offset = offset + pu.length
    return CommonPrefix(offset)


def ray_lcp(p: Word, q: Word) -> CommonPrefix:
    """Longest common prefix of the right rays p^oo and q^oo, which must differ"""
    n = p.length + q.length
    for _ in range(LIMITS.max_doubling):
        a = ray_prefix(p, n)
        b = ray_prefix(q, n)
        if not equal(a, b):
            return _lcp_same_length(a, b)
        n = n * 2
    raise CapExceededError(f"ray mismatch not located within {LIMITS.max_doubling} doublings",
                           LIMITS.max_doubling)


def lcp(u: Word, v: Word) -> CommonPrefix:
    """Longest common prefix of u and v"""
    n = u.length if u.length <= v.length else v.length
    return _lcp_same_length(factor(u, ONE, n), factor(v, ONE, n))
