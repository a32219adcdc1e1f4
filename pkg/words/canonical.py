#!/usr/bin/env python3
"""
Canonical forms for ExtWords
Ray absorption, minimal ray periods, seam alignment and finite run normal forms
"""

import logging
from functools import lru_cache
from typing import List

from exponents.exponent import Exponent, ZERO
from periods.periods import minimal_period
from words.compare import equal, ray_equal, ray_lcp
from words.lyndon import finite_normal, finite_lcp
from words.word import (Word, Atom, flat_blocks, factor, rotate, ray_prefix, ray_suffix, involute,
                        concat_raw)

logger = logging.getLogger(__name__)

MAX_PASSES = 16


def _canonical_pattern(pattern: Word, right: bool) -> Word:
    pattern = canonical(pattern)
    period = minimal_period(pattern)
    if period is not None and period < pattern.length:
        cut = ray_prefix(pattern, period) if right else ray_suffix(pattern, period)
        pattern = canonical(cut)
    return pattern


def _atom(level: int, rho: Word, lam: Word, offset: Exponent) -> Atom:
    return Atom(level, _canonical_pattern(rho, True), _canonical_pattern(lam, False), offset)


def _matching_suffix(piece: Word, rho: Word) -> Exponent:
    """Longest suffix of piece that continues the right ray rho^oo to the left"""
    expected = ray_suffix(rho, piece.length)
    if piece.level == 0:
        return Exponent.of(finite_lcp(involute(piece), involute(expected)))
    return piece.length if equal(piece, expected) else ZERO


def _matching_prefix(piece: Word, lam: Word) -> Exponent:
    """Longest prefix of piece that continues the left ray oo^lam to the right"""
    expected = ray_prefix(lam, piece.length)
    if piece.level == 0:
        return Exponent.of(finite_lcp(piece, expected))
    return piece.length if equal(piece, expected) else ZERO


def _absorb(blocks: List) -> bool:
    """Pull matching lower-level neighbor material into the adjacent rays"""
    changed = False
    i = 0
    while i < len(blocks):
        block = blocks[i]
        if not isinstance(block, Atom):
            i += 1
            continue
        rho, lam, offset = block.rho, block.lam, block.offset
        touched = False
        while i > 0 and blocks[i - 1].level < block.level:
            piece = Word([blocks[i - 1]])
            n = _matching_suffix(piece, rho)
            if n.is_zero():
                break
            rho = rotate(rho, -n)
            offset = offset + n
            touched = True
            if n == piece.length:
                blocks.pop(i - 1)
                i -= 1
                continue
            rest = list(factor(piece, 1, piece.length - n).blocks)
            blocks[i - 1:i] = rest
            i += len(rest) - 1
            break
        while i + 1 < len(blocks) and blocks[i + 1].level < block.level:
            piece = Word([blocks[i + 1]])
            n = _matching_prefix(piece, lam)
            if n.is_zero():
                break
            lam = rotate(lam, n)
            offset = offset + n
            touched = True
            if n == piece.length:
                blocks.pop(i + 1)
                continue
            blocks[i + 1:i + 2] = list(factor(piece, n + 1, piece.length).blocks)
            break
        if touched:
            blocks[i] = _atom(block.level, rho, lam, offset)
            changed = True
        i += 1
    return changed


def _align_seams(blocks: List) -> bool:
    """Put each boundary between adjacent same-level atoms at its normal position"""
    changed = False
    position = ZERO
    for i, block in enumerate(blocks):
        position = position + block.length
        if i + 1 >= len(blocks) or not isinstance(block, Atom):
            continue
        nxt = blocks[i + 1]
        if not isinstance(nxt, Atom) or nxt.level != block.level:
            continue
        if ray_equal(block.lam, nxt.rho):
            # continuous seam: top-degree part of its absolute position
            shift = position.high(block.level) - position
        else:
            # the left atom takes everything its left ray continues into
            common = ray_lcp(block.lam, nxt.rho)
            if not common.attained:
                continue
            shift = common.length
        if shift.is_zero():
            continue
        blocks[i] = _atom(block.level, block.rho, rotate(block.lam, shift), block.offset + shift)
        blocks[i + 1] = _atom(nxt.level, rotate(nxt.rho, shift), nxt.lam, nxt.offset - shift)
        position = position + shift
        changed = True
    return changed


def _fold_runs(blocks: List) -> List:
    """Finite stretches between atoms in their normal form"""
    out = []
    run = []
    for block in blocks + [None]:
        if block is not None and block.level == 0:
            run.append(block)
            continue
        if run:
            out.extend(finite_normal(Word(run)).blocks)
            run = []
        if block is not None:
            out.append(block)
    return out


@lru_cache(maxsize=16384)
def canonical(w: Word) -> Word:
    """Normal representative of the denotation of w"""
    if w.is_empty or w.is_finite:
        return finite_normal(w)
    blocks = []
    for block in flat_blocks(w):
        if isinstance(block, Atom):
            block = _atom(block.level, block.rho, block.lam, block.offset)
        blocks.append(block)
    for _ in range(MAX_PASSES):
        changed = _absorb(blocks)
        changed = _align_seams(blocks) or changed
        blocks = list(Word(blocks).blocks)
        if not changed:
            break
    else:
        logger.warning(f"canonical form did not settle within {MAX_PASSES} passes")
    return Word(_fold_runs(blocks))


def concat(*words: Word) -> Word:
    """Concatenation, canonicalized"""
    return canonical(concat_raw(*words))
