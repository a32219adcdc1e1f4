#!/usr/bin/env python3
"""
Reducedness checks for ExtWords
Three-valued G-reducedness and local-geodesic tests on represented words
"""

import logging
from enum import Enum
from typing import FrozenSet, List, Set, Tuple

from exponents.exponent import Exponent, ONE
from groups.abelian import FreeAbelian
from groups.base_group import BaseGroupOracle, letters_of
from groups.free_group import FreeGroup
from utils.limits import LIMITS
from words.reduced import is_freely_reduced
from words.word import (Word, Finite, Power, Atom, flat_blocks, block_bounds, factor,
                        invert_letter, concat_raw, power)

logger = logging.getLogger(__name__)


class Verdict(Enum):
    YES = 'yes'
    NO = 'no'
    UNKNOWN = 'unknown'

    def __str__(self):
        return self.value


Segments = List[FrozenSet[str]]


def _join(first: Segments, second: Segments) -> Segments:
    if not first:
        return list(second)
    if not second:
        return list(first)
    return first[:-1] + [first[-1] | second[0]] + second[1:]


def _ray(segments: Segments) -> Segments:
    """Segments of a one-sided periodic ray; interior repeats collapse"""
    if len(segments) == 1:
        return list(segments)
    return [segments[0]] + segments[1:-1] + [segments[-1] | segments[0]]


def segments(w: Word) -> Segments:
    """Letter sets of the maximal finite-distance segments of w, in order"""
    out: Segments = []
    for block in w.blocks:
        if isinstance(block, Finite):
            out = _join(out, [frozenset(block.letters)])
        elif isinstance(block, Power):
            base = segments(block.base)
            if len(base) > 1:
                base = [base[0]] + base[1:-1] + [base[-1] | base[0]] + base[1:]
            out = _join(out, base)
        else:
            right = _ray(segments(block.rho))
            left = list(reversed(_ray(list(reversed(segments(block.lam))))))
            out = _join(out, right) + left
    return out


def _sign_consistent(letters: FrozenSet[str]) -> bool:
    return not any(invert_letter(x) in letters and invert_letter(x) != x for x in letters)


def _all_letters(w: Word) -> Set[str]:
    found: Set[str] = set()
    for segment in segments(w):
        found |= segment
    return found


def finite_windows(w: Word, width: int) -> List[Tuple[str, ...]]:
    """Finite factors around block boundaries and unrolled ray periods"""
    out: List[Tuple[str, ...]] = []
    if w.is_empty:
        return out
    if w.is_finite:
        return [letters_of(w)]
    reach = Exponent.of(width)
    blocks = flat_blocks(w)
    for end in [Exponent.of(0)] + block_bounds(blocks):
        lo = end - reach + ONE
        hi = end + reach
        if lo < ONE:
            lo = ONE
        if hi > w.length:
            hi = w.length
        if lo <= hi:
            piece = factor(w, lo, hi)
            if piece.is_finite:
                out.append(letters_of(piece))
    for block in blocks:
        if isinstance(block, Atom):
            for pattern in (block.rho, block.lam):
                out.extend(_pattern_windows(pattern, width))
    return out


def _pattern_windows(pattern: Word, width: int) -> List[Tuple[str, ...]]:
    if pattern.is_finite:
        size = pattern.length.to_int()
        reps = width // size + 2
        return [letters_of(power(pattern, reps))]
    return finite_windows(concat_raw(pattern, pattern), width)


def _finite_patterns(w: Word) -> List[Word]:
    found = []
    for block in flat_blocks(w):
        if isinstance(block, Atom):
            for pattern in (block.rho, block.lam):
                if pattern.is_finite:
                    found.append(pattern)
                else:
                    found.extend(_finite_patterns(pattern))
    return found


def _has_trivial_factor(letters: Tuple[str, ...], oracle: BaseGroupOracle) -> bool:
    """Two prefixes with the same normal form bound a trivial factor"""
    seen = {()}
    for i in range(1, len(letters) + 1):
        nf = oracle.normal_form(letters[:i])
        if nf in seen:
            return True
        seen.add(nf)
    return False


def _pumped_trivial(pattern: Word, oracle: BaseGroupOracle) -> bool:
    """Some factor rotation^k . prefix of a ray is trivial in G"""
    letters = letters_of(pattern)
    for shift in range(len(letters)):
        rotated = letters[shift:] + letters[:shift]
        for cut in range(len(rotated)):
            m = oracle.cyclic_member(rotated[:cut], rotated)
            if m is not None and (m < 0 or (m == 0 and cut > 0)):
                return True
    return False


def is_g_reduced(w: Word, oracle: BaseGroupOracle, window: int = None) -> Verdict:
    """No finite factor of w is trivial in G"""
    width = window or LIMITS.window
    if w.is_empty:
        return Verdict.YES
    letters = _all_letters(w)
    oracle.check_letters(sorted(letters))
    if isinstance(oracle, FreeGroup):
        return Verdict.YES if is_freely_reduced(w) else Verdict.NO
    if w.is_finite:
        return Verdict.NO if _has_trivial_factor(letters_of(w), oracle) else Verdict.YES
    if isinstance(oracle, FreeAbelian) and all(_sign_consistent(s) for s in segments(w)):
        return Verdict.YES
    for piece in finite_windows(w, width):
        if _has_trivial_factor(piece, oracle):
            return Verdict.NO
    for pattern in _finite_patterns(w):
        if _pumped_trivial(pattern, oracle):
            return Verdict.NO
    logger.debug(f"G-reducedness of {w} undecided within window {width}")
    return Verdict.UNKNOWN


def is_local_geodesic(w: Word, oracle: BaseGroupOracle, window: int = None) -> Verdict:
    """No finite factor has a shorter representative in G"""
    width = window or LIMITS.window
    if w.is_empty:
        return Verdict.YES
    oracle.check_letters(sorted(_all_letters(w)))
    if isinstance(oracle, FreeGroup):
        return Verdict.YES if is_freely_reduced(w) else Verdict.NO
    if isinstance(oracle, FreeAbelian):
        ok = all(_sign_consistent(s) for s in segments(w))
        return Verdict.YES if ok else Verdict.NO
    if not oracle.has_geodesics:
        return Verdict.UNKNOWN
    if w.is_finite:
        return Verdict.YES if oracle.is_local_geodesic_window(letters_of(w)) else Verdict.NO
    for piece in finite_windows(w, width):
        if not oracle.is_local_geodesic_window(piece):
            return Verdict.NO
    return Verdict.UNKNOWN
