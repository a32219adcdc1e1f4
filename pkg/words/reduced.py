#!/usr/bin/env python3
"""
Free reduction checks for ExtWords
"""

import logging

from words.word import Word, Finite, Power, invert_letter, first_letter, last_letter

logger = logging.getLogger(__name__)


def _cancels(x: str, y: str) -> bool:
    return invert_letter(x) == y


def _cyclic_seam_ok(pattern: Word) -> bool:
    """The wrap-around adjacency of a periodic pattern"""
    return not _cancels(last_letter(pattern), first_letter(pattern))


def _block_reduced(block) -> bool:
    if isinstance(block, Finite):
        letters = block.letters
        return not any(_cancels(a, b) for a, b in zip(letters, letters[1:]))
    if isinstance(block, Power):
        return is_freely_reduced(block.base) and _cyclic_seam_ok(block.base)
    # positions on either side of the seam are never adjacent
    return (is_freely_reduced(block.rho) and _cyclic_seam_ok(block.rho)
            and is_freely_reduced(block.lam) and _cyclic_seam_ok(block.lam))


def is_freely_reduced(w: Word) -> bool:
    """No adjacent letter-inverse pair anywhere in w"""
    previous = None
    for block in w.blocks:
        if not _block_reduced(block):
            return False
        block_word = Word([block])
        if previous is not None and _cancels(last_letter(previous), first_letter(block_word)):
            return False
        previous = block_word
    return True


def is_cyclically_reduced(w: Word) -> bool:
    """w w is freely reduced"""
    if w.is_empty:
        return True
    return is_freely_reduced(w) and _cyclic_seam_ok(w)
