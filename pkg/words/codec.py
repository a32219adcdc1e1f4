#!/usr/bin/env python3
"""
JSON codec for ExtWords
Words as {"blocks": [...]} documents with typed blocks, exponents as coefficient lists
"""

import json
import logging
from typing import Dict, Any, List

from exponents.exponent import Exponent
from utils.errors import InvalidInputError
from words.word import Word, Finite, Power, Atom

logger = logging.getLogger(__name__)

SEPARATORS = (',', ':')


def exponent_to_json(alpha: Exponent) -> List[int]:
    return list(Exponent.of(alpha).coeffs)


def exponent_from_json(data: List[int]) -> Exponent:
    if not isinstance(data, list) or not all(isinstance(c, int) for c in data):
        raise InvalidInputError(f"exponent must be a list of integers, got {data!r}")
    return Exponent(data)


def _block_to_json(block) -> Dict[str, Any]:
    if isinstance(block, Finite):
        return {'type': 'finite', 'letters': list(block.letters)}
    if isinstance(block, Power):
        return {'type': 'power', 'base': word_to_json(block.base), 'exp': block.exp}
    return {
        'type': 'atom',
        'level': block.level,
        'rho': word_to_json(block.rho),
        'lambda': word_to_json(block.lam),
        'offset': exponent_to_json(block.offset),
    }


def _block_from_json(data: Dict[str, Any]):
    kind = data['type']
    if kind == 'finite':
        return Finite(data['letters'])
    if kind == 'power':
        return Power(word_from_json(data['base']), int(data['exp']))
    if kind == 'atom':
        return Atom(int(data['level']), word_from_json(data['rho']), word_from_json(data['lambda']),
                    exponent_from_json(data['offset']))
    raise InvalidInputError(f"unknown block type {kind!r}")


def word_to_json(w: Word) -> Dict[str, Any]:
    return {'blocks': [_block_to_json(b) for b in w.blocks]}


def word_from_json(data: Dict[str, Any]) -> Word:
    try:
        return Word(_block_from_json(b) for b in data['blocks'])
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidInputError(f"malformed word JSON: {e}")


def dumps(w: Word) -> str:
    """Compact text of the word JSON format"""
    return json.dumps(word_to_json(w), separators=SEPARATORS)


def loads(text: str) -> Word:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"invalid word JSON: {e}")
    return word_from_json(data)
