#!/usr/bin/env python3
"""
Randomized reduction traces for ExtWords
Applies base-group and pair-cancellation steps in a seeded random order
"""

import json
import logging
import random
from typing import Dict, Any, List, Optional, TextIO, Tuple

from exponents.exponent import Exponent, ZERO, ONE, BOTTOM
from extension.element import ExtElement
from extension.reduce import DegreeReducer, table_for
from extension.table import GeneratorTable
from groups.base_group import BaseGroupOracle, letters_of
from rewriting.redex import Redex, big_redexes
from utils.errors import CapExceededError
from utils.limits import LIMITS
from words.canonical import canonical, concat
from words.compare import equal
from words.word import Word, factor, first_letter, involute, last_letter, word

logger = logging.getLogger(__name__)


class TraceResult:
    """Outcome of one randomized reduction"""

    __slots__ = ('degree', 'word', 'steps', 'lengths')

    def __init__(self, degree, word: Word, steps: int, lengths: List[Exponent]):
        self.degree = degree
        self.word = word
        self.steps = steps
        self.lengths = lengths

    def to_dict(self) -> Dict[str, Any]:
        return {
            'degree': None if self.degree == BOTTOM else self.degree,
            'word': str(self.word),
            'steps': self.steps,
            'lengths': [list(n.coeffs) for n in self.lengths],
        }


def _total(factors: List[Word]) -> Exponent:
    return sum((f.length for f in factors), ZERO)


def _finite_moves(factors: List[Word], oracle: BaseGroupOracle) -> List[Tuple[int, int, int, int]]:
    """(first, last, lo, hi): letters lo..hi-1 of the finite run factors[first..last] are not normal"""
    moves = []
    i = 0
    while i < len(factors):
        if not factors[i].is_finite:
            i += 1
            continue
        j = i
        while j + 1 < len(factors) and factors[j + 1].is_finite:
            j += 1
        letters = tuple(x for f in factors[i:j + 1] for x in letters_of(f))
        for k in range(len(letters) - 1):
            pair = letters[k:k + 2]
            if oracle.normal_form(pair) != pair:
                moves.append((i, j, k, k + 2))
        if not moves or moves[-1][0] != i:
            if oracle.normal_form(letters) != letters:
                moves.append((i, j, 0, len(letters)))
        i = j + 1
    return moves


def _apply_finite(factors: List[Word], move: Tuple[int, int, int, int], oracle: BaseGroupOracle) -> List[Word]:
    first, last, lo, hi = move
    letters = tuple(x for f in factors[first:last + 1] for x in letters_of(f))
    rewritten = letters[:lo] + oracle.normal_form(letters[lo:hi]) + letters[hi:]
    return factors[:first] + [word([x]) for x in rewritten] + factors[last + 1:]


def _has_partner(factors: List[Word], i: int) -> bool:
    g = involute(factors[i])
    return any(j != i and f.degree == g.degree and equal(g, f) for j, f in enumerate(factors))


def _seam_moves(factors: List[Word], oracle: BaseGroupOracle) -> List[Tuple[int, int]]:
    """(k, i): finite factor k cancels a boundary letter of the adjacent atom factor i"""
    top = max((f.degree for f in factors), default=BOTTOM)
    moves = []
    for i, g in enumerate(factors):
        # only atoms that no pair cancellation can ever reach
        if g.is_finite or g.degree != top or _has_partner(factors, i):
            continue
        if i > 0 and factors[i - 1].is_finite:
            if not oracle.normal_form((last_letter(factors[i - 1]), first_letter(g))):
                moves.append((i - 1, i))
        if i + 1 < len(factors) and factors[i + 1].is_finite:
            if not oracle.normal_form((last_letter(g), first_letter(factors[i + 1]))):
                moves.append((i + 1, i))
    return moves


def _apply_seam(factors: List[Word], move: Tuple[int, int]) -> List[Word]:
    k, i = move
    f, g = factors[k], factors[i]
    if k < i:
        f, g = factor(f, ONE, f.length - ONE), factor(g, Exponent.of(2), g.length)
    else:
        f, g = factor(f, Exponent.of(2), f.length), factor(g, ONE, g.length - ONE)
    out = list(factors)
    out[k], out[i] = f, canonical(g)
    return [w for w in out if not w.is_empty]


def _innermost(big: List[Redex], spans: List[Tuple[int, int]]) -> List[Redex]:
    """Redexes whose middle holds no other step"""
    inner = spans + [(r.i, r.j) for r in big]
    return [r for r in big if not any(r.i < lo and hi < r.j for lo, hi in inner)]


def _offset(factors: List[Word], index: int) -> Exponent:
    return _total(factors[:index])


def random_reduction_trace(x: ExtElement, oracle: BaseGroupOracle, seed: int = None,
                           table: GeneratorTable = None, max_steps: int = None,
                           log: Optional[TextIO] = None) -> TraceResult:
    """Reduce x by randomly chosen steps; the final degree does not depend on the seed"""
    rng = random.Random(LIMITS.seed if seed is None else seed)
    cap = max_steps or LIMITS.max_steps
    table = table_for(x, oracle, table)
    reducer = DegreeReducer(table, oracle)
    factors = [piece for f in x.factors for piece in table.factorize(f)]
    lengths = [_total(factors)]
    steps = 0
    while True:
        finite = _finite_moves(factors, oracle)
        seams = _seam_moves(factors, oracle)
        spans = [(m[0], m[1]) for m in finite] + [(min(m), max(m)) for m in seams]
        big = _innermost(list(big_redexes(factors, reducer)), spans)
        moves = len(finite) + len(seams) + len(big)
        if not moves:
            break
        steps += 1
        if steps > cap:
            raise CapExceededError(f"trace exceeds max_steps={cap}", cap)
        choice = rng.randrange(moves)
        if choice < len(finite):
            move = finite[choice]
            start = _offset(factors, move[0])
            window = [start + Exponent.of(move[2] + 1), start + Exponent.of(move[3])]
            factors = _apply_finite(factors, move, oracle)
            rule = 'S0'
        elif choice < len(finite) + len(seams):
            move = seams[choice - len(finite)]
            start = _offset(factors, max(move))
            window = [start, start + ONE]
            factors = _apply_seam(factors, move)
            rule = 'S0'
        else:
            redex = big[choice - len(finite) - len(seams)]
            start = _offset(factors, redex.i)
            window = [start + ONE, _offset(factors, redex.j + 1)]
            factors = redex.apply(factors)
            rule = 'BIG'
        lengths.append(_total(factors))
        if log is not None:
            log.write(json.dumps({
                'step': steps,
                'rule': rule,
                'window': [list(window[0].coeffs), list(window[1].coeffs)],
                'degree': list(lengths[-1].coeffs),
            }) + '\n')
    degree = max((f.degree for f in factors), default=BOTTOM)
    logger.debug(f"trace with seed {seed} finished after {steps} steps at degree {degree}")
    return TraceResult(degree, concat(*factors), steps, lengths)
