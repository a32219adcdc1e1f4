#!/usr/bin/env python3
"""
Word constructions for ExtWords
Ray pairs, order-two words, the x_d tower, HNN stable letters and sample reduced words
"""

import logging
from typing import Union

from exponents.exponent import Exponent, ZERO, ONE
from extension.preprocess import matching_rotations
from groups.base_group import BaseGroupOracle
from groups.free_group import FreeGroup
from periods.periods import minimal_period
from rewriting.reducedness import Verdict, is_g_reduced
from utils.errors import DegreeBoundError, DomainError, OracleError, UnsupportedGroupError
from utils.limits import LIMITS
from words.canonical import canonical, concat
from words.reduced import is_cyclically_reduced
from words.word import Word, Atom, EMPTY, factor, involute, word

logger = logging.getLogger(__name__)

Pattern = Union[Word, str]


def _as_word(p: Pattern) -> Word:
    return word(p) if isinstance(p, str) else p


def _require_free(oracle: BaseGroupOracle, what: str):
    if oracle is not None and not isinstance(oracle, FreeGroup):
        raise UnsupportedGroupError(f"{what} needs a free base group, got {oracle.name}")


def ray_pair(u: Pattern, v: Pattern) -> Word:
    """[u u u ...)(... v v v] of length t^(e+1)"""
    u, v = _as_word(u), _as_word(v)
    if u.is_empty or v.is_empty:
        raise DomainError("ray pair needs nonempty patterns")
    if u.degree != v.degree:
        raise DegreeBoundError(f"ray pair patterns have degrees {u.degree} and {v.degree}")
    level = u.degree + 1
    LIMITS.check_degree(level, "ray pair")
    return Word([Atom(level, canonical(u), canonical(v), ZERO)])


def w_m(m: int, seed: Pattern = 'a') -> Word:
    """[ppp ...)(... p~p~p~] with offset m; equal to its own involute"""
    p = _as_word(seed)
    if p.is_empty:
        raise DomainError("w_m needs a nonempty seed")
    level = p.degree + 1
    LIMITS.check_degree(level, "w_m")
    return canonical(Word([Atom(level, p, involute(p), Exponent.of(m))]))


def x_d(x: Pattern, d: int, oracle: BaseGroupOracle = None) -> Word:
    """Prefix of length t^(e+d) of the A-indexed power of x"""
    x = _as_word(x)
    if d < 1:
        raise DomainError(f"x_d needs d >= 1, got {d}")
    if x.is_empty:
        raise DomainError("x_d needs a nonempty x")
    if (oracle is None or isinstance(oracle, FreeGroup)) and not is_cyclically_reduced(x):
        raise DomainError(f"{x} is not cyclically reduced")
    tower = x
    for _ in range(d):
        tower = ray_pair(tower, tower)
    return tower


def x_infty(x: Pattern, oracle: BaseGroupOracle = None) -> Word:
    """[x x x ...)(... x~ x~ x~], an element of order two commuting x to its inverse"""
    _require_free(oracle, "x_infty")
    x = _as_word(x)
    if x.is_empty or not is_cyclically_reduced(x):
        raise DomainError(f"{x} is not a nonempty cyclically reduced word")
    return ray_pair(x, involute(x))


def is_primitive(w: Pattern) -> bool:
    """w is not a proper power, and its involute is not a cyclic factor of w w"""
    w = _as_word(w)
    if w.is_empty:
        return False
    if minimal_period(canonical(w)) != w.length:
        return False
    return not matching_rotations(canonical(w), canonical(involute(w)))


def hnn_stable_letter(u: Pattern, v: Pattern, w: Pattern, oracle: BaseGroupOracle = None) -> Word:
    """s = [u ...)(... w ...)(... v] with u s = s v"""
    _require_free(oracle, "hnn_stable_letter")
    u, v, w = _as_word(u), _as_word(v), _as_word(w)
    if not (u.length == v.length == w.length):
        raise DomainError(f"stable letter needs |U| = |V| = |W|, got {u.length}, {v.length}, {w.length}")
    if not is_primitive(w):
        raise DomainError(f"{w} is not primitive")
    return concat(ray_pair(u, w), ray_pair(w, v))


def arbitrary_reduced_word(oracle: BaseGroupOracle, alpha: Union[Exponent, int]) -> Word:
    """A G-reduced word of length alpha cut from the x_d tower of the oracle's seed"""
    alpha = Exponent.of(alpha)
    if oracle.is_finite_group:
        raise UnsupportedGroupError(f"{oracle.name} is finite: no infinite G-reduced words exist")
    if alpha < ZERO:
        raise DomainError(f"length {alpha} is negative")
    if alpha.is_zero():
        return EMPTY
    LIMITS.check_degree(alpha.degree + 1, "reduced word tower")
    tower = x_d(word(list(oracle.seed_pattern())), alpha.degree + 1, oracle)
    result = canonical(factor(tower, ONE, alpha))
    if is_g_reduced(result, oracle) == Verdict.NO:
        raise OracleError(f"seed {oracle.seed_pattern()} does not give a G-reduced word")
    return result
