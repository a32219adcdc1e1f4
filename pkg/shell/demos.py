#!/usr/bin/env python3
"""
Demo corpus for ExtWords
Named worked examples, each a list of labelled checks over F(a,b)
"""

import logging
from typing import Any, Callable, Dict, List, Tuple

from constructions.builders import ray_pair, w_m, x_d, x_infty, hnn_stable_letter
from constructions.cdr import cdr_decompose, cdr_product
from exponents.exponent import Exponent
from extension.element import ExtElement
from extension.reduce import ext_equal, order_probe
from groups.free_group import FreeGroup
from periods.periods import proper_period_lattice
from utils.errors import InvalidInputError
from words.canonical import concat
from words.compare import equal
from words.reduced import is_freely_reduced
from words.word import Word, Atom, word, involute, eval_at

logger = logging.getLogger(__name__)

Check = Tuple[str, Any]


def _free() -> FreeGroup:
    return FreeGroup(['a', 'b'])


def _e(*words: Word) -> ExtElement:
    return ExtElement(words)


def two_atom_word() -> Word:
    return Word([Atom(1, word('a~b~ab'), word('ab~b'), 0), Atom(1, word('ab'), word('b~b'), -1)])


def shift_word() -> Word:
    return concat(ray_pair('a', 'ab'), ray_pair('ab', 'b'))


def demo_two_atoms() -> List[Check]:
    w = two_atom_word()
    return [
        ('word', w),
        ('length', w.length),
        ('freely reduced', is_freely_reduced(w)),
    ]


def demo_shift_word() -> List[Check]:
    w = shift_word()
    return [
        ('word', w),
        ('length', w.length),
        ('proper periods', proper_period_lattice(w).basis()),
    ]


def demo_shift() -> List[Check]:
    w = shift_word()
    aw, wb = concat(word('a'), w), concat(w, word('b'))
    t = Exponent.t_power(1)
    return [
        ('a w = w b', equal(aw, wb)),
        ('(a w)[t]', eval_at(aw, t)),
        ('(w b)[t]', eval_at(wb, t)),
    ]


def demo_shift_twice() -> List[Check]:
    w = shift_word()
    return [('a a w = w b b', equal(concat(word('aa'), w), concat(w, word('bb'))))]


def demo_ray_conjugation() -> List[Check]:
    t = ray_pair('a', 'b')
    return [('x t = t y with x = a, y = b', equal(concat(word('a'), t), concat(t, word('b'))))]


def demo_collapse_u() -> List[Check]:
    u = ray_pair('ab', 'a~a')
    return [
        ('u', u),
        ('a b u = u a ~a', equal(concat(word('ab'), u), concat(u, word('a~a')))),
    ]


def demo_conjugation() -> List[Check]:
    g = _free()
    same = ray_pair('a', 'b')
    longer = ray_pair('a', 'ab')
    return [
        ('a w = w b for w = raypair(a;b)', ext_equal(_e(word('a'), same), _e(same, word('b')), g)),
        ('a w = w ab for w = raypair(a;ab)', ext_equal(_e(word('a'), longer), _e(longer, word('ab')), g)),
    ]


def demo_hnn() -> List[Check]:
    g = _free()
    s = hnn_stable_letter('aa', 'bb', 'ab', g)
    return [
        ('s', s),
        ('s b b ~s = a a', ext_equal(_e(s, word('bb'), involute(s)), _e(word('aa')), g)),
        ('s b ~s = a', ext_equal(_e(s, word('b'), involute(s)), _e(word('a')), g)),
    ]


def demo_semidirect_1() -> List[Check]:
    g = _free()
    s1 = ray_pair('a', '~a')
    return [
        ('a s1 = s1 ~a', ext_equal(_e(word('a'), s1), _e(s1, word('~a')), g)),
        ('order of s1', order_probe(_e(s1), 4, g)),
    ]


def demo_semidirect_2() -> List[Check]:
    g = _free()
    s2 = concat(ray_pair('a', 'a'), ray_pair('a', '~a'))
    return [
        ('s2', s2),
        ('order of s2 up to 10', order_probe(_e(s2), 10, g)),
    ]


def demo_semidirect_3() -> List[Check]:
    g = _free()
    s3 = hnn_stable_letter('aa', '~a~a', 'ab', g)
    return [('~s3 a a s3 = ~a ~a', ext_equal(_e(involute(s3), word('aa'), s3), _e(word('~a~a')), g))]


def demo_abelian_tower() -> List[Check]:
    g = _free()
    tower = [word('ab'), x_d('ab', 1, g), x_d('ab', 2, g)]
    names = ['x', 'x_1', 'x_2']
    checks: List[Check] = []
    for i in range(len(tower)):
        for j in range(i + 1, len(tower)):
            commute = ext_equal(_e(tower[i], tower[j]), _e(tower[j], tower[i]), g)
            checks.append((f"{names[i]} {names[j]} = {names[j]} {names[i]}", commute))
    checks.append(('x ~x_1 trivial', ext_equal(_e(tower[0], involute(tower[1])), _e(), g)))
    return checks


def demo_torsion_split() -> List[Check]:
    g = _free()
    x = word('ab')
    big = x_infty(x, g)
    return [
        ('order of x_inf', order_probe(_e(big), 4, g)),
        ('x x_inf = x_inf ~x', ext_equal(_e(x, big), _e(big, involute(x)), g)),
        ('order of x x_inf', order_probe(_e(x, big), 4, g)),
        ('x = (x x_inf) x_inf', ext_equal(_e(x, big, big), _e(x), g)),
    ]


def demo_cdr_examples() -> List[Check]:
    g = _free()
    w0 = w_m(0, 'a')
    x = cdr_decompose(concat(w0, word('b'), w0), g)
    s = cdr_decompose(hnn_stable_letter('aa', 'bb', 'ab', g), g)
    b = cdr_decompose(word('b'), g)
    s_b = cdr_product(s, b, g)
    s_bar = cdr_decompose(involute(s.x), g)
    return [
        ('w0 b w0 decomposes with u', None if x is None else x.u),
        ('raypair(a;~a) in cdr', cdr_decompose(ray_pair('a', '~a'), g) is not None),
        ('s * b defined', s_b is not None),
        ('(s * b) * ~s defined', s_b is not None and cdr_product(s_b, s_bar, g) is not None),
    ]


DEMOS: Dict[str, Callable[[], List[Check]]] = {
    'fig-one': demo_two_atoms,
    'fig-w': demo_shift_word,
    'fig-wa': demo_shift,
    'fig-waa': demo_shift_twice,
    'fig-xw': demo_ray_conjugation,
    'collapse-u': demo_collapse_u,
    'ex-conj': demo_conjugation,
    'sec7-hnn': demo_hnn,
    'ex-semidirect-1': demo_semidirect_1,
    'ex-semidirect-2': demo_semidirect_2,
    'ex-semidirect-3': demo_semidirect_3,
    'prop-abel': demo_abelian_tower,
    'prop-gunnar': demo_torsion_split,
    'cdr-examples': demo_cdr_examples,
}


def run_demo(name: str) -> List[Check]:
    if name not in DEMOS:
        raise InvalidInputError(f"unknown demo {name!r}; known: {', '.join(DEMOS)}")
    logger.info(f"Running demo {name}")
    return DEMOS[name]()
