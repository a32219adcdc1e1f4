#!/usr/bin/env python3
"""
Preprocessing for ExtWords
Refines the input generators until inverse pairs share cores and periods are compatible
"""

import logging
from typing import Dict, Iterable, List, Optional, Tuple

from exponents.exponent import Exponent, ZERO, ONE, floor_div
from extension.table import GeneratorTable
from groups.base_group import BaseGroupOracle, letters_of
from periods.periods import stabilizer, proper_period_lattice
from rewriting.reducedness import Verdict, is_g_reduced
from utils.errors import NotReducedError, CapExceededError
from utils.limits import LIMITS
from words.canonical import canonical, concat
from words.compare import equal, ray_equal, left_ray_equal
from words.word import Word, Atom, flat_blocks, block_bounds, factor, rotate, involute, word

logger = logging.getLogger(__name__)

Core = Tuple[Word, Word, Word, Word, Word]


def split_top(g: Word) -> Optional[Tuple[Word, Atom, Word]]:
    """g = P A Q around its single top-degree atom"""
    if g.is_empty or g.degree < 1:
        return None
    blocks = canonical(g).blocks
    tops = [i for i, b in enumerate(blocks) if isinstance(b, Atom) and b.level == g.degree]
    if len(tops) != 1:
        return None
    k = tops[0]
    return Word(blocks[:k]), blocks[k], Word(blocks[k + 1:])


def matching_rotations(p: Word, q: Word, left: bool = False) -> List[Exponent]:
    """Shifts delta in [0, |p|) with rotate(p, delta) and q spanning the same ray"""
    if p.degree != q.degree:
        return []
    n = p.length
    if p.is_finite:
        candidates = {Exponent.of(i) for i in range(n.to_int())}
    else:
        marks_p = [ZERO] + block_bounds(flat_blocks(p))
        marks_q = [ZERO] + block_bounds(flat_blocks(q))
        candidates = {floor_div(a - b, n)[1] for a in marks_p for b in marks_q}
    same = left_ray_equal if left else ray_equal
    return [delta for delta in sorted(candidates) if same(rotate(p, delta), q)]


def find_common_core(g: Word, h: Word) -> Optional[Core]:
    """(x, u, y, z, t) with g = x u y, h = z u t and u spanning both top atoms"""
    sg = split_top(g)
    sh = split_top(h)
    if sg is None or sh is None or g.degree != h.degree:
        return None
    pg, ag, qg = sg
    ph, ah, qh = sh
    wg = Word([ag])
    wh = Word([ah])
    for dr in matching_rotations(ah.rho, ag.rho):
        for shift in matching_rotations(ah.lam, ag.lam, left=True):
            _, dl = floor_div(-shift, ah.lam.length)
            spread = ag.offset - ah.offset + dl + dr
            if stabilizer(ah.rho).member(spread):
                skew = ag.offset - ah.offset + dl
                a_h = -skew if skew < ZERO else ZERO
                a_g, b_g, b_h = a_h + skew, ZERO, dl
            elif stabilizer(ah.lam).member(spread):
                gap = ah.offset - ag.offset - dr
                a_g, a_h = ZERO, dr
                b_g, b_h = (ZERO, gap) if gap >= ZERO else (-gap, ZERO)
            else:
                continue
            u = factor(wg, ONE + a_g, ag.length - b_g)
            if not equal(u, factor(wh, ONE + a_h, ah.length - b_h)):
                continue
            x = concat(pg, factor(wg, ONE, a_g))
            y = concat(factor(wg, ag.length - b_g + ONE, ag.length), qg)
            z = concat(ph, factor(wh, ONE, a_h))
            t = concat(factor(wh, ah.length - b_h + ONE, ah.length), qh)
            return x, canonical(u), y, z, t
    return None


def symmetric_split(u: Word) -> Optional[Tuple[Word, Word]]:
    """u = p q with q equal to its own involute"""
    blocks = flat_blocks(u)
    if len(blocks) != 1 or not isinstance(blocks[0], Atom):
        return None
    atom = blocks[0]
    for a in matching_rotations(atom.rho, involute(atom.lam)):
        q = canonical(factor(u, ONE + a, u.length))
        if equal(q, involute(q)):
            return canonical(factor(u, ONE, a)), q
    return None


class Preprocessor:
    """Applies the generator refinement rules until nothing changes"""

    def __init__(self, oracle: BaseGroupOracle, rounds: int = None):
        self.oracle = oracle
        self.rounds = rounds or LIMITS.preprocess_rounds
        self.gens: Dict[Word, None] = {}
        self.derivations: Dict[Word, Tuple[Word, ...]] = {}

    def known(self, w: Word) -> bool:
        return w in self.gens or w in self.derivations

    def add(self, w: Word) -> bool:
        w = canonical(w)
        if w.is_empty or self.known(w):
            return False
        self.gens[w] = None
        return True

    def replace(self, g: Word, parts: Iterable[Word]) -> bool:
        """Record g as the product of parts, mirrored for the involute"""
        parts = tuple(canonical(p) for p in parts if not p.is_empty)
        if parts == (g,) or g not in self.gens:
            return False
        gbar = canonical(involute(g))
        self.derivations[g] = parts
        self.gens.pop(g, None)
        if gbar != g:
            self.derivations[gbar] = tuple(canonical(involute(p)) for p in reversed(parts))
            self.gens.pop(gbar, None)
        for p in parts:
            self.add(p)
            self.add(involute(p))
        logger.debug(f"split {g} into {len(parts)} parts")
        return True

    def close_involution(self) -> bool:
        changed = False
        for g in list(self.gens):
            changed = self.add(involute(g)) or changed
        return changed

    def split_products(self) -> bool:
        """Finite words into letters, words with several top atoms after the first"""
        changed = False
        for g in list(self.gens):
            if g not in self.gens:
                continue
            if g.is_finite:
                if g.length > ONE:
                    changed = self.replace(g, [word([x]) for x in letters_of(g)]) or changed
                continue
            blocks = g.blocks
            tops = [i for i, b in enumerate(blocks) if isinstance(b, Atom) and b.level == g.degree]
            if len(tops) > 1:
                k = tops[0]
                changed = self.replace(g, [Word(blocks[:k + 1]), Word(blocks[k + 1:])]) or changed
        return changed

    def merge_cores(self) -> bool:
        """Cut two generators around a shared top-degree core"""
        infinite = [g for g in self.gens if g.degree >= 1]
        for g in infinite:
            for h in infinite:
                if g == h or g not in self.gens or h not in self.gens:
                    continue
                if equal(h, involute(g)):
                    continue
                core = find_common_core(g, h)
                if core is None:
                    continue
                x, u, y, z, t = core
                if x.is_empty and y.is_empty and z.is_empty and t.is_empty:
                    continue
                changed = self.replace(g, [x, u, y])
                changed = self.replace(h, [z, u, t]) or changed
                if changed:
                    return True
        return False

    def split_symmetric(self) -> bool:
        """g and its involute share a core ending in a self-involute word"""
        for g in [g for g in self.gens if g.degree >= 1]:
            if g not in self.gens or equal(g, involute(g)):
                continue
            core = find_common_core(g, canonical(involute(g)))
            if core is None:
                continue
            x, u, y, _, _ = core
            halves = symmetric_split(u)
            if halves is None:
                continue
            p, q = halves
            if self.replace(g, [x, p, q, y]):
                return True
        return False

    def split_periods(self) -> bool:
        """g = P A Q where A has periods g lacks"""
        changed = False
        for g in list(self.gens):
            if g not in self.gens or g.degree < 1:
                continue
            parts = split_top(g)
            if parts is None:
                continue
            p, atom, q = parts
            if p.is_empty and q.is_empty:
                continue
            core = Word([atom])
            if not proper_period_lattice(g).contains(proper_period_lattice(core)):
                changed = self.replace(g, [p, core, q]) or changed
        return changed

    def close_boundaries(self) -> bool:
        """Atoms of every boundary word become generators"""
        changed = False
        for g in list(self.gens):
            if g.degree < 1:
                continue
            for beta in proper_period_lattice(g).basis():
                prefix = factor(g, ONE, beta)
                suffix = factor(g, g.length - beta + ONE, g.length)
                for piece in (prefix, suffix):
                    for block in canonical(piece).blocks:
                        if isinstance(block, Atom):
                            changed = self.add(Word([block])) or changed
        return changed

    def run(self, inputs: List[Word]) -> GeneratorTable:
        for x in self.oracle.alphabet:
            self.add(word([x]))
        for w in inputs:
            self.add(w)
        for n in range(self.rounds):
            changed = self.close_involution()
            changed = self.split_products() or changed
            changed = self.merge_cores() or changed
            changed = self.split_symmetric() or changed
            changed = self.split_periods() or changed
            changed = self.close_boundaries() or changed
            if not changed:
                logger.info(f"Preprocessing settled after {n + 1} rounds: {len(self.gens)} generators")
                break
        else:
            logger.warning(f"Preprocessing did not settle within {self.rounds} rounds")
            raise CapExceededError(f"preprocessing exceeds {self.rounds} rounds", self.rounds)
        return GeneratorTable(self.oracle, self.gens, self.derivations, inputs)


def check_inputs(inputs: Iterable[Word], oracle: BaseGroupOracle) -> List[Word]:
    """Canonical forms of the inputs; finite ones reduced in G, the rest checked for G-reducedness"""
    checked = []
    for w in inputs:
        w = canonical(w)
        if w.is_finite:
            w = canonical(oracle.normal_word(w))
            if not w.is_empty:
                checked.append(w)
            continue
        LIMITS.check_degree(w.degree, "input word")
        if oracle.is_finite_group:
            raise NotReducedError(f"{w} is infinite; a finite group has no infinite G-reduced words")
        verdict = is_g_reduced(w, oracle)
        if verdict == Verdict.NO:
            raise NotReducedError(f"{w} is not G-reduced")
        if verdict == Verdict.UNKNOWN:
            logger.warning(f"G-reducedness of {w} is undecided; continuing")
        checked.append(w)
    return checked


def preprocess(inputs: Iterable[Word], oracle: BaseGroupOracle, rounds: int = None) -> GeneratorTable:
    """Generator table for the given G-reduced input words"""
    words = check_inputs(inputs, oracle)
    if oracle.is_finite_group:
        letters = [word([x]) for x in oracle.alphabet]
        derivations = {w: tuple(word([x]) for x in letters_of(w))
                       for w in words if w.length > ONE}
        return GeneratorTable(oracle, letters, derivations, words)
    return Preprocessor(oracle, rounds).run(words)
