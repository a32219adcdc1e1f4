#!/usr/bin/env python3
"""
Test suite for ExtWords constructions: ray pairs, towers, HNN extensions and cdr
"""

import unittest
import sys
import os
import random

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from constructions.builders import (ray_pair, w_m, x_d, x_infty, is_primitive, hnn_stable_letter,
                                    arbitrary_reduced_word)
from constructions.cdr import cdr_decompose, cdr_product
from exponents.exponent import Exponent
from extension.element import ExtElement
from extension.reduce import ext_equal, is_trivial, order_probe
from groups.abelian import FreeAbelian
from groups.finite_table import FiniteTable
from groups.free_group import FreeGroup
from rewriting.reducedness import Verdict, is_g_reduced
from tests.test_groups import cyclic_three
from utils.errors import DegreeBoundError, DomainError, UnsupportedGroupError
from words.canonical import concat
from words.compare import equal
from words.word import EMPTY, expand_letters, involute, word


def e(*words):
    return ExtElement(words)


class TestBuilders(unittest.TestCase):
    """Test cases for the word builders"""

    def setUp(self):
        """Set up test fixtures"""
        self.free = FreeGroup(['a', 'b'])
        self.t = Exponent.t_power(1)

    def test_w_m_is_self_involute(self):
        """Test w_m = ~w_m with length t + m"""
        for m in (-3, 0, 4):
            w = w_m(m)
            self.assertTrue(equal(w, involute(w)))
            self.assertEqual(w.length, self.t + m)

    def test_x_d_tower(self):
        """Test degrees and the first step of the tower"""
        self.assertTrue(equal(x_d('ab', 1, self.free), ray_pair('ab', 'ab')))
        self.assertEqual(x_d('ab', 2, self.free).degree, 2)
        with self.assertRaises(DomainError):
            x_d('ab~a', 1, self.free)
        with self.assertRaises(DomainError):
            x_d('ab', 0, self.free)
        with self.assertRaises(DegreeBoundError):
            x_d('ab', 4, self.free)

    def test_x_infty(self):
        """Test the order-two partner of x"""
        big = x_infty('ab', self.free)
        self.assertTrue(equal(big, ray_pair('ab', '~b~a')))
        x = word('ab')
        self.assertEqual(order_probe(e(x, big), 4, self.free), 2)
        self.assertTrue(ext_equal(e(x), e(x, big, big), self.free))
        with self.assertRaises(UnsupportedGroupError):
            x_infty('a', FreeAbelian(2))

    def test_is_primitive(self):
        """Test proper powers and self-involute rotations"""
        self.assertTrue(is_primitive('ab'))
        self.assertTrue(is_primitive('aab'))
        self.assertFalse(is_primitive('abab'))
        self.assertFalse(is_primitive('a~a'))
        self.assertFalse(is_primitive(''))

    def test_arbitrary_reduced_word(self):
        """Test reduced words of a requested length"""
        alpha = Exponent([3, 1])
        w = arbitrary_reduced_word(self.free, alpha)
        self.assertEqual(w.length, alpha)
        self.assertEqual(is_g_reduced(w, self.free), Verdict.YES)
        self.assertEqual(arbitrary_reduced_word(self.free, 0), EMPTY)
        with self.assertRaises(UnsupportedGroupError):
            arbitrary_reduced_word(FiniteTable(cyclic_three()), alpha)
        with self.assertRaises(DomainError):
            arbitrary_reduced_word(self.free, -1)


class TestHNN(unittest.TestCase):
    """Test cases for stable letters"""

    def setUp(self):
        """Set up test fixtures"""
        self.free = FreeGroup(['a', 'b'])
        self.s = hnn_stable_letter('aa', 'bb', 'ab', self.free)

    def test_conjugation_relation(self):
        """Test s b b ~s = a a and a a s = s b b"""
        self.assertTrue(ext_equal(e(self.s, word('bb'), involute(self.s)), e(word('aa')), self.free))
        self.assertTrue(ext_equal(e(word('aa'), self.s), e(self.s, word('bb')), self.free))

    def test_no_extra_relation(self):
        """Test s b ~s != a"""
        self.assertFalse(ext_equal(e(self.s, word('b'), involute(self.s)), e(word('a')), self.free))

    def test_britton_reduced_words_nontrivial(self):
        """Test words without pinches"""
        s, sbar = self.s, involute(self.s)
        for factors in ([s, word('b'), sbar], [sbar, word('a'), s], [s, word('a'), s],
                        [s, word('ab'), sbar, word('b')]):
            self.assertFalse(is_trivial(e(*factors), self.free))

    def test_random_britton_reduced_words(self):
        """Test random words without pinches of up to four stable letters"""
        rng = random.Random(21)
        s, sbar = self.s, involute(self.s)
        checked = 0
        while checked < 50:
            signs = [rng.choice((1, -1)) for _ in range(rng.randint(1, 4))]
            gaps = []
            for _ in range(len(signs) + 1):
                raw = [rng.choice(self.free.alphabet) for _ in range(rng.randint(0, 3))]
                gaps.append(self.free.normal_word(word(raw)))
            pinched = False
            for i in range(len(signs) - 1):
                gap = expand_letters(gaps[i + 1])
                if signs[i] == -1 and signs[i + 1] == 1:
                    pinched = pinched or self.free.cyclic_member(gap, ('a', 'a')) is not None
                if signs[i] == 1 and signs[i + 1] == -1:
                    pinched = pinched or self.free.cyclic_member(gap, ('b', 'b')) is not None
            if pinched:
                continue
            checked += 1
            factors = [gaps[0]]
            for sign, gap in zip(signs, gaps[1:]):
                factors += [s if sign == 1 else sbar, gap]
            self.assertFalse(is_trivial(e(*factors), self.free))

    def test_bad_arguments(self):
        """Test length and primitivity checks"""
        with self.assertRaises(DomainError):
            hnn_stable_letter('a', 'bb', 'ab', self.free)
        with self.assertRaises(DomainError):
            hnn_stable_letter('ab', 'ba', 'aa', self.free)
        with self.assertRaises(UnsupportedGroupError):
            hnn_stable_letter('aa', 'bb', 'ab', FreeAbelian(2))


class TestSemidirect(unittest.TestCase):
    """Test cases for semidirect-product style elements"""

    def setUp(self):
        """Set up test fixtures"""
        self.free = FreeGroup(['a', 'b'])

    def test_inverting_letter(self):
        """Test a s1 = s1 ~a and s1 of order two"""
        s1 = ray_pair('a', '~a')
        self.assertTrue(ext_equal(e(word('a'), s1), e(s1, word('~a')), self.free))
        self.assertEqual(order_probe(e(s1), 4, self.free), 2)

    def test_torsion_free_product(self):
        """Test that [a...)(...a][a...)(...~a] has no small order"""
        s2 = concat(ray_pair('a', 'a'), ray_pair('a', '~a'))
        self.assertIsNone(order_probe(e(s2), 10, self.free))

    def test_squares_inverted(self):
        """Test ~s3 a a s3 = ~a ~a"""
        s3 = hnn_stable_letter('aa', '~a~a', 'ab', self.free)
        self.assertTrue(ext_equal(e(involute(s3), word('aa'), s3), e(word('~a~a')), self.free))


class TestCdr(unittest.TestCase):
    """Test cases for cyclically reduced decompositions"""

    def setUp(self):
        """Set up test fixtures"""
        self.free = FreeGroup(['a', 'b'])
        self.s = hnn_stable_letter('aa', 'bb', 'ab', self.free)

    def test_finite_decomposition(self):
        """Test c u ~c for a finite word"""
        x = cdr_decompose(word('ab~a'), self.free)
        self.assertTrue(equal(x.c, word('a')))
        self.assertTrue(equal(x.u, word('b')))
        self.assertIsNone(cdr_decompose(word('ab~ba'), self.free))
        self.assertEqual(cdr_decompose(EMPTY, self.free).u, EMPTY)

    def test_infinite_decomposition(self):
        """Test w0 b w0 with core b"""
        w0 = w_m(0)
        x = cdr_decompose(concat(w0, word('b'), w0), self.free)
        self.assertIsNotNone(x)
        self.assertTrue(equal(x.u, word('b')))
        self.assertTrue(equal(x.c, w0))

    def test_self_involute_pair_excluded(self):
        """Test that [a...)(...~a] has no decomposition"""
        self.assertIsNone(cdr_decompose(ray_pair('a', '~a'), self.free))

    def test_finite_products(self):
        """Test cancellation in the partial product"""
        product = cdr_product(cdr_decompose(word('ab')), cdr_decompose(word('~ba')), self.free)
        self.assertTrue(equal(product.x, word('aa')))
        empty = cdr_product(cdr_decompose(word('ab')), cdr_decompose(word('~b~a')), self.free)
        self.assertTrue(equal(empty.x, EMPTY))

    def test_products_with_stable_letter(self):
        """Test s * b defined and (s * b) * ~s undefined"""
        s = cdr_decompose(self.s, self.free)
        sb = cdr_product(s, cdr_decompose(word('b'), self.free), self.free)
        self.assertIsNotNone(sb)
        s_bar = cdr_decompose(involute(self.s), self.free)
        self.assertIsNotNone(s_bar)
        self.assertIsNone(cdr_product(sb, s_bar, self.free))

    def test_random_products(self):
        """Test that defined products decompose uniquely, agree with x y and have no torsion"""
        rng = random.Random(23)

        def sample():
            if rng.random() < 0.2:
                return rng.choice((self.s, involute(self.s)))
            raw = [rng.choice(self.free.alphabet) for _ in range(rng.randint(1, 5))]
            return self.free.normal_word(word(raw))

        for _ in range(100):
            x, y = cdr_decompose(sample(), self.free), cdr_decompose(sample(), self.free)
            if x is None or y is None:
                continue
            product = cdr_product(x, y, self.free)
            if product is None:
                continue
            self.assertTrue(ext_equal(e(product.x), e(x.x, y.x), self.free))
            again = cdr_decompose(product.x, self.free)
            self.assertTrue(equal(again.c, product.c))
            self.assertTrue(equal(again.u, product.u))
            self.assertTrue(equal(concat(product.c, product.u, involute(product.c)), product.x))
            if not product.x.is_empty:
                self.assertNotEqual(order_probe(e(product.x), 2, self.free), 2)

    def test_free_groups_only(self):
        """Test that other base groups are refused"""
        with self.assertRaises(UnsupportedGroupError):
            cdr_decompose(word('ab'), FreeAbelian(2))


if __name__ == '__main__':
    unittest.main()
