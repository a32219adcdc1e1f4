#!/usr/bin/env python3
"""
Test suite for the ExtWords extension group
"""

import unittest
import sys
import os
import random
import tempfile
from itertools import combinations

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from constructions.builders import ray_pair, w_m, x_d, x_infty
from exponents.exponent import BOTTOM
from extension.element import ExtElement
from extension.membership import membership_via_commutation
from extension.preprocess import preprocess, split_top, symmetric_split, check_inputs
from extension.reduce import reduced_degree, is_trivial, ext_equal, in_filtration, order_probe
from extension.table import GeneratorTable
from extension.torsion import symmetric_witness
from groups.abelian import FreeAbelian
from groups.finite_table import FiniteTable
from groups.free_group import FreeGroup
from utils.errors import DomainError, InvalidInputError, NotReducedError, OracleError
from words.canonical import concat
from words.compare import equal
from words.reduced import is_cyclically_reduced
from words.word import EMPTY, expand_letters, involute, word
from tests.test_groups import cyclic_three


def letters(text: str) -> ExtElement:
    """One factor per letter"""
    return ExtElement([word([x]) for x in word(text).blocks[0].letters] if text else [])


class SilentFreeGroup(FreeGroup):
    """Free group whose membership oracle never finds a power"""

    def cyclic_member(self, u, v):
        return None


class BoastfulFreeGroup(FreeGroup):
    """Free group whose membership oracle always claims the third power"""

    def cyclic_member(self, u, v):
        return 3


class TestElements(unittest.TestCase):
    """Test cases for the product representation"""

    def setUp(self):
        """Set up test fixtures"""
        self.ray = ray_pair('a', 'b')
        self.x = ExtElement([self.ray, word('b')])

    def test_empty_factors_dropped(self):
        """Test that empty words do not become factors"""
        self.assertEqual(len(ExtElement([EMPTY, word('a'), EMPTY]).factors), 1)
        self.assertEqual(ExtElement().degree, BOTTOM)

    def test_inverse_and_powers(self):
        """Test involution of factor lists"""
        inverse = self.x.inverse()
        self.assertEqual(inverse.factors[0], word('~b'))
        self.assertTrue(equal(inverse.factors[1], involute(self.ray)))
        self.assertEqual(len((self.x ** 3).factors), 6)
        self.assertEqual((self.x ** -1).factors, inverse.factors)
        self.assertEqual((self.x ** 0).factors, [])

    def test_degree(self):
        """Test the unreduced degree"""
        self.assertEqual(self.x.degree, 1)
        self.assertEqual(self.x.word.length, self.ray.length + 1)


class TestWordProblem(unittest.TestCase):
    """Test cases for reduced degree, triviality and equality"""

    def setUp(self):
        """Set up test fixtures"""
        self.free = FreeGroup(['a', 'b'])
        self.ray = ray_pair('a', 'b')
        self.rng = random.Random(5)

    def test_conjugation_cancels(self):
        """Test t b ~t = a for t = [a...)(...b]"""
        x = ExtElement([self.ray, word('b'), involute(self.ray)])
        degree, witness = reduced_degree(x, self.free)
        self.assertEqual(degree, 0)
        self.assertTrue(equal(witness, word('a')))
        self.assertTrue(ext_equal(x, ExtElement([word('a')]), self.free))

    def test_non_cancelling_pair(self):
        """Test that t a ~t keeps degree one"""
        x = ExtElement([self.ray, word('a'), involute(self.ray)])
        degree, _ = reduced_degree(x, self.free)
        self.assertEqual(degree, 1)
        self.assertFalse(ext_equal(x, ExtElement([word('b')]), self.free))

    def test_conjugation_by_a_power_ray(self):
        """Test that V = [a...)(...a] commutes with a but keeps b at degree one"""
        v = ray_pair('a', 'a')
        self.assertTrue(is_trivial(ExtElement([v, word('a'), involute(v), word('~a')]), self.free))
        degree, _ = reduced_degree(ExtElement([v, word('b'), involute(v)]), self.free)
        self.assertEqual(degree, 1)

    def test_filtration(self):
        """Test membership in the degree filtration"""
        x = ExtElement([self.ray, word('b'), involute(self.ray)])
        self.assertTrue(in_filtration(x, 0, self.free))
        self.assertFalse(in_filtration(ExtElement([self.ray]), 0, self.free))
        self.assertTrue(in_filtration(ExtElement([self.ray]), 1, self.free))

    def test_commutator_with_itself(self):
        """Test [x, x] = 1"""
        x = ExtElement([self.ray, word('ab')])
        self.assertTrue(is_trivial(x.commutator(x), self.free))
        self.assertTrue(is_trivial(x * x.inverse(), self.free))

    def random_text(self, longest: int) -> str:
        return ''.join(self.rng.choice(['a', 'b', '~a', '~b']) for _ in range(self.rng.randint(0, longest)))

    def element(self, text: str) -> ExtElement:
        """The word as one factor or one factor per letter"""
        if self.rng.random() < 0.5:
            return letters(text)
        return ExtElement([word(text)] if text else [])

    def test_embedding_of_free_group(self):
        """Test that equality of finite words agrees with the base group"""
        for _ in range(1000):
            u, v = self.random_text(6), self.random_text(6)
            expected = self.free.equal(expand_letters(word(u)), expand_letters(word(v)))
            self.assertEqual(ext_equal(self.element(u), self.element(v), self.free), expected)

    def test_embedding_of_abelian_group(self):
        """Test that equality of finite words agrees with Z^2"""
        abelian = FreeAbelian(2)
        for _ in range(1000):
            u, v = self.random_text(6), self.random_text(6)
            expected = abelian.equal(expand_letters(word(u)), expand_letters(word(v)))
            self.assertEqual(ext_equal(self.element(u), self.element(v), abelian), expected)

    def test_unreduced_finite_factors(self):
        """Test that finite factors are reduced in G instead of rejected"""
        abelian = FreeAbelian(2)
        for group in (self.free, abelian):
            self.assertTrue(ext_equal(ExtElement([word('a~a')]), ExtElement(), group))
            self.assertTrue(is_trivial(ExtElement([word('ab~b~a')]), group))
            self.assertEqual(check_inputs([word('a~a'), word('b~aa')], group), [word('b')])
        self.assertTrue(is_trivial(ExtElement([word('ab~a~b')]), abelian))
        self.assertFalse(is_trivial(ExtElement([word('ab~a~b')]), self.free))
        x = ExtElement([self.ray, word('b~aa'), involute(self.ray)])
        self.assertTrue(ext_equal(x, ExtElement([word('a')]), self.free))

    def test_inconsistent_oracle(self):
        """Test that a membership answer contradicting the letters raises OracleError"""
        x = ExtElement([self.ray, word('b'), involute(self.ray)])
        for oracle in (SilentFreeGroup(['a', 'b']), BoastfulFreeGroup(['a', 'b'])):
            with self.assertRaises(OracleError):
                reduced_degree(x, oracle)

    def test_reduced_inputs_required(self):
        """Test that a freely unreduced factor is rejected"""
        with self.assertRaises(NotReducedError):
            reduced_degree(ExtElement([concat(self.ray, word('~b'))]), self.free)

    def test_finite_base_group(self):
        """Test that a finite group keeps only finite words"""
        group = FiniteTable(cyclic_three())
        self.assertTrue(is_trivial(ExtElement([word('r')] * 3), group))
        with self.assertRaises(DomainError):
            reduced_degree(ExtElement([ray_pair('r', 'r')]), group)
        with self.assertRaises(NotReducedError):
            check_inputs([ray_pair('r', 'r')], group)


class TestTorsion(unittest.TestCase):
    """Test cases for elements of order two"""

    def setUp(self):
        """Set up test fixtures"""
        self.free = FreeGroup(['a', 'b'])
        self.rng = random.Random(13)

    def test_w_m_has_order_two(self):
        """Test the order of w_m for small m"""
        for m in range(-5, 6):
            self.assertEqual(order_probe(ExtElement([w_m(m)]), 4, self.free), 2)

    def test_w_m_pairwise_distinct(self):
        """Test that different offsets give different elements"""
        for m, n in combinations(range(-5, 6), 2):
            self.assertFalse(ext_equal(ExtElement([w_m(m)]), ExtElement([w_m(n)]), self.free))

    def test_x_infty(self):
        """Test x_inf of order two inverting x"""
        big = x_infty('ab', self.free)
        self.assertEqual(order_probe(ExtElement([big]), 4, self.free), 2)
        x = word('ab')
        self.assertTrue(ext_equal(ExtElement([x, big]), ExtElement([big, involute(x)]), self.free))

    def test_x_infty_decomposition(self):
        """Test x = (x x_inf) x_inf for random cyclically reduced x"""
        found = 0
        while found < 10:
            raw = [self.rng.choice(self.free.alphabet) for _ in range(self.rng.randint(1, 4))]
            x = self.free.normal_word(word(raw))
            if x.is_empty or not is_cyclically_reduced(x):
                continue
            found += 1
            big = x_infty(x, self.free)
            self.assertTrue(ext_equal(ExtElement([x]), ExtElement([x, big, big]), self.free))
            self.assertEqual(order_probe(ExtElement([x, big]), 2, self.free), 2)

    def test_ray_pair_is_torsion_free(self):
        """Test that a plain ray pair has no small order"""
        self.assertIsNone(order_probe(ExtElement([ray_pair('a', 'b')]), 5, self.free))
        with self.assertRaises(DomainError):
            order_probe(ExtElement([word('a')]), 0, self.free)

    def test_symmetric_witness(self):
        """Test that a w0 a is conjugate to a symmetric word"""
        y = symmetric_witness(ExtElement([word('a'), w_m(0), word('a')]), self.free)
        self.assertIsNotNone(y)
        self.assertTrue(equal(y, involute(y)))
        self.assertTrue(equal(y, w_m(2)))
        self.assertIsNone(symmetric_witness(ExtElement([ray_pair('a', 'b')]), self.free))
        self.assertEqual(symmetric_witness(ExtElement([word('a'), word('~a')]), self.free), EMPTY)


class TestDegreeTower(unittest.TestCase):
    """Test cases for the x_d family"""

    def setUp(self):
        """Set up test fixtures"""
        self.free = FreeGroup(['a', 'b'])
        self.tower = [word('ab'), x_d('ab', 1, self.free), x_d('ab', 2, self.free)]

    def test_pairwise_commute(self):
        """Test that x, x_1 and x_2 commute"""
        for i in range(3):
            for j in range(i + 1, 3):
                xi, xj = ExtElement([self.tower[i]]), ExtElement([self.tower[j]])
                self.assertTrue(is_trivial(xi.commutator(xj), self.free))

    def test_monomials_nontrivial(self):
        """Test that nonzero exponent vectors give nontrivial products"""
        rng = random.Random(17)
        samples = [(1, -1, 0), (0, 2, -1), (3, 0, 1), (-2, 1, 1), (1, 0, 0)]
        while len(samples) < 20:
            coeffs = tuple(rng.randint(-3, 3) for _ in range(3))
            if any(coeffs):
                samples.append(coeffs)
        for coeffs in samples:
            x = ExtElement()
            for g, c in zip(self.tower, coeffs):
                x = x * ExtElement([g]) ** c
            self.assertFalse(is_trivial(x, self.free))


class TestMembership(unittest.TestCase):
    """Test cases for cyclic membership through commutation"""

    def setUp(self):
        """Set up test fixtures"""
        self.free = FreeGroup(['a', 'b'])
        self.rng = random.Random(9)

    def test_powers(self):
        """Test members and non-members"""
        self.assertTrue(membership_via_commutation('aa', 'a', self.free))
        self.assertTrue(membership_via_commutation('~b~a~b~a', 'ab', self.free))
        self.assertFalse(membership_via_commutation('b', 'a', self.free))
        self.assertFalse(membership_via_commutation('ba', 'ab', self.free))

    def test_agrees_with_oracle(self):
        """Test agreement with cyclic_member on random words"""
        for _ in range(200):
            v = self.rng.choice(('a', 'ab', 'a~b', 'aab'))
            k = self.rng.randint(-2, 2)
            u = word(v) if k > 0 else involute(word(v))
            u = concat(*([u] * abs(k))) if k else EMPTY
            if self.rng.random() < 0.5:
                u = concat(u, word(self.rng.choice(['a', 'b'])))
            u = self.free.normal_word(u)
            expected = self.free.cyclic_member(expand_letters(u), expand_letters(word(v))) is not None
            self.assertEqual(membership_via_commutation(u, v, self.free), expected)

    def test_invalid_generator(self):
        """Test that v must be primitive and cyclically reduced"""
        with self.assertRaises(InvalidInputError):
            membership_via_commutation('a', 'aa', self.free)
        with self.assertRaises(InvalidInputError):
            membership_via_commutation('a', 'ab~a', self.free)
        with self.assertRaises(InvalidInputError):
            membership_via_commutation('a', '', self.free)


class TestPreprocessing(unittest.TestCase):
    """Test cases for the generator table"""

    def setUp(self):
        """Set up test fixtures"""
        self.free = FreeGroup(['a', 'b'])
        self.ray = ray_pair('a', 'b')

    def test_split_top(self):
        """Test the split around the top atom"""
        p, atom, q = split_top(concat(word('b'), self.ray, word('a')))
        self.assertEqual(p, word('b'))
        self.assertEqual(q, word('a'))
        self.assertEqual(atom.level, 1)
        self.assertIsNone(split_top(word('ab')))

    def test_symmetric_split(self):
        """Test splitting off a self-inverse tail"""
        p, q = symmetric_split(w_m(0))
        self.assertTrue(equal(q, involute(q)))
        self.assertTrue(equal(concat(p, q), w_m(0)))
        self.assertIsNone(symmetric_split(self.ray))

    def test_table_closed_under_involution(self):
        """Test that every generator has its involute in the table"""
        table = preprocess([self.ray, concat(self.ray, self.ray)], self.free)
        for g in table.generators:
            self.assertIn(involute(g), table)
        self.assertEqual(table.factorize(concat(self.ray, self.ray)), [self.ray, self.ray])

    def test_table_persistence(self):
        """Test saving and loading a table"""
        table = preprocess([self.ray], self.free)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'table.json')
            table.save(path)
            loaded = GeneratorTable.load(path, self.free)
            self.assertEqual(len(loaded), len(table))
            self.assertEqual(loaded.lattice(self.ray), table.lattice(self.ray))
            x = ExtElement([self.ray, word('b'), involute(self.ray)])
            self.assertTrue(ext_equal(x, ExtElement([word('a')]), self.free, loaded))
            with self.assertRaises(InvalidInputError):
                GeneratorTable.load(path, FreeGroup(['a', 'b', 'c']))


if __name__ == '__main__':
    unittest.main()
