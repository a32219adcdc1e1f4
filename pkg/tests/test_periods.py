#!/usr/bin/env python3
"""
Test suite for ExtWords period lattices
"""

import unittest
import sys
import os
import random

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from constructions.builders import ray_pair
from exponents.exponent import Exponent
from periods.lattice import PeriodLattice, trivial_lattice, lattice_member, lattice_intersect
from periods.periods import (stabilizer, minimal_period, is_period, proper_period_lattice, boundary_words,
                             primitive_root_length)
from shell.demos import shift_word
from utils.errors import DegreeBoundError, InvalidInputError, NotAPeriodError
from words.compare import equal
from words.word import EMPTY, word, concat_raw


class TestPeriodLattice(unittest.TestCase):
    """Test cases for HNF lattices"""

    def setUp(self):
        """Set up test fixtures"""
        self.t = Exponent.t_power(1)
        self.rng = random.Random(3)

    def test_gcd_of_generators(self):
        """Test that one-dimensional generators collapse to their gcd"""
        lattice = PeriodLattice(1, [Exponent([4]), Exponent([6])])
        self.assertEqual(lattice.basis(), [Exponent([2])])

    def test_hnf_rows_reduced(self):
        """Test that off-diagonal entries land in [0, pivot)"""
        lattice = PeriodLattice(2, [Exponent([3, 1]), Exponent([2])])
        self.assertEqual(lattice.basis(), [Exponent([2]), Exponent([1, 1])])
        self.assertEqual(lattice.row(1), Exponent([1, 1]))

    def test_member(self):
        """Test back-substitution membership"""
        lattice = PeriodLattice(2, [Exponent([3, 1]), Exponent([2])])
        self.assertTrue(lattice.member(Exponent([5, 3])))
        self.assertFalse(lattice.member(self.t))
        self.assertFalse(lattice.member(Exponent([0, 0, 1])))
        self.assertTrue(lattice_member(lattice, Exponent([1, 1]) + Exponent([2])))

    def test_closed_under_subtraction(self):
        """Test that differences of random members stay members"""
        lattice = PeriodLattice(2, [Exponent([3, 2]), Exponent([4])])
        basis = lattice.basis()
        for _ in range(100):
            u = sum((b * self.rng.randint(-5, 5) for b in basis), Exponent())
            v = sum((b * self.rng.randint(-5, 5) for b in basis), Exponent())
            self.assertTrue(lattice.member(u - v))

    def test_intersect(self):
        """Test the meet of two cyclic lattices"""
        meet = PeriodLattice(1, [Exponent([2])]).intersect(PeriodLattice(1, [Exponent([3])]))
        self.assertEqual(meet.basis(), [Exponent([6])])
        self.assertTrue(PeriodLattice(1, [Exponent([2])]).contains(meet))
        self.assertEqual(lattice_intersect(PeriodLattice(1, [Exponent([4])]), PeriodLattice(1, [Exponent([6])])).basis(),
                         [Exponent([12])])

    def test_degree_bound(self):
        """Test that vectors above the bound are rejected"""
        with self.assertRaises(DegreeBoundError):
            PeriodLattice(1, [self.t])

    def test_json_rows(self):
        """Test the row-list format"""
        lattice = PeriodLattice(2, [Exponent([3, 1]), Exponent([2])])
        self.assertEqual(lattice.to_json(), [[2], [1, 1]])
        self.assertEqual(PeriodLattice.from_json(2, lattice.to_json()), lattice)


class TestWordPeriods(unittest.TestCase):
    """Test cases for stabilizers and proper periods of words"""

    def setUp(self):
        """Set up test fixtures"""
        self.t = Exponent.t_power(1)

    def test_primitive_root(self):
        """Test primitive root lengths of letter runs"""
        self.assertEqual(primitive_root_length('abab'), 2)
        self.assertEqual(primitive_root_length('aba'), 3)
        self.assertEqual(primitive_root_length('aaaa'), 1)

    def test_stabilizer_of_finite_pattern(self):
        """Test the stabilizer of a finite ray pattern"""
        self.assertEqual(stabilizer(word('abab')).basis(), [Exponent([2])])
        self.assertEqual(minimal_period(word('abcabc')), Exponent([3]))

    def test_ray_pair_periods(self):
        """Test proper periods of ray pairs"""
        self.assertEqual(proper_period_lattice(ray_pair('a', 'b')).basis(), [Exponent([1])])
        self.assertEqual(proper_period_lattice(ray_pair('a', 'ab')).basis(), [Exponent([2])])
        self.assertEqual(proper_period_lattice(ray_pair('ab', 'aba')).basis(), [Exponent([6])])

    def test_shift_word_periods(self):
        """Test the two-atom word with proper periods 2Z"""
        self.assertEqual(proper_period_lattice(shift_word()).basis(), [Exponent([2])])

    def test_is_period(self):
        """Test the defining shift condition"""
        w = ray_pair('a', 'ab')
        self.assertTrue(is_period(w, 2))
        self.assertTrue(is_period(w, -4))
        self.assertFalse(is_period(w, 1))
        self.assertTrue(is_period(word('abab'), 2))

    def test_finite_words_have_trivial_lattice(self):
        """Test that a finite word has no proper periods"""
        self.assertTrue(proper_period_lattice(word('abab')).is_trivial)
        self.assertTrue(trivial_lattice().is_trivial)
        with self.assertRaises(InvalidInputError):
            proper_period_lattice(EMPTY)

    def test_boundary_words(self):
        """Test r g = g s for a proper period"""
        g = ray_pair('a', 'ab')
        r, s = boundary_words(g, Exponent([2]))
        self.assertTrue(equal(r, word('aa')))
        self.assertTrue(equal(s, word('ab')))
        self.assertTrue(equal(concat_raw(r, g), concat_raw(g, s)))
        with self.assertRaises(NotAPeriodError):
            boundary_words(g, Exponent([1]))


if __name__ == '__main__':
    unittest.main()
