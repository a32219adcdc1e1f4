#!/usr/bin/env python3
"""
Test suite for ExtWords base group oracles
"""

import unittest
import sys
import os
import json
import tempfile

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from groups.abelian import FreeAbelian, CyclicZ
from groups.factory import parse_group_spec
from groups.finite_table import FiniteTable
from groups.free_group import FreeGroup
from rewriting.reducedness import Verdict, is_g_reduced
from utils.errors import ForeignLetterError, InvalidInputError
from words.word import invert_letter, word


def cyclic_three():
    """Z/3 on the letter r"""
    add = {('e', 'e'): 'e', ('e', 'x'): 'x', ('e', 'y'): 'y',
           ('x', 'e'): 'x', ('x', 'x'): 'y', ('x', 'y'): 'e',
           ('y', 'e'): 'y', ('y', 'x'): 'e', ('y', 'y'): 'x'}
    return {
        'elements': ['e', 'x', 'y'],
        'identity': 'e',
        'table': {f"{p},{q}": r for (p, q), r in add.items()},
        'generators': {'r': 'x', '~r': 'y'},
    }


def order_two():
    """Z/2 on the letter a, with no separate inverse letter"""
    return {
        'elements': ['e', 'g'],
        'identity': 'e',
        'table': {'e,e': 'e', 'e,g': 'g', 'g,e': 'g', 'g,g': 'e'},
        'generators': {'a': 'g'},
    }


class TestFreeGroup(unittest.TestCase):
    """Test cases for the free group oracle"""

    def setUp(self):
        """Set up test fixtures"""
        self.group = FreeGroup(['a', 'b'])

    def test_alphabet(self):
        """Test that every generator brings its inverse letter"""
        self.assertEqual(self.group.alphabet, ['a', '~a', 'b', '~b'])
        self.assertEqual(self.group.rank, 2)

    def test_normal_form(self):
        """Test free reduction"""
        self.assertEqual(self.group.normal_form(['a', 'b', '~b', '~a', 'a']), ('a',))
        self.assertEqual(self.group.normal_form(['a', '~a']), ())
        self.assertTrue(self.group.is_trivial(['b', 'a', '~a', '~b']))
        self.assertTrue(self.group.equal(['a', 'b', '~b'], ['a']))

    def test_normal_form_cancels_inverse_pairs(self):
        """Test that a b ~b ~a is the identity"""
        self.assertEqual(self.group.normal_form(('a', 'b', '~b', '~a')), ())
        self.assertEqual(self.group.normal_word(word('a b ~b')), word('a'))

    def test_foreign_letter(self):
        """Test that letters outside the alphabet are rejected"""
        with self.assertRaises(ForeignLetterError):
            self.group.normal_form(['c'])

    def test_cyclic_member(self):
        """Test u in <v> with the witness exponent"""
        self.assertEqual(self.group.cyclic_member(('a', 'b', 'a', 'b'), ('a', 'b')), 2)
        self.assertEqual(self.group.cyclic_member(('~b', '~a'), ('a', 'b')), -1)
        self.assertEqual(self.group.cyclic_member((), ('a', 'b')), 0)
        self.assertIsNone(self.group.cyclic_member(('a',), ('a', 'b')))

    def test_cyclic_member_with_proper_power(self):
        """Test membership in the subgroup generated by a proper power"""
        self.assertEqual(self.group.cyclic_member(('a',) * 4, ('a', 'a')), 2)
        self.assertIsNone(self.group.cyclic_member(('a',), ('a', 'a')))

    def test_cyclic_member_conjugated(self):
        """Test membership for a conjugated generator"""
        self.assertEqual(self.group.cyclic_member(('b', 'a', 'a', '~b'), ('b', 'a', '~b')), 2)

    def test_local_geodesics(self):
        """Test that reduced windows are geodesic"""
        self.assertTrue(self.group.is_local_geodesic_window(('a', 'b')))
        self.assertFalse(self.group.is_local_geodesic_window(('a', '~a')))

    def test_normal_word(self):
        """Test the lift of normal forms to words"""
        self.assertEqual(self.group.normal_word(word('ab~ba')), word('aa'))


class TestAbelian(unittest.TestCase):
    """Test cases for free abelian oracles"""

    def setUp(self):
        """Set up test fixtures"""
        self.group = FreeAbelian(2)

    def test_normal_form(self):
        """Test the sorted normal form"""
        self.assertEqual(self.group.normal_form(('b', 'a', '~b')), ('a',))
        self.assertEqual(self.group.normal_form(('~a', 'b')), ('b', '~a'))
        self.assertEqual(self.group.vector(('a', 'a', '~b')), [2, -1])

    def test_cyclic_member(self):
        """Test membership against the exponent vectors"""
        self.assertEqual(self.group.cyclic_member(('a', 'a', 'b', 'b'), ('a', 'b')), 2)
        self.assertEqual(self.group.cyclic_member(('~a', '~b'), ('b', 'a')), -1)
        self.assertIsNone(self.group.cyclic_member(('a',), ('a', 'b')))

    def test_local_geodesic_window(self):
        """Test that a window is geodesic iff no letter meets its inverse"""
        self.assertTrue(self.group.is_local_geodesic_window(('a', 'b', 'a')))
        self.assertFalse(self.group.is_local_geodesic_window(('a', 'b', '~a')))

    def test_rank_bounds(self):
        """Test the rank range"""
        with self.assertRaises(InvalidInputError):
            FreeAbelian(0)

    def test_cyclic(self):
        """Test the infinite cyclic group"""
        group = CyclicZ()
        self.assertEqual(group.name, 'cyclic')
        self.assertEqual(group.cyclic_member(('a', 'a', 'a'), ('~a',)), -3)


class TestFiniteTable(unittest.TestCase):
    """Test cases for multiplication-table groups"""

    def setUp(self):
        """Set up test fixtures"""
        self.group = FiniteTable(cyclic_three())

    def test_normal_form(self):
        """Test shortest words for the elements"""
        self.assertTrue(self.group.is_finite_group)
        self.assertEqual(self.group.normal_form(('r', 'r', 'r')), ())
        self.assertEqual(self.group.normal_form(('r', 'r')), ('~r',))

    def test_cyclic_member(self):
        """Test powers of a generator"""
        self.assertEqual(self.group.cyclic_member(('~r',), ('r',)), 2)
        self.assertEqual(self.group.cyclic_member((), ('r',)), 0)

    def test_missing_inverse_letter(self):
        """Test that a letter of order three needs an inverse letter"""
        data = cyclic_three()
        del data['generators']['~r']
        with self.assertRaises(InvalidInputError):
            FiniteTable(data)

    def test_order_two_letter(self):
        """Test that an involution letter gets a formal inverse of the same image"""
        group = FiniteTable(order_two())
        self.assertIn('~a', group.alphabet)
        self.assertEqual(group.normal_form(('a', 'a')), ())
        self.assertEqual(group.evaluate(('~a',)), group.evaluate(('a',)))

    def test_other_oracles_unaffected(self):
        """Test that building a table group leaves free-group inversion alone"""
        FiniteTable(order_two())
        free = FreeGroup(['a', 'b'])
        self.assertEqual(free.normal_form(('a', 'a')), ('a', 'a'))
        self.assertEqual(is_g_reduced(word('aa'), free), Verdict.YES)
        self.assertEqual(invert_letter('a'), '~a')

    def test_from_file(self):
        """Test loading a table from JSON"""
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'z3.json')
            with open(path, 'w', encoding='utf-8') as f:
                json.dump(cyclic_three(), f)
            group = FiniteTable.from_file(path)
            self.assertEqual(group.name, f"table:{path}")
            with self.assertRaises(InvalidInputError):
                FiniteTable.from_file(os.path.join(tmp, 'missing.json'))


class TestFactory(unittest.TestCase):
    """Test cases for group specifiers"""

    def setUp(self):
        """Set up test fixtures"""
        self.specs = ['free:a,b', 'abelian:3', 'cyclic']

    def test_known_specifiers(self):
        """Test each specifier kind"""
        free, abelian, cyclic = (parse_group_spec(s) for s in self.specs)
        self.assertIsInstance(free, FreeGroup)
        self.assertEqual(abelian.rank, 3)
        self.assertIsInstance(cyclic, CyclicZ)

    def test_bad_specifiers(self):
        """Test that malformed specifiers raise InvalidInputError"""
        for spec in ('free:', 'abelian:x', 'nonsense', 'free:~a'):
            with self.assertRaises(InvalidInputError):
                parse_group_spec(spec)


if __name__ == '__main__':
    unittest.main()
