#!/usr/bin/env python
# -*- coding: utf-8 -*-

from hybridqc import exceptions
from hybridqc.sequences.catalogue import catalogue
from hybridqc.sequences.source import *
from hybridqc.sequences.substitution import Substitution, product_substitution
from hybridqc.tests import fixture


class TestFixedPointSource(fixture.Base):

    def test_window(self):
        tm = catalogue['tm'].source()
        self.assertEqual(str(tm.window(0, 16)), 'abbabaabbaababba')
        self.assertEqual(str(tm.window(3, 4)), 'abaa')
        self.assertEqual(len(tm.window(5000, 10)), 10)

    def test_growth_is_consistent(self):
        """A long window agrees with the short windows read before it"""
        fcc = catalogue['fcc'].source()
        short = str(fcc.window(0, 50))
        self.assertEqual(str(fcc.window(0, 10000))[:50], short)
        self.assertEqual(str(fcc.window(40, 10)), short[40:])

    def test_literal_map(self):
        pf = catalogue['pf'].source()
        self.assertEqual(str(pf.window(0, 8)), 'aabaabba')
        self.assertEqual(list(pf.alphabet), ['a', 'b'])

    def test_shared_instances(self):
        self.assertTrue(catalogue['tm'].source() is catalogue['tm'].source())
        self.assertFalse(catalogue['tm'].source() is
                         catalogue['pd'].source())

    def test_bad_seed(self):
        pd = catalogue['pd'].substitution
        self.assertRaises(exceptions.PreconditionError,
                          FixedPointSource, pd, 'b')

    def test_negative_window(self):
        tm = catalogue['tm'].source()
        self.assertRaises(exceptions.PreconditionError, tm.codes, -1, 4)
        self.assertRaises(exceptions.PreconditionError, tm.codes, 0, -4)

    def test_infinite(self):
        tm = catalogue['tm'].source()
        self.assertEqual(tm.length, None)
        self.assertEqual(tm.available(10 ** 6, start=10), 10 ** 6)

    def test_literal_map_on_product_letters(self):
        tm = catalogue['tm'].substitution
        square = product_substitution(tm, tm)
        try:
            FixedPointSource(square, ('a', 'a'), literal_map={('a', 'a'): 'x'})
        except exceptions.InvalidInputError as e:
            self.assertTrue('(a,b)' in str(e), str(e))
        else:
            self.fail('No InvalidInputError raised')


class TestPeriodicSource(fixture.Base):

    def test_window(self):
        src = PeriodicSource('aab')
        self.assertEqual(str(src.window(0, 7)), 'aabaaba')
        self.assertEqual(str(src.window(4, 4)), 'abaa')
        self.assertEqual(src.period, 3)
        self.assertEqual(src.name, 'periodic:aab')

    def test_default_name(self):
        src = PeriodicSource('ab')
        self.assertEqual(src.name, 'periodic:ab')
        self.assertEqual(str(src), 'periodic:ab')
        self.assertEqual(repr(src), '<PeriodicSource(periodic:ab)>')
        self.assertEqual(PeriodicSource('a').name, 'periodic:a')
        self.assertEqual(PeriodicSource('ab', name='alt').name, 'alt')

    def test_empty(self):
        self.assertRaises(exceptions.InvalidInputError, PeriodicSource, '')

    def test_block_pattern(self):
        self.assertEqual(str(block_pattern(1)), 'a')
        self.assertEqual(str(block_pattern(4)), 'aabb')
        self.assertEqual(str(block_pattern(7)), 'aaaabbb')
        self.assertRaises(exceptions.InvalidInputError, block_pattern, 0)


class TestExplicitSource(fixture.Base):

    def test_finite(self):
        src = ExplicitSource('abbab')
        self.assertEqual(src.length, 5)
        self.assertEqual(str(src.window(1, 3)), 'bba')
        self.assertEqual(src.available(10), 5)
        self.assertEqual(src.available(10, start=3), 2)
        self.assertEqual(src.available(10, start=7), 0)

    def test_default_name(self):
        src = ExplicitSource('abba')
        self.assertEqual(src.name, 'word:abba')
        self.assertEqual(str(ShiftedSource(src, 1)), 'word:abba@1')

    def test_past_the_end(self):
        src = ExplicitSource('abbab')
        self.assertRaises(exceptions.PreconditionError, src.window, 3, 3)

    def test_alphabet(self):
        src = ExplicitSource('aaa', alphabet='ab')
        self.assertEqual(list(src.alphabet), ['a', 'b'])
        self.assertRaises(exceptions.InvalidInputError,
                          ExplicitSource, 'abc', alphabet='ab')


class TestShiftedSource(fixture.Base):

    def test_shift(self):
        """window(s, n) of sigma^j x is window(s + j, n) of x"""
        tm = catalogue['tm'].source()
        for j in (1, 3, 17):
            shifted = tm.shifted(j)
            self.assertEqual(str(shifted.window(2, 9)), str(tm.window(2 + j, 9)))
        self.assertEqual(tm.shifted(3).name, 'tm@3')

    def test_zero_is_identity(self):
        tm = catalogue['tm'].source()
        self.assertTrue(tm.shifted(0) is tm)

    def test_composition(self):
        tm = catalogue['tm'].source()
        self.assertEqual(str(tm.shifted(2).shifted(3).window(0, 20)),
                         str(tm.shifted(5).window(0, 20)))

    def test_finite_base(self):
        src = ExplicitSource('abbab').shifted(2)
        self.assertEqual(src.length, 3)
        self.assertEqual(str(src.window(0, 3)), 'bab')
        self.assertRaises(exceptions.PreconditionError,
                          ExplicitSource('ab').shifted, -1)

    def test_custom_rule(self):
        sub = Substitution({'x': 'xy', 'y': 'x'}, alphabet='xy', name='fib')
        src = FixedPointSource(sub, 'x').shifted(1)
        self.assertEqual(str(src.window(0, 4)), 'yxxy')
