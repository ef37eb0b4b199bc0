#!/usr/bin/env python
# -*- coding: utf-8 -*-

from hybridqc import exceptions
from hybridqc.util import *
from hybridqc.tests import fixture


class TestUtil(fixture.Base):

    def test_asbool(self):
        """test asbool parsing"""
        self.assertEqual(asbool(True), True)
        self.assertEqual(asbool(False), False)
        self.assertEqual(asbool('y'), True)
        self.assertEqual(asbool(' On '), True)
        self.assertEqual(asbool('n'), False)
        self.assertRaises(ValueError, asbool, 'test')
        self.assertRaises(ValueError, asbool, object)

    def test_aslist(self):
        self.assertEqual(aslist('tm, pd,,fcc'), ['tm', 'pd', 'fcc'])
        self.assertEqual(aslist('0.5, 1', float), [0.5, 1.0])
        self.assertEqual(aslist(3), [3])
        self.assertEqual(aslist((1, 2), str), ['1', '2'])

    def test_asrange(self):
        self.assertEqual(asrange('0..3'), [0, 1, 2, 3])
        self.assertEqual(asrange('1, 4..5, 9'), [1, 4, 5, 9])
        self.assertEqual(asrange(2), [2])
        self.assertRaises(ValueError, asrange, 'a..b')

    def test_catch_known_errors(self):
        @catch_known_errors
        def fail(exc):
            raise exc

        self.assertRaises(exceptions.KnownError, fail,
                          exceptions.PathNotFoundError('/nowhere'))
        self.assertRaises(exceptions.KnownError, fail,
                          exceptions.InsufficientDataError('few'))
        self.assertRaises(exceptions.UsageError, fail,
                          exceptions.UsageError('usage'))
        self.assertRaises(exceptions.ResourceLimitError, fail,
                          exceptions.ResourceLimitError('big'))
        try:
            fail(exceptions.PathFoundError('/here'))
        except exceptions.KnownError as e:
            self.assertEqual(str(e), 'The path /here already exists')
