#!/usr/bin/env python
# -*- coding: utf-8 -*-

import os
import sys
from io import StringIO

from hybridqc.experiment import api, shell
from hybridqc.experiment.config import *
from hybridqc.tests.fixture import Shell


def big_alphabet_rule(path):
    """17 letters: more than the spectral analysis accepts"""
    letters = 'abcdefghijklmnopq'
    lines = ['a -> ab']
    lines += ['%s -> %s' % (x, y) for x, y in zip(letters[1:], letters[2:])]
    lines.append('q -> a')
    with open(path, 'w') as fd:
        fd.write('\n'.join(lines) + '\n')
    return path


class TestShellCommands(Shell):
    """Tests hybridqc commands"""

    def test_help(self):
        """Displays default help dialog"""
        self.assertEqual(self.run_hybridqc('-h').returncode, 0)
        self.assertEqual(self.run_hybridqc('--help').returncode, 0)
        self.assertEqual(self.run_hybridqc('help').returncode, 0)
        self.assertEqual(self.run_hybridqc('').returncode, 0)

    def test_help_commands(self):
        """Display help on a specific command"""
        for cmd in api.__all__:
            result = self.run_hybridqc('help %s' % cmd)
            self.assertTrue(result.stdout)
            self.assertFalse(result.stderr)

    def test_gen(self):
        result = self.run_hybridqc('gen tm 8')
        self.assertEqual(result.stdout, 'abbabaab\n')
        result = self.run_hybridqc('gen --length=5 fcc')
        self.assertEqual(result.stdout, 'abaab\n')

    def test_shutdown_logging(self):
        """Try to shutdown logging output"""
        result = self.run_hybridqc('gen tm 8 --disable_logging')
        self.assertEqual(result.stdout, '')
        result = self.run_hybridqc('gen tm 8 -q')
        self.assertEqual(result.stdout, '')

    def test_usage_errors(self):
        """Usage problems exit with 2"""
        result = self.run_hybridqc('foobar', expect_error=True)
        self.assertEqual(result.returncode, EXIT_USAGE)
        result = self.run_hybridqc('gen tm', expect_error=True)
        self.assertEqual(result.returncode, EXIT_USAGE)
        self.assertTrue('Not enough arguments' in result.stderr)
        result = self.run_hybridqc('simulate tm fcc --N=100 --T_max=2000',
                                   expect_error=True)
        self.assertEqual(result.returncode, EXIT_USAGE)
        self.assertTrue('wave front' in result.stderr)

    def test_numerical_failure(self):
        """An unstable time step exits with 3"""
        result = self.run_hybridqc(
            'simulate tm fcc --N=256 --T_max=20 --dt=2 --output=%s'
            % self.tmp_named('out'), expect_error=True, expect_stderr=True)
        self.assertEqual(result.returncode, EXIT_NUMERICAL)
        self.assertTrue('Norm drift' in result.stderr)

    def test_resource_limit(self):
        """Oversized problems exit with 4"""
        path = big_alphabet_rule(self.tmp(suffix='.sub'))
        result = self.run_hybridqc('matrix %s' % path, expect_error=True,
                                   expect_stderr=True)
        self.assertEqual(result.returncode, EXIT_RESOURCE)

    def test_simulate(self):
        out = self.tmp_named('out')
        result = self.run_hybridqc(
            'sim tm pd --N=256 --T_max=20 --kappa=0.3 --output=%s' % out)
        self.assertTrue('beta=' in result.stdout)
        self.assertTrue(os.path.exists(
            os.path.join(out, 'm2_tm_pd@0_k0.3_l1.csv')))


class TestShellMain(Shell):

    def _check_error(self, args, code, expected, **kw):
        original = sys.stderr
        try:
            actual = StringIO()
            sys.stderr = actual
            try:
                shell.main(args, **kw)
            except SystemExit as e:
                self.assertEqual(code, e.args[0])
            else:
                self.fail('No exception raised')
        finally:
            sys.stderr = original
        actual = actual.getvalue()
        self.assertTrue(expected in actual,
                        '%r not in:\n"""\n%s\n"""' % (expected, actual))

    def test_main(self):
        """Test main() function"""
        kw = dict(disable_logging=True)
        self.assertEqual(shell.main(['help'], **kw), EXIT_OK)
        self.assertEqual(shell.main(['help', 'gen'], **kw), EXIT_OK)
        self.assertEqual(shell.main(['gen', 'tm', '4'], **kw), EXIT_OK)
        self.assertEqual(shell.main(['gen', '--', '--source=tm',
                                     '--length=4'], **kw), EXIT_OK)
        path = big_alphabet_rule(self.tmp(suffix='.sub'))
        self.assertEqual(shell.main(['matrix', path], **kw), EXIT_RESOURCE)

        self._check_error(['foobar'], 2, 'error: Invalid command foobar', **kw)
        self._check_error(['gen', 'tm', '4', 'x', 'y'], 2,
                          'error: Too many arguments for command gen: y', **kw)
        self._check_error(['gen'], 2, 'error: Not enough arguments for '
                          'command gen: source, length not specified', **kw)
        self._check_error(['matrix', 'periodic:ab'], 2,
                          'is not generated by a substitution', **kw)
