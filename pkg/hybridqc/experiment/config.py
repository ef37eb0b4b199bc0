#!/usr/bin/python
# -*- coding: utf-8 -*-

from collections import OrderedDict

from hybridqc.transport.dynamics import SCHEMES
from hybridqc.util.tables import FORMAT_VERSION


__all__ = ['DEFAULTS', 'ALIASES', 'SCHEMES', 'FORMAT_VERSION', 'DESK_N',
           'FULL_N', 'EXIT_OK', 'EXIT_USAGE', 'EXIT_NUMERICAL',
           'EXIT_RESOURCE', 'SUMMARY_COLUMNS', 'BOSHERNITZAN_N']

# shell exit codes
EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3
EXIT_RESOURCE = 4

DESK_N = 2 ** 13
FULL_N = 2 ** 14

# experiment fields, in header order
DEFAULTS = OrderedDict()
DEFAULTS['name'] = 'experiment'
DEFAULTS['parent_a'] = 'tm'
DEFAULTS['parent_b'] = 'fcc'
DEFAULTS['value_map_a'] = 'a:-1,b:1'
DEFAULTS['value_map_b'] = 'a:-1,b:1'
DEFAULTS['kappas'] = '0.5'
DEFAULTS['lambdas'] = '1.0'
DEFAULTS['shifts'] = '0..5'
DEFAULTS['N'] = str(FULL_N)
DEFAULTS['T_max'] = '2000'
DEFAULTS['dt'] = 'auto'
DEFAULTS['sample_every'] = 'geometric:20'
DEFAULTS['seedsite'] = 'center'
DEFAULTS['scheme'] = 'leapfrog'
DEFAULTS['margin'] = '64'
DEFAULTS['output_dir'] = '.'

# accepted spellings -> field
ALIASES = {
    'kappa': 'kappas',
    'lambda': 'lambdas',
    'lam': 'lambdas',
    'shift': 'shifts',
    'n': 'N',
    't_max': 'T_max',
    'output': 'output_dir',
}

SUMMARY_COLUMNS = ('experiment_id', 'parent_a', 'parent_b', 'shift', 'kappa',
                   'lambda', 'beta', 'residual', 'label')

# factor lengths of the Boshernitzan trend in diagnose
BOSHERNITZAN_N = (4, 8, 16, 32)
