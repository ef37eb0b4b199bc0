"""
   Configuration parser module.

   Experiment files are INI files with an ``[experiment]`` section holding
   the fields of :data:`~hybridqc.experiment.config.DEFAULTS` and an
   optional ``[classify]`` section holding regime thresholds::

      [experiment]
      parent_a = tm
      parent_b = fcc
      shifts = 0..5
      kappas = 0.5

      [classify]
      localized_beta = 0.2
"""
import math
import logging
from collections import OrderedDict, namedtuple
from configparser import ConfigParser

from hybridqc import exceptions
from hybridqc.experiment import pathed
from hybridqc.experiment.config import *
from hybridqc.experiment.template import Template
from hybridqc.sequences.catalogue import source_from_spec
from hybridqc.transport.analysis import RegimeThresholds
from hybridqc.transport.dynamics import wavefront_safe
from hybridqc.transport.hybrid import ValueMap
from hybridqc.util import aslist, asrange


log = logging.getLogger(__name__)

THRESHOLD_FIELDS = RegimeThresholds.names


class Parser(ConfigParser):
    """A hybridqc configuration file."""

    def __init__(self, *p, **k):
        k.setdefault('interpolation', None)
        ConfigParser.__init__(self, *p, **k)

    def optionxform(self, optionstr):
        # field names such as N and T_max are case sensitive
        return optionstr

    def to_dict(self, sections=None):
        """It's easier to access config values like dictionaries"""
        if sections is None:
            sections = self.sections()
        return dict((s, OrderedDict(self.items(s)))
                    for s in sections if self.has_section(s))


class Config(pathed.Pathed, Parser):
    """Configuration class."""

    def __init__(self, path, *p, **k):
        """Confirm the config file exists; read it."""
        self.require_found(path)
        pathed.Pathed.__init__(self, path)
        Parser.__init__(self, *p, **k)
        self.read(path)


class RunSpec(namedtuple('RunSpec', 'parent_b shift kappa lam')):
    """One point of a sweep"""
    __slots__ = ()

    def __str__(self):
        return '%s@%d kappa=%g lambda=%g' % self


def field_name(key):
    key = str(key).strip()
    if key in DEFAULTS or key in THRESHOLD_FIELDS:
        return key
    return ALIASES.get(key.lower(), key)


class ExperimentConfig(object):
    """Fields of an experiment, from defaults, a file and overrides.

    Values are kept as given until :meth:`validate`, which converts all of
    them and reports every problem at once.
    """

    def __init__(self, values=None, thresholds=None, origin=None):
        self.values = OrderedDict(DEFAULTS)
        self.threshold_values = OrderedDict()
        self.unknown = []
        self.origin = origin
        self.validated = False
        self.update(values or {})
        self.update(thresholds or {})

    @classmethod
    def from_file(cls, path, origin=None):
        cfg = Config(path)
        sections = cfg.to_dict()
        for name in sections:
            if name not in ('experiment', 'classify'):
                log.warning('Ignoring section [%s] of %s', name, path)
        return cls(sections.get('experiment'), sections.get('classify'),
                   origin=origin or path)

    @classmethod
    def from_preset(cls, name, template=None):
        template = template or Template()
        return cls.from_file(template.get_preset(name),
                             origin='preset:%s' % name)

    @classmethod
    def load(cls, config=None, preset=None, overrides=None, full=False):
        """Defaults, then a preset or config file, then `overrides`"""
        if config and preset:
            raise exceptions.UsageError(
                "Give either a config file or a preset, not both")
        if preset:
            ret = cls.from_preset(preset)
        elif config:
            ret = cls.from_file(config)
        else:
            ret = cls(origin='defaults')
        if full:
            ret.update(dict(N=FULL_N))
        ret.update(overrides or {})
        return ret

    def update(self, values):
        self.validated = False
        for key, value in values.items():
            if value is None:
                continue
            field = field_name(key)
            if field in THRESHOLD_FIELDS:
                self.threshold_values[field] = str(value)
            elif field in DEFAULTS:
                self.values[field] = str(value)
            else:
                self.unknown.append(key)

    def __getitem__(self, field):
        return self.values[field_name(field)]

    def validate(self):
        """Convert every field; raise :exc:`ConfigError` listing all
        problems"""
        problems = ['unknown option %r' % key for key in self.unknown]
        v = self.values

        def convert(field, func, check=None, message=None):
            try:
                value = func(v[field])
            except (ValueError, TypeError, exceptions.Error) as e:
                problems.append('%s = %s: %s' % (field, v[field], e))
                return None
            if check is not None and not check(value):
                problems.append('%s = %s: %s' % (field, v[field], message))
                return None
            return value

        self.name = v['name']
        self.source_a = convert('parent_a', source_from_spec)
        self.sources_b = convert(
            'parent_b', lambda s: [source_from_spec(x) for x in aslist(s)],
            bool, 'at least one source needed')
        self.value_map_a = convert('value_map_a', ValueMap.parse)
        self.value_map_b = convert('value_map_b', ValueMap.parse)
        for source, vm, field in (
                (self.source_a, self.value_map_a, 'value_map_a'),
                ) + tuple((s, self.value_map_b, 'value_map_b')
                          for s in self.sources_b or ()):
            if source is None or vm is None:
                continue
            missing = [l for l in source.alphabet if l not in vm]
            if missing:
                problems.append('%s = %s: no value for letter(s) %s of %s'
                                % (field, v[field], ', '.join(missing),
                                   source))
        self.kappas = convert(
            'kappas', lambda s: aslist(s, float),
            lambda l: l and all(0.0 <= k <= 1.0 for k in l),
            'every kappa must lie in [0, 1]')
        self.lambdas = convert(
            'lambdas', lambda s: aslist(s, float),
            lambda l: l and all(lam >= 0 for lam in l),
            'every lambda must be >= 0')
        self.shifts = convert(
            'shifts', asrange, lambda l: l and all(j >= 0 for j in l),
            'shifts must be >= 0 (shift the other parent instead)')
        self.N = convert('N', int, lambda n: n >= 3, 'need at least 3 sites')
        self.T_max = convert('T_max', float, lambda t: t > 0,
                             'T_max must be > 0')
        self.dt = convert('dt', self._parse_dt, lambda dt: dt is None or dt > 0,
                          'dt must be "auto" or > 0')
        self.sampling = convert('sample_every', self._parse_sampling,
                                lambda s: s[1] >= 1,
                                'sampling must be >= 1')
        self.scheme = convert('scheme', str, lambda s: s in SCHEMES,
                              'scheme must be one of %s' % ', '.join(SCHEMES))
        self.margin = convert('margin', int, lambda m: m >= 0,
                              'margin must be >= 0')
        self.output_dir = v['output_dir']
        self.n0 = None
        if self.N is not None:
            self.n0 = convert('seedsite', self._parse_seedsite,
                              lambda n: 0 <= n < self.N,
                              'seed site outside the chain')
        try:
            self.thresholds = RegimeThresholds.from_dict(self.threshold_values)
        except ValueError as e:
            problems.append('classify: %s' % e)
            self.thresholds = None

        if None not in (self.N, self.T_max, self.n0, self.margin) and \
                not wavefront_safe(self.T_max, self.N, self.n0, self.margin):
            problems.append(self._wavefront_advice())
        if problems:
            raise exceptions.ConfigError(problems)
        self.validated = True
        return self

    def _parse_dt(self, value):
        if str(value).strip().lower() == 'auto':
            return None
        return float(value)

    def _parse_sampling(self, value):
        value = str(value).strip()
        if value.startswith('geometric'):
            _, _, ppd = value.partition(':')
            return ('geometric', int(ppd or 20))
        return ('every', int(value))

    def _parse_seedsite(self, value):
        if str(value).strip().lower() == 'center':
            return self.N // 2
        return int(value)

    def _wavefront_advice(self):
        reach = 2.0 * self.T_max + self.margin
        room = min(self.n0, self.N - 1 - self.n0)
        sites = 2 ** int(math.ceil(math.log(2 * reach + 3, 2)))
        t_ok = max(0.0, (room - self.margin) / 2.0)
        return ('the wave front reaches %d sites from the seed site by '
                'T_max = %g but the chain leaves only %d: use N >= %d or '
                'T_max < %g' % (reach, self.T_max, room, sites, t_ok))

    def require_valid(self):
        if not self.validated:
            self.validate()
        return self

    def runs(self):
        """Sweep points sorted by (shift, kappa, parent_b, lambda)"""
        self.require_valid()
        specs_b = aslist(self.values['parent_b'])
        ret = [RunSpec(b, j, k, lam) for b in specs_b for j in self.shifts
               for k in self.kappas for lam in self.lambdas]
        ret.sort(key=lambda r: (r.shift, r.kappa, specs_b.index(r.parent_b),
                                r.lam))
        return ret

    def resolved(self):
        """Every field with its effective value, for file headers"""
        ret = OrderedDict(self.values)
        thresholds = self.thresholds or RegimeThresholds()
        for key, value in thresholds.as_dict().items():
            ret[key] = value
        ret['origin'] = self.origin
        return ret

    def __repr__(self):
        return "<ExperimentConfig(%s from %s)>" % (self.values['name'],
                                                   self.origin)
