"""
   Real-valued potentials from letter sequences, and their hybrids
   kappa * v + (1 - kappa) * sigma^j u.
"""
import logging

import numpy as np

from hybridqc import exceptions
from hybridqc.sequences.source import ExplicitSource
from hybridqc.sequences.substitution import Word, format_letter
from hybridqc.util import tables


log = logging.getLogger(__name__)

#: value_set() compares values after rounding to this many decimals
VALUE_DECIMALS = 12


class ValueMap(dict):
    """letter -> real value

    >>> vm = ValueMap.parse('a:0, b:1')
    >>> vm['b']
    1.0
    >>> str(ValueMap.default())
    'a:-1,b:1'
    """

    def __init__(self, *p, **k):
        super(ValueMap, self).__init__(*p, **k)
        for letter, value in list(self.items()):
            self[letter] = float(value)

    @classmethod
    def default(cls):
        return cls(a=-1.0, b=1.0)

    @classmethod
    def parse(cls, text):
        """Read ``letter:value`` pairs separated by commas"""
        if isinstance(text, ValueMap):
            return text
        if isinstance(text, dict):
            return cls(text)
        ret = cls()
        for item in str(text).split(','):
            item = item.strip()
            if not item:
                continue
            letter, sep, value = item.partition(':')
            try:
                ret[letter.strip()] = float(value)
            except ValueError:
                raise exceptions.InvalidInputError(
                    "Bad value map entry %r (expected letter:value)" % item)
        if not ret:
            raise exceptions.InvalidInputError("Empty value map %r" % text)
        return ret

    def table(self, alphabet):
        """Values indexed by letter code; NaN for letters not mapped"""
        return np.array([self.get(letter, np.nan) for letter in alphabet],
                        dtype=float)

    def __str__(self):
        return ','.join('%s:%.17g' % (format_letter(l), v)
                        for l, v in sorted(self.items()))


def letters_to_values(w, vm):
    """Map every letter of `w` through the value map"""
    vm = ValueMap.parse(vm)
    try:
        return np.array([vm[letter] for letter in Word(w)], dtype=float)
    except KeyError as e:
        raise exceptions.InvalidInputError(
            "Letter %s has no value in %s" % (format_letter(e.args[0]), vm))


def source_values(source, vm, length, start=0):
    """Values of `length` letters of a sequence source from `start`"""
    vm = ValueMap.parse(vm)
    table = vm.table(source.alphabet)
    codes = source.codes(start, length)
    values = table[codes]
    missing = np.isnan(values)
    if missing.any():
        letter = source.alphabet[int(codes[np.argmax(missing)])]
        raise exceptions.InvalidInputError(
            "Letter %s of %s has no value in %s"
            % (format_letter(letter), source, vm))
    return values


class HybridPotential(object):
    """The sites 0..N-1 of kappa * v_n + (1 - kappa) * u_{n+j}.

    ``values`` is read-only; ``provenance`` names the parents and value
    maps so the potential can be rebuilt.
    """

    def __init__(self, values, kappa, shift, provenance=None):
        values = np.array(values, dtype=float)
        values.setflags(write=False)
        self.values = values
        self.kappa = kappa
        self.shift = shift
        self.provenance = dict(provenance or {})

    @property
    def N(self):
        return len(self.values)

    def __len__(self):
        return len(self.values)

    def value_set(self):
        return value_set(self)

    def metadata(self):
        ret = dict(kappa=self.kappa, shift=self.shift, N=self.N)
        ret.update(self.provenance)
        return ret

    def as_source(self):
        """The values as an explicit sequence source, one letter per
        distinct (rounded) value, for the symbolic diagnostics"""
        rounded = np.round(self.values, VALUE_DECIMALS)
        return ExplicitSource(Word(rounded.tolist()),
                              alphabet=np.unique(rounded).tolist(),
                              name=self.provenance.get('name', 'hybrid'))

    def to_csv(self, path, metadata=None):
        return write_potential_csv(self, path, metadata)

    def __repr__(self):
        return "<HybridPotential(N=%d, kappa=%g, shift=%d)>" % (
            self.N, self.kappa, self.shift)


def hybridize(v, u, kappa, j=0, provenance=None):
    """values[n] = kappa * v[n] + (1 - kappa) * u[n + j] for n < len(v)"""
    if not 0.0 <= kappa <= 1.0:
        raise exceptions.PreconditionError(
            "kappa must lie in [0, 1], got %r" % kappa)
    if j < 0:
        raise exceptions.PreconditionError(
            "Shift the other parent for negative shifts; got j=%d" % j)
    v = np.asarray(v, dtype=float)
    u = np.asarray(u, dtype=float)
    n = len(v)
    if len(u) < n + j:
        raise exceptions.PreconditionError(
            "Second parent has %d values, %d needed for %d sites at "
            "shift %d" % (len(u), n + j, n, j))
    values = kappa * v + (1.0 - kappa) * u[j:j + n]
    return HybridPotential(values, kappa, j, provenance)


def value_set(p):
    """Sorted distinct values of a potential (or array)"""
    values = getattr(p, 'values', p)
    return np.unique(np.round(np.asarray(values, dtype=float),
                              VALUE_DECIMALS)).tolist()


def build_hybrid(source_a, source_b, kappa, shift, N, value_map_a=None,
                 value_map_b=None):
    """Hybrid of two sequence sources: `source_b` is read from letter
    `shift` on"""
    vm_a = ValueMap.parse(value_map_a or ValueMap.default())
    vm_b = ValueMap.parse(value_map_b or ValueMap.default())
    if shift < 0:
        raise exceptions.PreconditionError(
            "Shift must be >= 0, got %d; swap the parents instead" % shift)
    v = source_values(source_a, vm_a, N)
    u = source_values(source_b, vm_b, N + shift)
    provenance = dict(parent_a=str(source_a), parent_b=str(source_b),
                      value_map_a=str(vm_a), value_map_b=str(vm_b),
                      name='%s+%s@%d' % (source_a, source_b, shift))
    log.debug('Hybrid %s at kappa=%g, %d sites', provenance['name'], kappa, N)
    return hybridize(v, u, kappa, shift, provenance)


def write_potential_csv(potential, path, metadata=None):
    """Write ``n,V_n`` rows"""
    meta = potential.metadata()
    meta.update(metadata or {})
    data = np.column_stack([np.arange(potential.N), potential.values])
    return tables.write_table(path, ['n', 'V_n'], data, meta)
