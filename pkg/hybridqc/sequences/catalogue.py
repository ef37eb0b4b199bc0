"""
   Built-in substitutions and the source specification syntax shared by
   the API and the command line.

   ========================  ==========================================
   ``fcc``                   Fibonacci, a->ab, b->a
   ``tm``                    Thue-Morse, a->ab, b->ba
   ``pd``                    period doubling, a->ab, b->aa
   ``pf``                    paper folding, 1->12, 2->32, 3->14, 4->34
                             read through 1,2->a and 3,4->b
   ``rs``                    Rudin-Shapiro, 1->12, 2->13, 3->42, 4->43
                             read through 1,2->a and 3,4->b
   ``periodic:<pattern>``    the pattern repeated forever
   ``period:<p>``            block pattern of period p (see
                             :func:`~hybridqc.sequences.source.block_pattern`)
   ``word:<letters>``        a finite explicit word
   ``<file>``                substitution read from ``letter -> image``
                             lines, grown from its first extendable letter
   ========================  ==========================================

   Any specification may end in ``@j`` to apply the shift j times.

   The Rudin-Shapiro rule is the usual four-letter form from the
   literature on substitution sequences.
"""
import os
from collections import OrderedDict

from hybridqc import exceptions
from hybridqc.sequences.substitution import Substitution, load_substitution
from hybridqc.sequences.source import (FixedPointSource, PeriodicSource,
    ExplicitSource, block_pattern)


FOLDING_MAP = {'1': 'a', '2': 'a', '3': 'b', '4': 'b'}


class CatalogueEntry(object):
    """A named substitution with its seed letter and optional literal map"""

    def __init__(self, name, description, images, seed, literal_map=None,
                 alphabet=None):
        self.name = name
        self.description = description
        self.substitution = Substitution(images, alphabet=alphabet, name=name)
        self.seed = seed
        self.literal_map = literal_map

    def source(self):
        return FixedPointSource(self.substitution, self.seed,
                                literal_map=self.literal_map, name=self.name)


catalogue = OrderedDict()
for _entry in (
        CatalogueEntry('fcc', 'Fibonacci', {'a': 'ab', 'b': 'a'}, 'a',
                       alphabet='ab'),
        CatalogueEntry('tm', 'Thue-Morse', {'a': 'ab', 'b': 'ba'}, 'a',
                       alphabet='ab'),
        CatalogueEntry('pd', 'period doubling', {'a': 'ab', 'b': 'aa'}, 'a',
                       alphabet='ab'),
        CatalogueEntry('pf', 'paper folding',
                       {'1': '12', '2': '32', '3': '14', '4': '34'}, '1',
                       literal_map=FOLDING_MAP, alphabet='1234'),
        CatalogueEntry('rs', 'Rudin-Shapiro',
                       {'1': '12', '2': '13', '3': '42', '4': '43'}, '1',
                       literal_map=FOLDING_MAP, alphabet='1234'),
        ):
    catalogue[_entry.name] = _entry
del _entry


def get_substitution(name):
    """The built-in substitution called `name`"""
    try:
        return catalogue[name].substitution
    except KeyError:
        raise exceptions.UsageError(
            "Unknown substitution %r; built-ins are %s"
            % (name, ', '.join(catalogue)))


def split_shift(spec):
    """``'tm@3'`` -> ``('tm', 3)``"""
    if '@' in spec:
        base, shift = spec.rsplit('@', 1)
        try:
            return base, int(shift)
        except ValueError:
            raise exceptions.UsageError("Bad shift in source %r" % spec)
    return spec, 0


def substitution_from_spec(spec):
    """The substitution behind a catalogue name or rule file"""
    spec, shift = split_shift(str(spec).strip())
    if spec in catalogue:
        return catalogue[spec].substitution
    if os.path.isfile(spec):
        return load_substitution(spec)
    if spec.split(':', 1)[0] in ('periodic', 'period', 'word'):
        raise exceptions.UsageError(
            "%r is not generated by a substitution" % spec)
    raise exceptions.UsageError(
        "Unknown source %r; use one of %s, periodic:<pattern>, "
        "period:<p>, word:<letters> or a rule file"
        % (spec, ', '.join(catalogue)))


def source_from_spec(spec):
    """Build a :class:`~hybridqc.sequences.source.SequenceSource` from its
    command line specification"""
    spec = str(spec).strip()
    base, shift = split_shift(spec)
    kind, _, arg = base.partition(':')
    if base in catalogue:
        source = catalogue[base].source()
    elif kind == 'periodic' and arg:
        source = PeriodicSource(arg, name=base)
    elif kind == 'period' and arg:
        try:
            period = int(arg)
        except ValueError:
            raise exceptions.UsageError("Bad period in source %r" % spec)
        source = PeriodicSource(block_pattern(period), name=base)
    elif kind == 'word' and arg:
        source = ExplicitSource(arg, name=base)
    elif os.path.isfile(base):
        sub = load_substitution(base)
        seeds = sub.fixed_point_seeds()
        if not seeds:
            raise exceptions.UsageError(
                "No letter of %s starts its own image; no fixed point to "
                "grow" % base)
        source = FixedPointSource(sub, seeds[0], name=sub.name)
    else:
        substitution_from_spec(base)
    if shift < 0:
        raise exceptions.UsageError(
            "Shifts of one-sided sources must be >= 0, got %r" % spec)
    return source.shifted(shift)
