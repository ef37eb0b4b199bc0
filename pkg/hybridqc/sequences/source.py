"""
   Sequence sources: producers of arbitrarily long windows of one-sided
   letter sequences (substitution fixed points, periodic patterns and
   explicit words).

   Every source encodes its letters as indices into its ``alphabet`` so
   that the window scans of :mod:`hybridqc.sequences.symbolic` work on
   integer arrays.
"""
import logging

import numpy as np

from hybridqc import exceptions
from hybridqc.sequences.substitution import Alphabet, Word, format_letter
from hybridqc.util import KeyedInstance


log = logging.getLogger(__name__)

class SequenceSource(object):
    """Base class for sequence sources.

    Subclasses implement :meth:`codes`; ``length`` is None for infinite
    sequences.
    """
    kind = None
    length = None
    alphabet = None
    name = None

    def codes(self, start, length):
        """Letter indices of the window [start, start + length)"""
        raise NotImplementedError()

    def window(self, start, length):
        """The word of `length` letters starting at index `start`"""
        return self.alphabet.decode(self.codes(start, length))

    def available(self, length, start=0):
        """`length` clipped to what the source can provide after `start`"""
        if self.length is None:
            return length
        return max(0, min(length, self.length - start))

    def _check_window(self, start, length):
        if start < 0 or length < 0:
            raise exceptions.PreconditionError(
                "Windows are one-sided: start and length must be >= 0, "
                "got %s, %s" % (start, length))
        if self.length is not None and start + length > self.length:
            raise exceptions.PreconditionError(
                "%s has only %d letters, window [%d, %d) requested"
                % (self, self.length, start, start + length))

    def shifted(self, j):
        """This source seen through the shift, sigma^j"""
        if j == 0:
            return self
        return ShiftedSource(self, j)

    def __str__(self):
        return str(self.name)

    def __repr__(self):
        return "<%s(%s)>" % (self.__class__.__name__, self)


class FixedPointSource(KeyedInstance, SequenceSource):
    """The one-sided fixed point of a substitution grown from `seed`,
    optionally passed through a literal map (as for paper folding).

    Instances are shared per (rule, seed, literal map), so the longest
    prefix computed so far is reused by every user of the same sequence.
    """
    kind = 'fixed point'

    @classmethod
    def _key(cls, substitution, seed, literal_map=None, name=None):
        mapping = None
        if literal_map is not None:
            mapping = tuple(sorted((str(k), str(v))
                                   for k, v in literal_map.items()))
        return (str(substitution), str(seed), mapping, name)

    def __init__(self, substitution, seed, literal_map=None, name=None):
        if getattr(self, 'substitution', None) is not None:
            return
        # fails early for seeds that cannot grow
        substitution.fixed_point_prefix(seed, 1)
        if literal_map is None:
            alphabet = substitution.alphabet
            translate = None
        else:
            targets = []
            for letter in substitution.alphabet:
                try:
                    target = literal_map[letter]
                except KeyError:
                    raise exceptions.InvalidInputError(
                        "Literal map has no image for %s"
                        % format_letter(letter))
                if target not in targets:
                    targets.append(target)
            alphabet = Alphabet(targets)
            translate = np.array(
                [alphabet.code(literal_map[l]) for l in substitution.alphabet],
                dtype=np.int16)
        self.alphabet = alphabet
        self._translate = translate
        self.seed = seed
        self.literal_map = literal_map
        self.name = name or substitution.name or str(substitution)
        self._prefix = np.zeros(0, dtype=np.int16)
        self.substitution = substitution

    def _grow(self, needed):
        size = max(needed, 2 * len(self._prefix), 64)
        log.debug('Growing fixed point of %s to %d letters', self.name, size)
        word = self.substitution.fixed_point_prefix(self.seed, size)
        codes = self.substitution.alphabet.encode(word)
        if self._translate is not None:
            codes = self._translate[codes]
        self._prefix = codes

    def codes(self, start, length):
        self._check_window(start, length)
        if start + length > len(self._prefix):
            self._grow(start + length)
        return self._prefix[start:start + length].copy()


class PeriodicSource(SequenceSource):
    """The periodic sequence pattern pattern pattern ..."""
    kind = 'periodic'

    def __init__(self, pattern, name=None):
        pattern = Word(pattern)
        if not pattern:
            raise exceptions.InvalidInputError("Periodic pattern is empty")
        letters = []
        for letter in pattern:
            if letter not in letters:
                letters.append(letter)
        self.pattern = pattern
        self.period = len(pattern)
        self.alphabet = Alphabet(letters)
        self.name = name or 'periodic:%s' % (pattern, )
        self._pattern_codes = self.alphabet.encode(pattern)

    def codes(self, start, length):
        self._check_window(start, length)
        index = np.arange(start, start + length) % self.period
        return self._pattern_codes[index]


class ExplicitSource(SequenceSource):
    """A finite word given letter by letter"""
    kind = 'explicit'

    def __init__(self, word, alphabet=None, name=None):
        word = Word(word)
        if alphabet is None:
            letters = []
            for letter in word:
                if letter not in letters:
                    letters.append(letter)
            alphabet = letters or ['a']
        self.alphabet = Alphabet(alphabet)
        self.word = word
        self.length = len(word)
        self.name = name or 'word:%s' % (word, )
        self._codes = self.alphabet.encode(word)

    def codes(self, start, length):
        self._check_window(start, length)
        return self._codes[start:start + length].copy()


class ShiftedSource(SequenceSource):
    """sigma^j applied to another source: window(s, n) = base.window(s+j, n)"""
    kind = 'shifted'

    def __init__(self, base, shift):
        if shift < 0:
            raise exceptions.PreconditionError(
                "One-sided sources only shift left (j >= 0), got %s" % shift)
        self.base = base
        self.shift = shift
        self.alphabet = base.alphabet
        if base.length is not None:
            self.length = max(0, base.length - shift)
        self.name = '%s@%d' % (base.name, shift)

    def codes(self, start, length):
        self._check_window(start, length)
        return self.base.codes(start + self.shift, length)


def block_pattern(period, letters='ab'):
    """Period-`period` pattern: ceil(p/2) copies of the first letter, then
    floor(p/2) copies of the second"""
    if period < 1:
        raise exceptions.InvalidInputError(
            "Period must be >= 1, got %s" % period)
    first = (period + 1) // 2
    return Word(letters[0] * first + letters[1] * (period - first))
