"""
   Substitutions over finite alphabets: iteration by concatenation,
   one-sided fixed points and the invariants of the substitution matrix
   (primitivity, Perron eigenvalue, Pisot property).

   Words are tuples of letters. Letters are any hashable values; the
   built-in catalogue uses one-character strings and product
   substitutions use pairs of letters.
"""
import os
import logging
from collections import Counter

import numpy as np

from hybridqc import exceptions


log = logging.getLogger(__name__)

#: iterate() refuses to build words longer than this
MAX_WORD_LENGTH = 2 ** 26
#: |lambda| this close to 1 is not trusted to be on either side of 1
PISOT_MARGIN = 1e-9
#: spectral_info() works on small dense matrices only
MAX_SPECTRAL_SIZE = 16

#: values of SpectralInfo.verdict
PISOT = 'pisot'
NOT_PISOT = 'not pisot'
INDETERMINATE = 'indeterminate'


def format_letter(letter):
    """Printable form of a letter; pairs print as ``(x,y)``"""
    if isinstance(letter, tuple):
        return '(%s)' % ','.join(format_letter(part) for part in letter)
    return str(letter)


class Word(tuple):
    """A finite word, indexed from 0. Prints as the concatenation of
    its letters, so ``str(Word('abba')) == 'abba'``.
    """

    def __new__(cls, letters=()):
        return super(Word, cls).__new__(cls, letters)

    def __getitem__(self, item):
        ret = super(Word, self).__getitem__(item)
        if isinstance(item, slice):
            return Word(ret)
        return ret

    def __add__(self, other):
        return Word(tuple(self) + tuple(other))

    def __str__(self):
        return ''.join(format_letter(letter) for letter in self)

    def __repr__(self):
        return "<Word(%r)>" % str(self)


class Alphabet(tuple):
    """An ordered set of distinct letters"""

    def __new__(cls, letters):
        letters = tuple(letters)
        if not letters:
            raise exceptions.InvalidInputError(
                "An alphabet needs at least one letter")
        if len(set(letters)) != len(letters):
            raise exceptions.InvalidInputError(
                "Letters of an alphabet must be distinct: %r" % (letters, ))
        self = super(Alphabet, cls).__new__(cls, letters)
        self._codes = dict((letter, i) for i, letter in enumerate(letters))
        return self

    def __contains__(self, letter):
        return letter in self._codes

    def code(self, letter):
        try:
            return self._codes[letter]
        except (KeyError, TypeError):
            raise exceptions.InvalidInputError(
                "Letter %r is not in the alphabet %s"
                % (letter, Word(self)))

    def check(self, word):
        """Raise :exc:`InvalidInputError` unless every letter belongs here"""
        for letter in word:
            if letter not in self._codes:
                self.code(letter)

    def encode(self, word):
        """Letter indices of `word` as an integer array"""
        codes = self._codes
        try:
            ret = [codes[letter] for letter in word]
        except KeyError:
            self.check(word)
        return np.array(ret, dtype=np.int16)

    def decode(self, codes):
        return Word(self[int(c)] for c in codes)


class Substitution(object):
    """A substitution rule: each letter maps to a nonempty word.

    :param images: mapping letter -> image word (strings are split into
      one-character letters)
    :param alphabet: letter order; defaults to the order of `images`
    :param name: catalogue name, used in reports
    """

    def __init__(self, images, alphabet=None, name=None):
        if alphabet is None:
            alphabet = list(images.keys())
        self.alphabet = Alphabet(alphabet)
        self.name = name
        self.images = dict()
        for letter in self.alphabet:
            if letter not in images:
                raise exceptions.InvalidInputError(
                    "No image given for letter %s" % format_letter(letter))
            image = Word(images[letter])
            if not image:
                raise exceptions.InvalidInputError(
                    "The image of %s is empty" % format_letter(letter))
            self.alphabet.check(image)
            self.images[letter] = image
        extra = set(images.keys()) - set(self.alphabet)
        if extra:
            raise exceptions.InvalidInputError(
                "Images given for letters outside the alphabet: %s"
                % ', '.join(sorted(format_letter(l) for l in extra)))
        self._lengths = dict((l, len(w)) for l, w in self.images.items())

    def __getitem__(self, letter):
        try:
            return self.images[letter]
        except (KeyError, TypeError):
            self.alphabet.code(letter)

    def __repr__(self):
        return "<Substitution(%s: %s)>" % (self.name, self)

    def __str__(self):
        return ', '.join('%s->%s' % (format_letter(l), self.images[l])
                         for l in self.alphabet)

    @property
    def constant_length(self):
        """True iff all images share one length"""
        return len(set(self._lengths.values())) == 1

    @property
    def length(self):
        """Common image length, or None"""
        if self.constant_length:
            return self._lengths[self.alphabet[0]]
        return None

    def image_length(self, word):
        """Length of ``apply(word)``, computed from letter counts"""
        lengths = self._lengths
        try:
            return sum(lengths[l] * n for l, n in Counter(word).items())
        except KeyError:
            self.alphabet.check(word)

    def apply(self, word):
        """Concatenate the images of the letters of `word` in order"""
        images = self.images
        ret = []
        try:
            for letter in word:
                ret.extend(images[letter])
        except (KeyError, TypeError):
            self.alphabet.check(word)
        return Word(ret)

    def iterate(self, seed, k, cap=None):
        """Apply the substitution `k` times to `seed`.

        :raises: :exc:`ResourceLimitError` when a result would be longer
          than `cap` (default :data:`MAX_WORD_LENGTH`)
        """
        if k < 0:
            raise exceptions.PreconditionError(
                "Iteration count must be >= 0, got %s" % k)
        if cap is None:
            cap = MAX_WORD_LENGTH
        word = Word(seed)
        self.alphabet.check(word)
        for i in range(k):
            size = self.image_length(word)
            if size > cap:
                raise exceptions.ResourceLimitError(
                    "Iteration %d of %s would produce %d letters "
                    "(limit %d)" % (i + 1, self.name or 'substitution',
                                    size, cap))
            word = self.apply(word)
        return word

    def fixed_point_seeds(self):
        """Letters whose image starts with themselves"""
        return [l for l in self.alphabet if self.images[l][0] == l]

    def fixed_point_prefix(self, seed, min_len, cap=None):
        """The first `min_len` letters of the one-sided fixed point grown
        from `seed`.

        :raises: :exc:`PreconditionError` if the image of `seed` does not
          start with `seed`, or the fixed point does not grow
        """
        if min_len < 1:
            raise exceptions.PreconditionError(
                "Prefix length must be >= 1, got %s" % min_len)
        image = self[seed]
        if image[0] != seed:
            raise exceptions.PreconditionError(
                "%s is not extendable: its image %s does not start with it"
                % (format_letter(seed), image))
        if cap is None:
            cap = MAX_WORD_LENGTH
        word = Word((seed, ))
        while len(word) < min_len:
            size = self.image_length(word)
            if size == len(word):
                raise exceptions.PreconditionError(
                    "The fixed point grown from %s is finite (%s)"
                    % (format_letter(seed), word))
            if size > cap:
                raise exceptions.ResourceLimitError(
                    "Prefix of length %d needs %d letters (limit %d)"
                    % (min_len, size, cap))
            word = self.apply(word)
        return word[:min_len]

    def matrix(self):
        """Substitution matrix; entry [w][w'] counts w' in the image of w"""
        rows = []
        for letter in self.alphabet:
            counts = Counter(self.images[letter])
            rows.append([counts.get(other, 0) for other in self.alphabet])
        return SubstitutionMatrix(rows, alphabet=self.alphabet)

    def primitivity_power(self, max_k=None):
        """Smallest k <= `max_k` with a positive k-th matrix power, or None.

        `max_k` defaults to Wielandt's bound (n-1)^2+1, past which a
        primitive n x n matrix cannot stay non-positive.
        """
        return self.matrix().primitivity_power(max_k)

    def spectral_info(self):
        return self.matrix().spectral_info()


class SubstitutionMatrix(object):
    """A square nonnegative integer matrix with exact arithmetic"""

    def __init__(self, entries, alphabet=None):
        rows = []
        for row in entries:
            try:
                values = [int(x) for x in row]
            except (TypeError, ValueError):
                raise exceptions.InvalidInputError(
                    "Matrix entries must be integers: %r" % (row, ))
            if list(values) != list(row):
                raise exceptions.InvalidInputError(
                    "Matrix entries must be integers: %r" % (row, ))
            rows.append(tuple(values))
        k = len(rows)
        if k == 0 or any(len(row) != k for row in rows):
            raise exceptions.InvalidInputError("Matrix must be square")
        if any(x < 0 for row in rows for x in row):
            raise exceptions.InvalidInputError(
                "Matrix entries must be nonnegative")
        self.entries = tuple(rows)
        self.alphabet = alphabet

    @property
    def k(self):
        return len(self.entries)

    def as_array(self):
        """Entries as an object array of Python ints (exact products)"""
        ret = np.empty((self.k, self.k), dtype=object)
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                ret[i, j] = x
        return ret

    def tolist(self):
        return [list(row) for row in self.entries]

    def __eq__(self, other):
        if isinstance(other, SubstitutionMatrix):
            other = other.entries
        try:
            return self.tolist() == [list(row) for row in other]
        except TypeError:
            return False

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "<SubstitutionMatrix(%s)>" % self.tolist()

    def __matmul__(self, other):
        product = self.as_array().dot(other.as_array())
        return SubstitutionMatrix(product.tolist(), alphabet=self.alphabet)

    def power(self, n):
        if n < 0:
            raise exceptions.PreconditionError("Negative matrix power")
        ret = np.identity(self.k, dtype=int).astype(object)
        base = self.as_array()
        for i in range(n):
            ret = ret.dot(base)
        return SubstitutionMatrix(ret.tolist(), alphabet=self.alphabet)

    def primitivity_power(self, max_k=None):
        if max_k is None:
            max_k = (self.k - 1) ** 2 + 1
        if max_k < 1:
            raise exceptions.PreconditionError(
                "max_k must be >= 1, got %s" % max_k)
        base = self.as_array()
        current = base
        for k in range(1, max_k + 1):
            if all(x > 0 for x in current.flat):
                return k
            current = current.dot(base)
        return None

    def spectral_info(self):
        """Perron eigenvalue, moduli of the other eigenvalues and the
        Pisot verdict.

        Eigenvalues come from LAPACK's QR iteration on the (tiny) dense
        matrix.
        """
        if self.k > MAX_SPECTRAL_SIZE:
            raise exceptions.ResourceLimitError(
                "Spectral analysis is limited to %d letters, got %d"
                % (MAX_SPECTRAL_SIZE, self.k))
        eigenvalues = np.linalg.eigvals(np.array(self.entries, dtype=float))
        order = np.argsort(-np.abs(eigenvalues), kind='stable')
        eigenvalues = eigenvalues[order]
        dominant = eigenvalues[0]
        if abs(dominant.imag) > 1e-9 * max(1.0, abs(dominant)):
            log.warning('Dominant eigenvalue %s is not real', dominant)
        return SpectralInfo(abs(dominant), np.abs(eigenvalues[1:]),
                            eigenvalues=eigenvalues)


class SpectralInfo(object):
    """Dominant eigenvalue, other moduli and Pisot verdict of a matrix.

    ``pisot`` holds when the dominant eigenvalue exceeds 1 and every other
    modulus is strictly below 1. Moduli within :data:`PISOT_MARGIN` of 1
    cannot be placed by floating point; they set ``boundary`` and make
    ``pisot`` false. :attr:`verdict` then reads ``indeterminate`` unless
    another modulus already rules Pisot out.
    """

    def __init__(self, dominant, others, eigenvalues=None,
                 margin=PISOT_MARGIN):
        self.dominant = float(dominant)
        self.others = tuple(float(m) for m in others)
        self.eigenvalues = eigenvalues
        self.margin = margin
        self.boundary = any(abs(m - 1.0) <= margin for m in self.others) \
            or abs(self.dominant - 1.0) <= margin
        self.pisot = (self.dominant > 1.0 + margin and
                      all(m < 1.0 - margin for m in self.others))

    @property
    def verdict(self):
        """One of :data:`PISOT`, :data:`NOT_PISOT`, :data:`INDETERMINATE`"""
        if self.pisot:
            return PISOT
        if self.dominant < 1.0 - self.margin or \
                any(m > 1.0 + self.margin for m in self.others):
            return NOT_PISOT
        if self.boundary:
            return INDETERMINATE
        return NOT_PISOT

    def __repr__(self):
        return "<SpectralInfo(dominant=%.12g, others=%s, pisot=%s)>" % (
            self.dominant, ['%.6g' % m for m in self.others], self.pisot)


def substitution_matrix(sub):
    return sub.matrix()


def spectral_info(matrix):
    """Spectral summary of a substitution matrix (or nested lists)"""
    if not isinstance(matrix, SubstitutionMatrix):
        matrix = SubstitutionMatrix(matrix)
    return matrix.spectral_info()


def apply_literal_map(word, mapping):
    """Replace every letter of `word` by ``mapping[letter]``"""
    try:
        return Word(mapping[letter] for letter in word)
    except KeyError as e:
        raise exceptions.InvalidInputError(
            "Letter %s has no image under the literal map"
            % format_letter(e.args[0]))


def product_substitution(xi, eta):
    """The substitution (x, y) -> (xi(x), eta(y)) read positionwise.

    Both rules must have constant length L, and the same L.
    """
    if not (xi.constant_length and eta.constant_length):
        raise exceptions.PreconditionError(
            "Product substitution needs constant-length rules")
    if xi.length != eta.length:
        raise exceptions.PreconditionError(
            "Product substitution needs equal lengths, got %d and %d"
            % (xi.length, eta.length))
    alphabet = [(x, y) for x in xi.alphabet for y in eta.alphabet]
    images = dict(((x, y), list(zip(xi[x], eta[y]))) for x, y in alphabet)
    name = None
    if xi.name and eta.name:
        name = '%sx%s' % (xi.name, eta.name)
    return Substitution(images, alphabet=alphabet, name=name)


def load_substitution(path):
    """Read a substitution from ``letter -> image`` lines.

    Letters are single characters unless the image is written with
    spaces between letters. Blank lines and ``#`` comments are skipped.
    """
    if not os.path.exists(path):
        raise exceptions.PathNotFoundError(path)
    images = dict()
    order = []
    fd = open(path)
    try:
        for lineno, line in enumerate(fd, 1):
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            if '->' not in line:
                raise exceptions.InvalidInputError(
                    "%s:%d: expected 'letter -> image', got %r"
                    % (path, lineno, line))
            letter, image = [part.strip() for part in line.split('->', 1)]
            if not letter or not image:
                raise exceptions.InvalidInputError(
                    "%s:%d: empty letter or image" % (path, lineno))
            if letter in images:
                raise exceptions.InvalidInputError(
                    "%s:%d: letter %s defined twice" % (path, lineno, letter))
            if ' ' in image:
                image = image.split()
            images[letter] = image
            order.append(letter)
    finally:
        fd.close()
    if not images:
        raise exceptions.InvalidInputError("%s defines no letters" % path)
    name = os.path.splitext(os.path.basename(path))[0]
    return Substitution(images, alphabet=order, name=name)
