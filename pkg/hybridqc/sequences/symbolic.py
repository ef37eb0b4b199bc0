"""
   Finite-window symbolic dynamics.

   Statements about hulls are infinite; everything here looks at a single
   orbit through a finite window and reports evidence, never proof. Every
   result carries the window length it was computed on.
"""
import math
import logging
import warnings
from fractions import Fraction

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from hybridqc import exceptions
from hybridqc.sequences.substitution import Word


log = logging.getLogger(__name__)

#: witness_search() refuses longer words (the pair count explodes)
MAX_WITNESS_LENGTH = 12
#: boshernitzan_score() needs at least this many letters per unit of n
BOSHERNITZAN_WINDOW_FACTOR = 1000


class OccurrenceSet(object):
    """Sorted positions at which `word` is a prefix of the shifted
    sequence, inside a window of `window_len` letters"""

    def __init__(self, word, positions, window_len):
        self.word = Word(word)
        self.positions = np.asarray(positions, dtype=np.int64)
        self.window_len = window_len

    def __len__(self):
        return len(self.positions)

    def __iter__(self):
        return iter(self.positions.tolist())

    def tolist(self):
        return self.positions.tolist()

    def max_gap(self):
        """Largest distance between successive occurrences: the empirical
        bound m(w) on the gaps"""
        if len(self.positions) < 2:
            raise exceptions.InsufficientDataError(
                "%s occurs %d time(s) in %d letters; a gap needs two "
                "occurrences" % (self.word, len(self.positions),
                                 self.window_len))
        return int(np.diff(self.positions).max())

    def __repr__(self):
        return "<OccurrenceSet(%s: %d in %d letters)>" % (
            self.word, len(self.positions), self.window_len)


class ComplexityProfile(object):
    """Observed factor counts p(n) and cylinder frequencies over a window.

    ``counts`` are lower bounds for the complexity of the infinite
    sequence.
    """

    def __init__(self, name, window_len, n_values, counts, eta_hat):
        self.name = name
        self.window_len = window_len
        self.n_values = list(n_values)
        self.counts = list(counts)
        self.eta_hat = list(eta_hat)

    @property
    def scores(self):
        return [n * eta for n, eta in zip(self.n_values, self.eta_hat)]

    def rows(self):
        """``(n, p_n, eta_hat, score)`` tuples, the diagnose CSV rows"""
        return list(zip(self.n_values, self.counts, self.eta_hat,
                        self.scores))


class Witness(object):
    """A pair of equally long words (r, s), each in the observed language
    of its sequence, that never occurs aligned in the window for any
    relative shift in `shift_range`"""

    def __init__(self, r, s, shift_range, window_len):
        self.r = Word(r)
        self.s = Word(s)
        self.shift_range = tuple(shift_range)
        self.window_len = window_len

    def as_tuple(self):
        return (str(self.r), str(self.s))

    def __len__(self):
        return len(self.r)

    def __str__(self):
        return '(%s, %s)' % self.as_tuple()

    def __repr__(self):
        return "<Witness%s shifts %s..%s, %d letters>" % (
            self, self.shift_range[0], self.shift_range[1], self.window_len)


class IndependenceVerdict(object):
    """Outcome of the bounded search for theta^l = vartheta^k"""

    DEPENDENT = 'dependent'
    INDEPENDENT = 'independent_up_to_bound'

    def __init__(self, theta, vartheta, bound, tolerance, hit=None,
                 best=None, convergents=()):
        self.theta = theta
        self.vartheta = vartheta
        self.bound = bound
        self.tolerance = tolerance
        self.best = best
        self.convergents = list(convergents)
        if hit is None:
            self.status = self.INDEPENDENT
            self.l = self.k = None
        else:
            self.status = self.DEPENDENT
            self.l, self.k = hit

    @property
    def independent(self):
        return self.status == self.INDEPENDENT

    def __str__(self):
        if self.independent:
            return '%s(%d)' % (self.status, self.bound)
        return '%s(%d, %d)' % (self.status, self.l, self.k)

    def __repr__(self):
        return "<IndependenceVerdict(%s, theta=%.12g, vartheta=%.12g)>" % (
            self, self.theta, self.vartheta)


def _window(source, window_len):
    """The available part of the first `window_len` letters, as codes"""
    length = source.available(window_len)
    return source.codes(0, length)


def _match_mask(codes, pattern):
    """mask[p] is True iff `pattern` occurs at p"""
    n, m = len(codes), len(pattern)
    if m > n:
        return np.zeros(0, dtype=bool)
    mask = np.ones(n - m + 1, dtype=bool)
    for i, c in enumerate(pattern):
        mask &= codes[i:i + n - m + 1] == c
    return mask


def _factors(codes, n):
    """Distinct length-n factors (rows) and their overlapping counts"""
    rows = sliding_window_view(codes, n)
    return np.unique(rows, axis=0, return_counts=True)


def occurrences(source, w, window_len):
    """All positions p in [0, window_len - |w|] where `w` occurs"""
    w = Word(w)
    if len(w) > window_len:
        raise exceptions.PreconditionError(
            "Word %s is longer than the window (%d)" % (w, window_len))
    codes = _window(source, window_len)
    if any(letter not in source.alphabet for letter in w):
        return OccurrenceSet(w, [], len(codes))
    pattern = source.alphabet.encode(w)
    positions = np.flatnonzero(_match_mask(codes, pattern))
    return OccurrenceSet(w, positions, len(codes))


def max_gap(occ):
    return occ.max_gap()


def epsilon_periods(source, radius, window_len):
    """Shifts n in [1, window_len - radius] whose first `radius` letters
    agree with those at 0, i.e. d(sigma^n x, x) < 2^-radius read on
    one-sided windows.

    The returned set's :meth:`~OccurrenceSet.max_gap` is the syndeticity
    diagnostic. Finite sources shorter than the radius give an empty set.
    """
    if radius < 1:
        raise exceptions.PreconditionError(
            "Radius must be >= 1, got %s" % radius)
    if radius >= window_len:
        raise exceptions.PreconditionError(
            "Radius %d does not fit a window of %d letters"
            % (radius, window_len))
    codes = _window(source, window_len)
    if len(codes) <= radius:
        log.debug('%s has %d letters, no epsilon-period of radius %d',
                  source, len(codes), radius)
        return OccurrenceSet(source.alphabet.decode(codes), [], len(codes))
    block = codes[:radius]
    positions = np.flatnonzero(_match_mask(codes, block))
    return OccurrenceSet(source.alphabet.decode(block),
                         positions[positions >= 1], len(codes))


def complexity(source, n, window_len):
    """Number of distinct length-n factors seen in the window"""
    if n > window_len:
        raise exceptions.PreconditionError(
            "Factor length %d exceeds the window (%d)" % (n, window_len))
    if n == 0:
        return 1
    codes = _window(source, window_len)
    if n > len(codes):
        return 0
    factors, counts = _factors(codes, n)
    return len(factors)


def complexity_profile(source, n_values, window_len):
    """p(n) and eta_hat(n) for every n in `n_values`"""
    codes = _window(source, window_len)
    n_values = [int(n) for n in n_values]
    counts, etas = [], []
    for n in n_values:
        if n < 1 or n > len(codes):
            raise exceptions.PreconditionError(
                "Factor length %d does not fit a window of %d letters"
                % (n, len(codes)))
        factors, occ = _factors(codes, n)
        counts.append(len(factors))
        etas.append(occ.min() / float(len(codes) - n + 1))
    return ComplexityProfile(str(source), len(codes), n_values, counts, etas)


def boshernitzan_score(source, n, window_len):
    """n * eta_hat(n), where eta_hat(n) is the smallest observed frequency
    of a length-n factor (overlapping counts over window_len - n + 1
    positions)"""
    if n < 1:
        raise exceptions.PreconditionError(
            "Factor length must be >= 1, got %s" % n)
    needed = BOSHERNITZAN_WINDOW_FACTOR * n
    codes = _window(source, window_len)
    if len(codes) < needed:
        raise exceptions.PreconditionError(
            "Boshernitzan score at n=%d needs a window of at least %d "
            "letters, got %d" % (n, needed, len(codes)))
    factors, counts = _factors(codes, n)
    return n * counts.min() / float(len(codes) - n + 1)


def pair_factor_occurs(a, b, r, s, rel_shift, window_len):
    """Positions p where `r` occurs in `a` at p and `s` occurs in `b` at
    p + rel_shift: the aligned occurrences of (r, s) along the orbit of
    (a, sigma^rel_shift b). Both occurrence scans use the same window."""
    r, s = Word(r), Word(s)
    if len(r) != len(s):
        raise exceptions.PreconditionError(
            "Aligned pairs need equal lengths, got %d and %d"
            % (len(r), len(s)))
    occ_a = occurrences(a, r, window_len)
    occ_b = occurrences(b, s, window_len)
    shifted = occ_b.positions - rel_shift
    return np.intersect1d(occ_a.positions, shifted, assume_unique=True)


def witness_search(a, b, max_word_len, window_len, shift_radius=0):
    """Pairs (r, s) of equal length <= `max_word_len` from the observed
    languages of `a` and `b` that never occur aligned in the window, for
    any relative shift in [-shift_radius, shift_radius].

    Each witness is evidence that the orbit closure of (a, b) misses
    (r, s), i.e. that the product of the hulls is not minimal. An empty
    list is consistent with minimality.
    """
    if max_word_len < 1 or max_word_len > MAX_WITNESS_LENGTH:
        raise exceptions.PreconditionError(
            "Word length for witnesses must be in 1..%d, got %s"
            % (MAX_WITNESS_LENGTH, max_word_len))
    if shift_radius < 0:
        raise exceptions.PreconditionError(
            "Shift radius must be >= 0, got %s" % shift_radius)
    length = min(a.available(window_len), b.available(window_len))
    codes_a = a.codes(0, length)
    codes_b = b.codes(0, length)
    shift_range = (-shift_radius, shift_radius)

    ret = []
    for m in range(1, max_word_len + 1):
        if m > length:
            break
        rows_a = sliding_window_view(codes_a, m)
        rows_b = sliding_window_view(codes_b, m)
        seen = set()
        for j in range(-shift_radius, shift_radius + 1):
            lo = max(0, -j)
            hi = min(length - m, length - m - j)
            if hi < lo:
                continue
            pairs = np.hstack([rows_a[lo:hi + 1], rows_b[lo + j:hi + j + 1]])
            seen.update(tuple(row) for row in np.unique(pairs, axis=0).tolist())
        language_a = np.unique(rows_a, axis=0).tolist()
        language_b = np.unique(rows_b, axis=0).tolist()
        found = 0
        for r in language_a:
            for s in language_b:
                if tuple(r + s) not in seen:
                    ret.append(Witness(a.alphabet.decode(r),
                                       b.alphabet.decode(s),
                                       shift_range, length))
                    found += 1
        log.debug('%d witness(es) of length %d for (%s, %s)',
                  found, m, a, b)
    return ret


def log_ratio_convergents(theta, vartheta, max_den=64):
    """Continued-fraction convergents k/l of log(theta)/log(vartheta) with
    l <= `max_den`; each is a best attempt at theta^l = vartheta^k"""
    x = math.log(theta) / math.log(vartheta)
    a = int(math.floor(x))
    p0, q0, p1, q1 = 1, 0, a, 1
    ret = [Fraction(p1, q1)]
    frac = x - a
    while frac > 1e-12:
        x = 1.0 / frac
        a = int(math.floor(x))
        frac = x - a
        p0, q0, p1, q1 = p1, q1, a * p1 + p0, a * q1 + q0
        if q1 > max_den:
            break
        ret.append(Fraction(p1, q1))
    return ret


def multiplicative_independence(theta, vartheta, L=64, tol=1e-9,
                                near=1e-6):
    """Search 1 <= l, k <= L for |l log(theta) - k log(vartheta)| <= tol.

    The first hit in (l, k) order gives ``dependent(l, k)``; otherwise the
    verdict is ``independent_up_to_bound(L)``. A closest miss within
    `near` raises a :class:`~hybridqc.exceptions.HybridQCWarning`, since
    floating point cannot prove irrationality.
    """
    if theta <= 1 or vartheta <= 1:
        raise exceptions.PreconditionError(
            "Both numbers must exceed 1, got %r and %r" % (theta, vartheta))
    if L < 1 or tol <= 0:
        raise exceptions.PreconditionError(
            "Need L >= 1 and tol > 0, got L=%r, tol=%r" % (L, tol))
    powers = np.arange(1, L + 1, dtype=float)
    diff = np.abs(powers[:, None] * math.log(theta) -
                  powers[None, :] * math.log(vartheta))
    hits = np.argwhere(diff <= tol)
    i, j = np.unravel_index(np.argmin(diff), diff.shape)
    best = (int(i) + 1, int(j) + 1, float(diff[i, j]))
    convergents = log_ratio_convergents(theta, vartheta, max_den=L)
    hit = None
    if len(hits):
        hit = (int(hits[0][0]) + 1, int(hits[0][1]) + 1)
    elif best[2] <= near:
        msg = ("%.12g and %.12g are within %.3g of dependence at "
               "(l, k) = (%d, %d)" % (theta, vartheta, best[2],
                                      best[0], best[1]))
        log.warning(msg)
        warnings.warn(msg, exceptions.HybridQCWarning)
    return IndependenceVerdict(theta, vartheta, L, tol, hit=hit, best=best,
                               convergents=convergents)
