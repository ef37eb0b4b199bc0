"""
   Transport exponent beta from m2(T) ~ C T^beta, and regime labels.
"""
import logging

import numpy as np

from hybridqc import exceptions
from hybridqc.transport.dynamics import MomentSeries
from hybridqc.util import tables


log = logging.getLogger(__name__)

MIN_FIT_POINTS = 8

LOCALIZED = 'localized'
ANOMALOUS = 'anomalous'
NEAR_BALLISTIC = 'near_ballistic'

PLATEAU_RUN = 'run'
PLATEAU_ONSET = 'onset'
PLATEAU_REFERENCES = (PLATEAU_RUN, PLATEAU_ONSET)


class TransportFit(object):
    """Least-squares line through (log T, log m2)"""

    def __init__(self, beta, log_c, residual, t_window, n_points,
                 n_excluded=0):
        self.beta = beta
        self.log_c = log_c
        self.residual = residual
        self.t_window = t_window
        self.n_points = n_points
        self.n_excluded = n_excluded

    @property
    def C(self):
        return float(np.exp(self.log_c))

    def __repr__(self):
        return "<TransportFit(beta=%.4f, residual=%.3g, t in [%g, %g], " \
            "%d points)>" % ((self.beta, self.residual) + tuple(self.t_window)
                             + (self.n_points, ))


class RegimeThresholds(object):
    """Thresholds for :func:`classify`; set from the ``[classify]``
    section of an experiment config.

    `plateau_reference` picks the denominator of :func:`plateau_ratio`:
    ``run`` (the whole run) or ``onset`` (the samples before the fit
    window).
    """

    names = ('localized_beta', 'plateau_ratio', 'ballistic_beta',
             'plateau_reference')

    def __init__(self, localized_beta=0.2, plateau_ratio=1.25,
                 ballistic_beta=1.9, plateau_reference=PLATEAU_RUN):
        self.localized_beta = float(localized_beta)
        self.plateau_ratio = float(plateau_ratio)
        self.ballistic_beta = float(ballistic_beta)
        if plateau_reference not in PLATEAU_REFERENCES:
            raise ValueError("plateau_reference must be one of %s, not %r"
                             % (', '.join(PLATEAU_REFERENCES),
                                plateau_reference))
        self.plateau_reference = plateau_reference

    @classmethod
    def from_dict(cls, d):
        return cls(**dict((k, v) for k, v in d.items() if k in cls.names))

    def as_dict(self):
        return dict((name, getattr(self, name)) for name in self.names)


class RegimeLabel(object):
    """One of ``localized``, ``anomalous``, ``near_ballistic``, with the
    numbers that decided it"""

    def __init__(self, label, thresholds, beta, ratio):
        self.label = label
        self.thresholds = thresholds
        self.beta = beta
        self.ratio = ratio

    def __str__(self):
        return self.label

    def __eq__(self, other):
        return str(self) == str(other)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.label)

    def __repr__(self):
        return "<RegimeLabel(%s, beta=%.4f, plateau ratio=%.4g)>" % (
            self.label, self.beta, self.ratio)


def _arrays(series):
    if isinstance(series, MomentSeries):
        return series.t, series.m2
    t, m2 = series
    return np.asarray(t, dtype=float), np.asarray(m2, dtype=float)


def last_decade(series):
    t, m2 = _arrays(series)
    if not len(t):
        raise exceptions.InsufficientDataError("Empty moment series")
    t_max = float(t.max())
    return t_max / 10.0, t_max


def fit_beta(series, t_min=None, t_max=None, min_points=MIN_FIT_POINTS):
    """Ordinary least squares of log m2 against log T over
    [t_min, t_max], by default the last decade of the series.

    Samples with m2 <= 0 (or T <= 0) are left out and counted in
    ``n_excluded``.
    """
    t, m2 = _arrays(series)
    default_min, default_max = last_decade((t, m2))
    if t_min is None:
        t_min = default_min
    if t_max is None:
        t_max = default_max
    if not t_min < t_max:
        raise exceptions.PreconditionError(
            "Empty fit window [%g, %g]" % (t_min, t_max))
    inside = (t >= t_min) & (t <= t_max)
    usable = inside & (t > 0) & (m2 > 0)
    n_points = int(usable.sum())
    if n_points < min_points:
        raise exceptions.InsufficientDataError(
            "%d usable samples in [%g, %g], at least %d needed"
            % (n_points, t_min, t_max, min_points))
    x = np.log(t[usable])
    y = np.log(m2[usable])
    beta, log_c = np.polyfit(x, y, 1)
    residual = float(np.sqrt(np.mean((y - (beta * x + log_c)) ** 2)))
    n_excluded = int(inside.sum()) - n_points
    if n_excluded:
        log.info('Left %d sample(s) with m2 <= 0 out of the fit', n_excluded)
    return TransportFit(float(beta), float(log_c), residual,
                        (float(t_min), float(t_max)), n_points, n_excluded)


def plateau_ratio(series, t_min, reference=PLATEAU_RUN):
    """max m2 over [t_min, T_max] divided by max m2 over the whole run
    (``reference='run'``) or over (0, t_min) (``reference='onset'``).

    A bounded series gives 1 against the run. Infinite when the
    reference samples are missing or all zero.
    """
    t, m2 = _arrays(series)
    late = m2[t >= t_min]
    if not len(late):
        raise exceptions.InsufficientDataError(
            "No samples after t=%g" % t_min)
    if reference == PLATEAU_ONSET:
        before = m2[(t > 0) & (t < t_min)]
    elif reference == PLATEAU_RUN:
        before = m2
    else:
        raise exceptions.InvalidInputError(
            "Unknown plateau reference %r" % (reference, ))
    if not len(before) or before.max() <= 0:
        return float('inf')
    return float(late.max() / before.max())


def classify(series, fit, thresholds=None):
    """localized when beta < localized_beta and m2 has flattened out
    (plateau ratio below ``plateau_ratio``); near_ballistic when
    beta > ballistic_beta; anomalous otherwise"""
    if thresholds is None:
        thresholds = RegimeThresholds()
    ratio = plateau_ratio(series, fit.t_window[0],
                          thresholds.plateau_reference)
    if fit.beta < thresholds.localized_beta and \
            ratio < thresholds.plateau_ratio:
        label = LOCALIZED
    elif fit.beta > thresholds.ballistic_beta:
        label = NEAR_BALLISTIC
    else:
        label = ANOMALOUS
    return RegimeLabel(label, thresholds, fit.beta, ratio)


def read_series(path):
    """Load a ``t,m2,norm`` CSV written by
    :meth:`~hybridqc.transport.dynamics.MomentSeries.to_csv`"""
    columns, data, metadata = tables.read_table(path)
    try:
        index = [columns.index(name) for name in MomentSeries.columns]
    except ValueError:
        raise exceptions.InvalidInputError(
            "%s has columns %s, expected %s"
            % (path, ','.join(columns), ','.join(MomentSeries.columns)))
    return MomentSeries(data[:, index].tolist(), metadata=metadata)
