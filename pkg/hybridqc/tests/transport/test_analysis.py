#!/usr/bin/env python
# -*- coding: utf-8 -*-

import numpy as np

from hybridqc import exceptions
from hybridqc.transport.analysis import *
from hybridqc.transport.dynamics import MomentSeries
from hybridqc.tests import fixture


T = np.logspace(-2, np.log10(2000.0), 100)


def power_law(beta, c=1.0, t=T):
    return MomentSeries([(x, c * x ** beta, 1.0) for x in t])


class TestFit(fixture.Base):

    def test_exact_power_law(self):
        for beta in (0.0, 0.5, 1.0, 1.7, 2.0):
            fit = fit_beta(power_law(beta, 3.0))
            self.assertAlmostEqual(fit.beta, beta, places=10)
            self.assertAlmostEqual(fit.C, 3.0, places=8)
            self.assertTrue(fit.residual < 1e-10)

    def test_default_window(self):
        fit = fit_beta(power_law(1.0))
        self.assertAlmostEqual(fit.t_window[0], 200.0)
        self.assertAlmostEqual(fit.t_window[1], 2000.0)
        self.assertEqual(fit.n_points, (T >= 200.0).sum())

    def test_rescaling(self):
        """beta does not change when m2 is scaled"""
        series = MomentSeries([(x, x ** 1.3 * (1 + 0.1 * np.sin(x)), 1.0)
                               for x in T])
        scaled = MomentSeries([(x, 7.5 * m, 1.0) for x, m, n in series])
        self.assertAlmostEqual(fit_beta(series).beta, fit_beta(scaled).beta,
                               places=10)

    def test_tuple_input(self):
        fit = fit_beta((T, 2 * T ** 2), t_min=1.0, t_max=100.0)
        self.assertAlmostEqual(fit.beta, 2.0, places=10)
        self.assertEqual(fit.t_window, (1.0, 100.0))

    def test_excluded(self):
        m2 = T ** 1.5
        m2[-3:] = 0.0
        fit = fit_beta((T, m2))
        self.assertEqual(fit.n_excluded, 3)
        self.assertAlmostEqual(fit.beta, 1.5, places=10)

    def test_insufficient(self):
        series = power_law(1.0, t=np.logspace(0, 1, 5))
        self.assertRaises(exceptions.InsufficientDataError, fit_beta, series)
        self.assertRaises(exceptions.InsufficientDataError, fit_beta,
                          MomentSeries())
        self.assertRaises(exceptions.PreconditionError, fit_beta,
                          power_law(1.0), t_min=10.0, t_max=10.0)


class TestClassify(fixture.Base):

    def label(self, series, thresholds=None):
        return classify(series, fit_beta(series), thresholds)

    def test_localized(self):
        series = MomentSeries([(x, min(x ** 2, 100.0), 1.0) for x in T])
        label = self.label(series)
        self.assertEqual(label, LOCALIZED)
        self.assertAlmostEqual(label.ratio, 1.0)

    def test_near_ballistic(self):
        self.assertEqual(self.label(power_law(2.0, 2.0)), NEAR_BALLISTIC)

    def test_anomalous(self):
        self.assertEqual(self.label(power_law(1.0)), ANOMALOUS)

    def test_slow_growth_is_localized_against_the_run(self):
        """The default plateau test compares the last decade with the
        whole run, so a small beta alone decides"""
        label = self.label(power_law(0.1))
        self.assertEqual(str(label), LOCALIZED)
        self.assertAlmostEqual(label.ratio, 1.0)

    def test_slow_growth_is_not_localized_against_the_onset(self):
        """Compared with the samples before the window, m2 is still rising"""
        thresholds = RegimeThresholds(plateau_reference='onset')
        label = self.label(power_law(0.1), thresholds)
        self.assertEqual(str(label), ANOMALOUS)
        self.assertTrue(label.ratio > 1.25)

    def test_bounded_oscillation_is_localized(self):
        """Large early excursions that never return still give a plateau"""
        m2 = 50.0 + 40.0 * np.cos(T) * np.exp(-T / 20.0)
        series = MomentSeries([(x, m, 1.0) for x, m in zip(T, m2)])
        label = self.label(series)
        self.assertEqual(label, LOCALIZED)
        self.assertTrue(label.ratio < 0.6)

    def test_thresholds(self):
        thresholds = RegimeThresholds.from_dict(
            dict(localized_beta='0.05', plateau_ratio=2, other=1))
        self.assertEqual(thresholds.as_dict(),
                         dict(localized_beta=0.05, plateau_ratio=2.0,
                              ballistic_beta=1.9, plateau_reference='run'))
        self.assertEqual(self.label(power_law(0.1), thresholds), ANOMALOUS)
        thresholds = RegimeThresholds(localized_beta=0.2, plateau_ratio=1.3,
                                      plateau_reference='onset')
        self.assertEqual(self.label(power_law(0.1), thresholds), LOCALIZED)
        self.assertRaises(ValueError, RegimeThresholds,
                          plateau_reference='before')

    def test_plateau_ratio(self):
        self.assertAlmostEqual(plateau_ratio((T, T), 0.001), 1.0)
        self.assertEqual(plateau_ratio((T, T), 0.001, 'onset'), float('inf'))
        self.assertEqual(plateau_ratio((T, 0 * T), 1.0), float('inf'))
        self.assertAlmostEqual(plateau_ratio(([1, 2, 3, 4], [1, 2, 2, 2]), 3),
                               1.0)
        self.assertAlmostEqual(
            plateau_ratio(([1, 2, 3, 4], [1, 4, 2, 2]), 3), 0.5)
        self.assertAlmostEqual(
            plateau_ratio(([1, 2, 3, 4], [1, 4, 2, 2]), 3, 'onset'), 0.5)
        self.assertAlmostEqual(
            plateau_ratio(([1, 2, 3, 4], [1, 2, 3, 4]), 3, 'onset'), 2.0)
        self.assertAlmostEqual(
            plateau_ratio(([1, 2, 3, 4], [1, 2, 3, 4]), 3), 1.0)
        self.assertRaises(exceptions.InsufficientDataError, plateau_ratio,
                          ([1, 2], [1, 2]), 5)
        self.assertRaises(exceptions.InvalidInputError, plateau_ratio,
                          ([1, 2], [1, 2]), 1, 'median')


class TestReadSeries(fixture.Pathed):

    def test_round_trip(self):
        series = power_law(1.2)
        path = series.to_csv(self.tmp_csv(), dict(parent_a='tm'))
        back = read_series(path)
        self.assertEqual(back.as_array().tolist(), series.as_array().tolist())
        self.assertEqual(back.metadata['parent_a'], 'tm')

    def test_wrong_columns(self):
        from hybridqc.util import tables
        path = tables.write_table(self.tmp_csv(), ['n', 'V_n'], [[0, 1]])
        self.assertRaises(exceptions.InvalidInputError, read_series, path)
        self.assertRaises(exceptions.PathNotFoundError, read_series,
                          self.tmp_named('missing.csv'))
