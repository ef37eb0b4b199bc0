#!/usr/bin/env python
# -*- coding: utf-8 -*-

import numpy as np
from scipy.special import jv

from hybridqc import exceptions
from hybridqc.transport.dynamics import *
from hybridqc.tests import fixture


def random_model(N, seed, lam=1.0):
    rnd = np.random.RandomState(seed)
    return LatticeModel(rnd.choice([-1.0, 1.0], N), lam)


class TestModel(fixture.Base):

    def test_apply_matches_matrix(self):
        model = random_model(50, 0, lam=0.7)
        x = np.random.RandomState(1).normal(size=50)
        self.assertAllClose(apply_hamiltonian(model, x), model.dense().dot(x),
                            atol=1e-14)
        z = x + 1j * x[::-1]
        self.assertAllClose(apply_hamiltonian(model, z),
                            model.sparse(complex).dot(z), atol=1e-14)

    def test_dirichlet(self):
        model = LatticeModel(np.zeros(4), 1.0)
        self.assertEqual(model.dense().tolist(),
                         [[0, 1, 0, 0], [1, 0, 1, 0], [0, 1, 0, 1],
                          [0, 0, 1, 0]])

    def test_defaults(self):
        model = LatticeModel(np.ones(9), 2.0)
        self.assertEqual(model.n0, 4)
        self.assertEqual(model.norm_bound, 4.0)
        self.assertAlmostEqual(model.default_dt(), DT_FACTOR / 4.0)

    def test_preconditions(self):
        self.assertRaises(exceptions.PreconditionError, LatticeModel,
                          np.ones(4), -1.0)
        self.assertRaises(exceptions.PreconditionError, LatticeModel,
                          np.ones(4), 1.0, 4)
        self.assertRaises(exceptions.InvalidInputError, LatticeModel, [])
        self.assertRaises(exceptions.InvalidInputError, apply_hamiltonian,
                          LatticeModel(np.ones(4)), np.ones(5))

    def test_second_moment(self):
        psi = WaveState.delta(11, 8)
        self.assertEqual(second_moment(psi, 5), 9.0)
        self.assertEqual(second_moment(psi, 8), 0.0)
        self.assertEqual(psi.norm(), 1.0)

    def test_wavefront(self):
        self.assertTrue(wavefront_safe(2000, 8192))
        self.assertFalse(wavefront_safe(2000, 8000))
        self.assertFalse(wavefront_safe(10, 100, n0=10))

    def test_geometric_steps(self):
        steps = geometric_steps(0.01, 100.0, 20)
        self.assertEqual(steps[0], 0)
        self.assertEqual(steps[-1], 10000)
        self.assertTrue((np.diff(steps) > 0).all())
        self.assertTrue(65 <= len(steps) <= 82)
        self.assertEqual(geometric_steps(1.0, 0.1).tolist(), [0])


class TestFreeLattice(fixture.Base):

    def test_ballistic(self):
        """m2(T) = 2 T^2 away from the ends"""
        model = LatticeModel(np.zeros(2048), 0.0)
        series = simulate(model, 50.0, points_per_decade=10)
        t, m2 = series.t, series.m2
        late = t >= 5.0
        self.assertAllClose(m2[late], 2 * t[late] ** 2, rtol=5e-3)

    def test_bessel(self):
        """|psi_n(t)| = |J_{n-n0}(2t)| on the free chain"""
        model = LatticeModel(np.zeros(256), 0.0)
        psi = exact_evolve(model, WaveState.delta(256, 128), 5.0)
        n = np.arange(256) - 128
        self.assertAllClose(np.abs(psi.psi), np.abs(jv(n, 10.0)), atol=1e-12)
        self.assertEqual(psi.t, 5.0)


class TestAccuracy(fixture.Base):

    def test_gauss4_against_exact(self):
        """Random +-1 chains of 64 sites up to T = 20 at the default step"""
        for seed in range(20):
            model = random_model(64, seed)
            psi0 = WaveState.delta(64, model.n0)
            steps = int(round(20.0 / model.default_dt()))
            t = steps * model.default_dt()
            series = evolve(model, psi0, steps=steps, sample_every=steps,
                            scheme='gauss4')
            exact = exact_evolve(model, psi0, t)
            self.assertTrue(np.abs(series.final.psi - exact.psi).max() <= 1e-6,
                            seed)

    def test_leapfrog_small_step(self):
        model = random_model(64, 99)
        psi0 = WaveState.delta(64, model.n0)
        series = evolve(model, psi0, dt=5e-4, steps=4000, sample_every=1000)
        exact = exact_evolve(model, psi0, 2.0)
        self.assertTrue(np.abs(series.final.psi - exact.psi).max() <= 1e-5)
        self.assertEqual(len(series), 5)

    def _error(self, model, psi0, scheme, dt, t=1.0):
        steps = int(round(t / dt))
        final = evolve(model, psi0, dt, steps, sample_every=steps,
                       scheme=scheme).final
        return np.abs(final.psi - exact_evolve(model, psi0, t).psi).max()

    def test_convergence_order(self):
        """Halving dt divides the error by ~4 (leapfrog), ~16 (yoshida4)"""
        model = random_model(64, 7)
        psi0 = WaveState.delta(64, model.n0)
        e1 = self._error(model, psi0, 'leapfrog', 0.02)
        e2 = self._error(model, psi0, 'leapfrog', 0.01)
        self.assertTrue(3.5 < e1 / e2 < 4.5, e1 / e2)
        e1 = self._error(model, psi0, 'yoshida4', 0.05)
        e2 = self._error(model, psi0, 'yoshida4', 0.025)
        self.assertTrue(12 < e1 / e2 < 20, e1 / e2)


class TestConservation(fixture.Base):

    def test_time_reversal(self):
        """Forward then backward returns to the start"""
        model = random_model(128, 3)
        psi0 = WaveState.delta(128, model.n0)
        for scheme in SCHEMES:
            dt = model.default_dt()
            forward = evolve(model, psi0, dt, 1000, sample_every=1000,
                             scheme=scheme).final
            back = reverse(model, forward, dt, 1000, scheme=scheme)
            self.assertTrue(np.abs(back.psi - psi0.psi).max() <= 1e-8, scheme)
            self.assertAlmostEqual(back.t, 0.0)

    def test_gauss4_invariants(self):
        model = random_model(128, 4, lam=1.5)
        rnd = np.random.RandomState(5)
        psi0 = WaveState(rnd.normal(size=128), rnd.normal(size=128))
        e0, n0 = energy(model, psi0), psi0.norm()
        series = evolve(model, psi0, dt=0.05, steps=400, sample_every=100,
                        scheme='gauss4', hard_limit=1e-9 * n0)
        self.assertAlmostEqual(energy(model, series.final), e0,
                               delta=1e-9 * n0)
        self.assertAllClose(series.norm, n0, rtol=1e-11)

    def test_leapfrog_norm(self):
        """The norm oscillates by O((dt |H|)^2) and does not drift"""
        model = random_model(128, 6)
        series = simulate(model, 100.0, sample_every=100)
        bound = (model.default_dt() * model.norm_bound) ** 2
        self.assertTrue(np.abs(series.norm - 1.0).max() <= bound)

    def test_leapfrog_energy(self):
        """Each eigenmode's weight stays within a factor 1 + (dt w / 2)^2
        of its start, so <H> is bounded and does not drift"""
        model = random_model(128, 7, lam=1.5)
        rnd = np.random.RandomState(8)
        re, im = rnd.normal(size=128), rnd.normal(size=128)
        scale = np.sqrt(np.dot(re, re) + np.dot(im, im))
        psi = WaveState(re / scale, im / scale)
        dt, h = model.default_dt(), model.norm_bound
        bound = 0.5 * (dt * h) ** 2 * h
        e0 = energy(model, psi)
        errors = []
        for chunk in range(30):
            psi = evolve(model, psi, dt, 1000, sample_every=1000).final
            errors.append(abs(energy(model, psi) - e0))
        self.assertTrue(max(errors) <= bound, (max(errors), bound))
        self.assertTrue(psi.t > 150.0)


class TestEvolve(fixture.Base):

    def test_zero_steps(self):
        model = random_model(16, 0)
        psi0 = WaveState.delta(16, model.n0)
        series = evolve(model, psi0, steps=0)
        self.assertEqual(len(series), 1)
        self.assertEqual(series.as_array().tolist(), [[0.0, 0.0, 1.0]])
        self.assertEqual(series.final.psi.tolist(), psi0.psi.tolist())

    def test_sampling(self):
        model = random_model(16, 0)
        psi0 = WaveState.delta(16, model.n0)
        series = evolve(model, psi0, dt=0.01, steps=10, sample_every=4)
        self.assertAllClose(series.t, [0, 0.04, 0.08, 0.1])
        series = evolve(model, psi0, dt=0.01, steps=10, sample_at=[3, 50])
        self.assertAllClose(series.t, [0, 0.03, 0.1])
        self.assertEqual(series.metadata['scheme'], 'leapfrog')

    def test_instability(self):
        """Leapfrog is unstable once dt |H| > 2"""
        model = random_model(64, 0)
        psi0 = WaveState.delta(64, model.n0)
        self.assertRaises(exceptions.IntegratorInstabilityError, evolve,
                          model, psi0, 2.0, 500)

    def test_non_finite(self):
        values = np.zeros(16)
        values[8] = np.nan
        model = LatticeModel(values, 1.0)
        self.assertRaises(exceptions.NumericalFailureError, evolve,
                          model, WaveState.delta(16, 8), 0.01, 5)

    def test_bad_arguments(self):
        model = random_model(16, 0)
        psi0 = WaveState.delta(16, model.n0)
        self.assertRaises(exceptions.PreconditionError, evolve, model, psi0,
                          0.0, 5)
        self.assertRaises(exceptions.PreconditionError, evolve, model, psi0,
                          0.01, -1)
        self.assertRaises(exceptions.PreconditionError, evolve, model, psi0,
                          0.01, 5, scheme='euler')
        self.assertRaises(exceptions.PreconditionError, evolve, model, psi0,
                          0.01, 5, sample_every=0)
        self.assertRaises(exceptions.InvalidInputError, evolve, model,
                          WaveState.delta(17, 3), 0.01, 5)

    def test_exact_limit(self):
        model = LatticeModel(np.zeros(MAX_EXACT_SITES + 1), 0.0)
        self.assertRaises(exceptions.ResourceLimitError, exact_evolve,
                          model, WaveState.delta(model.N, 0), 1.0)


class TestMomentSeries(fixture.Pathed):

    def test_increasing(self):
        series = MomentSeries([(0, 0, 1), (1, 2, 1)])
        self.assertRaises(exceptions.InvalidInputError, series.append,
                          1, 3, 1)
        self.assertEqual(series.t_max, 1.0)

    def test_csv(self):
        from hybridqc.transport.analysis import read_series
        model = random_model(32, 2)
        series = simulate(model, 2.0, sample_every=10)
        path = series.to_csv(self.tmp_csv(), dict(kappa=0.5))
        back = read_series(path)
        self.assertEqual(back.as_array().tolist(), series.as_array().tolist())
        self.assertEqual(back.metadata['kappa'], '0.5')
        self.assertEqual(back.metadata['scheme'], 'leapfrog')
