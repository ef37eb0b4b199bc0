"""
   Time evolution of a wave packet on the tight-binding chain

   (H psi)_n = psi_{n+1} + psi_{n-1} + lambda V_n psi_n,  n = 0..N-1,

   with Dirichlet boundaries, and its second moment m2(T).

   The integrators split psi = q + i p into the canonical pair of the
   classical Hamiltonian (q.Hq + p.Hp) / 2, so Schroedinger's equation
   reads dq/dt = Hp, dp/dt = -Hq:

   ``leapfrog``
       Stoermer-Verlet (kick, drift, kick). Second order. It conserves
       the shadow norm |q|^2 + |p|^2 - (dt/2)^2 |Hq|^2 exactly; the true
       norm oscillates by O((dt |H|)^2).
   ``yoshida4``
       Fourth order triple-jump composition of leapfrog steps.
   ``gauss4``
       Two-stage Gauss-Legendre collocation. For a linear flow this is
       the (2, 2) Pade approximant of exp(-i dt H), which is unitary, so
       norm and energy are conserved to rounding. Costs two complex
       tridiagonal solves per step.
"""
import math
import logging

import numpy as np
import scipy.linalg
import scipy.sparse

from hybridqc import exceptions
from hybridqc.util import tables


log = logging.getLogger(__name__)

#: largest chain exact_evolve() diagonalizes
MAX_EXACT_SITES = 512
#: evolve() fails when the conserved norm drifts further than this
NORM_HARD_LIMIT = 1e-6
#: default step is DT_FACTOR / (2 + lambda max|V|)
DT_FACTOR = 0.02

_CBRT2 = 2.0 ** (1.0 / 3.0)
YOSHIDA_WEIGHTS = (1.0 / (2.0 - _CBRT2),
                   -_CBRT2 / (2.0 - _CBRT2),
                   1.0 / (2.0 - _CBRT2))

SCHEMES = ('leapfrog', 'yoshida4', 'gauss4')


class LatticeModel(object):
    """Potential, coupling lambda and initial site of the chain.

    :param potential: a :class:`~hybridqc.transport.hybrid.HybridPotential`
      or any real array
    :param lam: coupling lambda >= 0 (0 is the free lattice)
    :param n0: initial site, floor(N/2) by default
    """

    def __init__(self, potential, lam=1.0, n0=None):
        values = np.asarray(getattr(potential, 'values', potential),
                            dtype=float)
        if values.ndim != 1 or len(values) < 1:
            raise exceptions.InvalidInputError(
                "Potential must be a nonempty 1-d array")
        if lam < 0:
            raise exceptions.PreconditionError(
                "Coupling lambda must be >= 0, got %r" % lam)
        self.potential = potential
        self.values = values
        self.lam = float(lam)
        self.N = len(values)
        if n0 is None:
            n0 = self.N // 2
        if not 0 <= n0 < self.N:
            raise exceptions.PreconditionError(
                "Initial site %d outside 0..%d" % (n0, self.N - 1))
        self.n0 = n0
        self.diagonal = self.lam * values

    @property
    def norm_bound(self):
        """Upper bound 2 + lambda max|V| on the operator norm of H"""
        return 2.0 + float(np.abs(self.diagonal).max())

    def default_dt(self):
        return DT_FACTOR / self.norm_bound

    def sparse(self, dtype=float):
        off = np.ones(self.N - 1)
        return scipy.sparse.diags([off, self.diagonal, off], [-1, 0, 1],
                                  shape=(self.N, self.N), format='csr',
                                  dtype=dtype)

    def dense(self):
        return self.sparse().toarray()

    def __repr__(self):
        return "<LatticeModel(N=%d, lambda=%g, n0=%d)>" % (
            self.N, self.lam, self.n0)


class WaveState(object):
    """psi_n = re[n] + i im[n] at time t"""

    def __init__(self, re, im, t=0.0):
        self.re = np.array(re, dtype=float)
        self.im = np.array(im, dtype=float)
        if self.re.shape != self.im.shape:
            raise exceptions.InvalidInputError(
                "Real and imaginary parts differ in length")
        self.t = float(t)

    @classmethod
    def delta(cls, N, n0):
        re = np.zeros(N)
        re[n0] = 1.0
        return cls(re, np.zeros(N))

    @classmethod
    def from_psi(cls, psi, t=0.0):
        psi = np.asarray(psi, dtype=complex)
        return cls(psi.real, psi.imag, t)

    @property
    def psi(self):
        return self.re + 1j * self.im

    @property
    def N(self):
        return len(self.re)

    def norm(self):
        """Sum of |psi_n|^2"""
        return float(np.dot(self.re, self.re) + np.dot(self.im, self.im))

    def conjugate(self):
        """psi -> conj(psi); evolving the conjugate forward runs the real
        chain backwards in time"""
        return WaveState(self.re, -self.im, self.t)

    def copy(self):
        return WaveState(self.re, self.im, self.t)


class MomentSeries(object):
    """Samples (t, m2, norm) with strictly increasing t.

    ``final`` holds the last :class:`WaveState` when the series comes
    from :func:`evolve`.
    """
    columns = ('t', 'm2', 'norm')

    def __init__(self, samples=(), metadata=None, final=None):
        self._samples = []
        self.metadata = dict(metadata or {})
        self.final = final
        for sample in samples:
            self.append(*sample)

    def append(self, t, m2, norm):
        if self._samples and t <= self._samples[-1][0]:
            raise exceptions.InvalidInputError(
                "Sample times must increase: %r after %r"
                % (t, self._samples[-1][0]))
        self._samples.append((float(t), float(m2), float(norm)))

    def __len__(self):
        return len(self._samples)

    def __iter__(self):
        return iter(self._samples)

    def as_array(self):
        if not self._samples:
            return np.zeros((0, 3))
        return np.array(self._samples, dtype=float)

    @property
    def t(self):
        return self.as_array()[:, 0]

    @property
    def m2(self):
        return self.as_array()[:, 1]

    @property
    def norm(self):
        return self.as_array()[:, 2]

    @property
    def t_max(self):
        return self._samples[-1][0]

    def to_csv(self, path, metadata=None):
        meta = dict(self.metadata)
        meta.update(metadata or {})
        return tables.write_table(path, self.columns, self.as_array(), meta)

    def __repr__(self):
        if not self._samples:
            return "<MomentSeries(empty)>"
        return "<MomentSeries(%d samples, t <= %g)>" % (len(self), self.t_max)


def _check_length(model, x):
    if len(x) != model.N:
        raise exceptions.InvalidInputError(
            "Vector has %d entries, the chain has %d sites"
            % (len(x), model.N))


def apply_hamiltonian(model, x):
    """H x in O(N), without building a matrix; real or complex `x`"""
    _check_length(model, x)
    y = model.diagonal * x
    y[:-1] += x[1:]
    y[1:] += x[:-1]
    return y


def energy(model, psi):
    """<psi|H|psi>"""
    return float(np.dot(psi.re, apply_hamiltonian(model, psi.re)) +
                 np.dot(psi.im, apply_hamiltonian(model, psi.im)))


def second_moment(psi, n0):
    """sum_n (n - n0)^2 |psi_n|^2"""
    n = np.arange(psi.N, dtype=float) - n0
    return float(np.dot(n * n, psi.re * psi.re + psi.im * psi.im))


def wavefront_safe(T_max, N, n0=None, margin=64):
    """True iff a packet started at n0 cannot reach either end of the
    chain before T_max: 2 T_max + margin < min(n0, N - 1 - n0)"""
    if n0 is None:
        n0 = N // 2
    return 2.0 * T_max + margin < min(n0, N - 1 - n0)


def geometric_steps(dt, t_max, points_per_decade=20):
    """Step indices 0 < k <= round(t_max / dt), equally spaced in log t,
    with 0 and the last step always included"""
    total = int(round(t_max / dt))
    if total < 1:
        return np.array([0], dtype=np.int64)
    decades = math.log10(total)
    num = max(2, int(math.ceil(decades * points_per_decade)) + 1)
    steps = np.unique(np.round(np.logspace(0, decades, num)).astype(np.int64))
    return np.concatenate([[0], steps[steps <= total]]).astype(np.int64)


class _Integrator(object):
    """One scheme advancing (q, p) in place"""

    def __init__(self, model, dt, q, p):
        self.model = model
        self.dt = dt
        self.q = q
        self.p = p

    def step(self):
        raise NotImplementedError()

    def drift(self):
        """How far the conserved norm has moved from its initial value"""
        raise NotImplementedError()


class _Leapfrog(_Integrator):
    weights = (1.0, )

    def __init__(self, model, dt, q, p):
        super(_Leapfrog, self).__init__(model, dt, q, p)
        self.hq = apply_hamiltonian(model, q)
        self.shadow0 = self.shadow()

    def _kdk(self, h):
        model, q, p = self.model, self.q, self.p
        p -= 0.5 * h * self.hq
        q += h * apply_hamiltonian(model, p)
        self.hq = apply_hamiltonian(model, q)
        p -= 0.5 * h * self.hq

    def step(self):
        for w in self.weights:
            self._kdk(w * self.dt)

    def shadow(self):
        h = self.dt
        return (np.dot(self.q, self.q) + np.dot(self.p, self.p) -
                0.25 * h * h * np.dot(self.hq, self.hq))

    def drift(self):
        return abs(self.shadow() - self.shadow0)


class _Yoshida(_Leapfrog):
    weights = YOSHIDA_WEIGHTS

    def __init__(self, model, dt, q, p):
        super(_Yoshida, self).__init__(model, dt, q, p)
        self.norm0 = np.dot(q, q) + np.dot(p, p)
        # the composition has no cheap exact invariant; allow its norm
        # oscillation, which is bounded by the largest substep
        self.allowance = (abs(YOSHIDA_WEIGHTS[1]) * dt *
                          model.norm_bound) ** 2

    def drift(self):
        norm = np.dot(self.q, self.q) + np.dot(self.p, self.p)
        return max(0.0, abs(norm - self.norm0) - self.allowance)


class _Gauss(_Integrator):
    # 1 + z/2 + z^2/12 = (z^2 + 6z + 12) / 12 over its mirror image
    # z^2 - 6z + 12 = (z - r1)(z - r2), r = 3 +- i sqrt(3), z = -i dt H
    roots = (3.0 + 1j * math.sqrt(3.0), 3.0 - 1j * math.sqrt(3.0))

    def __init__(self, model, dt, q, p):
        super(_Gauss, self).__init__(model, dt, q, p)
        self.psi = q + 1j * p
        self.norm0 = np.vdot(self.psi, self.psi).real
        off = np.full(model.N, -1j * dt)
        self.bands = []
        for r in self.roots:
            ab = np.zeros((3, model.N), dtype=complex)
            ab[0, 1:] = off[1:]
            ab[1] = -1j * dt * model.diagonal - r
            ab[2, :-1] = off[:-1]
            self.bands.append(ab)

    def _z(self, x):
        return -1j * self.dt * apply_hamiltonian(self.model, x)

    def step(self):
        psi = self.psi
        zpsi = self._z(psi)
        y = self._z(zpsi) + 6.0 * zpsi + 12.0 * psi
        for ab in self.bands:
            y = scipy.linalg.solve_banded((1, 1), ab, y,
                                          check_finite=False)
        self.psi = y
        self.q[:] = y.real
        self.p[:] = y.imag

    def drift(self):
        return abs(np.vdot(self.psi, self.psi).real - self.norm0)


_integrators = dict(leapfrog=_Leapfrog, yoshida4=_Yoshida, gauss4=_Gauss)


def evolve(model, psi0, dt=None, steps=1, sample_every=1, scheme='leapfrog',
           sample_at=None, hard_limit=NORM_HARD_LIMIT):
    """Advance `psi0` by `steps` steps of size `dt` and sample
    (t, m2, norm) every `sample_every` steps, or at the step indices in
    `sample_at`. The initial and the final state are always sampled.

    :returns: :class:`MomentSeries` with the final state in ``final``
    :raises NumericalFailureError: on non-finite amplitudes
    :raises IntegratorInstabilityError: when the scheme's conserved norm
      drifts by more than `hard_limit`
    """
    if dt is None:
        dt = model.default_dt()
    if not dt > 0:
        raise exceptions.PreconditionError(
            "Time step must be > 0, got %r" % dt)
    if steps < 0:
        raise exceptions.PreconditionError(
            "Number of steps must be >= 0, got %r" % steps)
    if scheme not in _integrators:
        raise exceptions.PreconditionError(
            "Unknown scheme %r; use one of %s" % (scheme, ', '.join(SCHEMES)))
    _check_length(model, psi0.re)

    if sample_at is None:
        if sample_every < 1:
            raise exceptions.PreconditionError(
                "sample_every must be >= 1, got %r" % sample_every)
        sampled = set(range(0, steps + 1, sample_every))
    else:
        sampled = set(int(k) for k in sample_at if 0 <= k <= steps)
    sampled.update((0, steps))

    q = psi0.re.copy()
    p = psi0.im.copy()
    integrator = _integrators[scheme](model, dt, q, p)
    weights = np.square(np.arange(model.N, dtype=float) - model.n0)
    series = MomentSeries(metadata=dict(scheme=scheme, dt=dt, steps=steps))
    t0 = psi0.t

    log.debug('Evolving %r with %s, dt=%g, %d steps', model, scheme, dt,
              steps)
    for k in range(steps + 1):
        if k > 0:
            integrator.step()
        if k not in sampled:
            continue
        density = q * q + p * p
        norm = float(density.sum())
        if not np.isfinite(norm):
            raise exceptions.NumericalFailureError(
                "Non-finite amplitudes at step %d (t=%g)" % (k, t0 + k * dt))
        drift = integrator.drift()
        if drift > hard_limit:
            raise exceptions.IntegratorInstabilityError(
                "Norm drift %.3g exceeds %.3g at step %d (t=%g); use a "
                "smaller time step than %g" % (drift, hard_limit, k,
                                               t0 + k * dt, dt))
        series.append(t0 + k * dt, float(np.dot(weights, density)), norm)
    series.final = WaveState(q, p, t0 + steps * dt)
    return series


def simulate(model, t_max, dt=None, points_per_decade=20, sample_every=None,
             scheme='leapfrog', psi0=None):
    """Evolve a packet started at ``model.n0`` up to `t_max`, sampled on a
    geometric grid (or every `sample_every` steps)"""
    if dt is None:
        dt = model.default_dt()
    if psi0 is None:
        psi0 = WaveState.delta(model.N, model.n0)
    steps = int(round(t_max / dt))
    sample_at = None
    if sample_every is None:
        sample_at = geometric_steps(dt, t_max, points_per_decade)
    else:
        sample_every = int(sample_every)
    return evolve(model, psi0, dt, steps, sample_every=sample_every or 1,
                  scheme=scheme, sample_at=sample_at)


def reverse(model, psi, dt, steps, scheme='leapfrog'):
    """Run `steps` steps backwards in time: conjugate, evolve, conjugate"""
    series = evolve(model, psi.conjugate(), dt, steps, sample_every=steps or 1,
                    scheme=scheme)
    back = series.final.conjugate()
    back.t = psi.t - steps * dt
    return back


def exact_evolve(model, psi0, t):
    """psi(t) = U exp(-i Lambda t) U^T psi(0) from the eigendecomposition
    of the tridiagonal H. Validation oracle for small chains."""
    if model.N > MAX_EXACT_SITES:
        raise exceptions.ResourceLimitError(
            "exact_evolve diagonalizes at most %d sites, got %d"
            % (MAX_EXACT_SITES, model.N))
    _check_length(model, psi0.re)
    if model.N == 1:
        w = model.diagonal.copy()
        U = np.ones((1, 1))
    else:
        w, U = scipy.linalg.eigh_tridiagonal(model.diagonal,
                                             np.ones(model.N - 1))
    coeffs = U.T.dot(psi0.psi)
    psi = U.dot(np.exp(-1j * w * t) * coeffs)
    return WaveState.from_psi(psi, psi0.t + t)
