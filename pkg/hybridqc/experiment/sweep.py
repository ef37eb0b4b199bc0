"""
   Running the points of an experiment, serially or in a worker pool.

   Each run builds its own sources and potential and writes its own
   moment series file, so runs share nothing; the summary is assembled
   after all of them finish.
"""
import logging
from multiprocessing import Pool

from hybridqc import exceptions
from hybridqc.experiment import output
from hybridqc.experiment.pathed import OutputDir
from hybridqc.sequences.catalogue import source_from_spec, substitution_from_spec
from hybridqc.sequences.symbolic import multiplicative_independence
from hybridqc.transport.analysis import RegimeThresholds, classify, fit_beta
from hybridqc.transport.dynamics import LatticeModel, simulate
from hybridqc.transport.hybrid import build_hybrid


log = logging.getLogger(__name__)


class Job(object):
    """Everything one run needs, in picklable form"""

    def __init__(self, config, run, output_dir=None):
        config.require_valid()
        self.experiment_id = config.name
        self.parent_a = config.values['parent_a']
        self.run = run
        self.value_map_a = str(config.value_map_a)
        self.value_map_b = str(config.value_map_b)
        self.N = config.N
        self.n0 = config.n0
        self.T_max = config.T_max
        self.dt = config.dt
        self.sampling = config.sampling
        self.scheme = config.scheme
        self.thresholds = config.thresholds.as_dict()
        self.output_dir = output_dir
        self.header = config.resolved()
        self.header.update(parent_b=run.parent_b, shifts=run.shift,
                           kappas=run.kappa, lambdas=run.lam)
        # the series header records the step actually used as dt
        self.header['dt_config'] = self.header.pop('dt')

    def __repr__(self):
        return "<Job(%s %s x %s)>" % (self.experiment_id, self.parent_a,
                                      self.run)


def run_series(job):
    """Simulate one run; :returns: the moment series"""
    run = job.run
    source_a = source_from_spec(job.parent_a)
    source_b = source_from_spec(run.parent_b)
    potential = build_hybrid(source_a, source_b, run.kappa, run.shift, job.N,
                             job.value_map_a, job.value_map_b)
    model = LatticeModel(potential, run.lam, job.n0)
    kind, every = job.sampling
    if kind == 'geometric':
        return simulate(model, job.T_max, job.dt, points_per_decade=every,
                        scheme=job.scheme)
    return simulate(model, job.T_max, job.dt, sample_every=every,
                    scheme=job.scheme)


def execute(job):
    """Simulate, save, fit and classify one run; :returns: a summary row"""
    run = job.run
    log.info('Running %s x %s', job.parent_a, run)
    series = run_series(job)
    if job.output_dir is not None:
        path = OutputDir(job.output_dir).ensure().join(
            output.series_filename(job.parent_a, run))
        series.to_csv(path, job.header)
    fit = fit_beta(series)
    label = classify(series, fit, RegimeThresholds.from_dict(job.thresholds))
    log.info('%s x %s: beta=%.4f, %s', job.parent_a, run, fit.beta, label)
    return dict(experiment_id=job.experiment_id, parent_a=job.parent_a,
                parent_b=run.parent_b, shift=run.shift, kappa=run.kappa,
                **{'lambda': run.lam, 'beta': fit.beta,
                   'residual': fit.residual, 'label': str(label)})


def sort_key(specs_b):
    return lambda row: (row['shift'], row['kappa'],
                        specs_b.index(row['parent_b']), row['lambda'])


def run_jobs(jobs, n_workers=1):
    """Execute `jobs` with `n_workers` processes; rows in completion order"""
    if n_workers < 1:
        raise exceptions.UsageError(
            "Number of jobs must be >= 1, got %s" % n_workers)
    if n_workers == 1 or len(jobs) < 2:
        return [execute(job) for job in jobs]
    with Pool(min(n_workers, len(jobs))) as pool:
        return list(pool.imap_unordered(execute, jobs))


def sweep(config, n_workers=1, output_dir=None):
    """All runs of `config`; :returns: summary rows sorted by
    (shift, kappa, parent_b, lambda)"""
    config.require_valid()
    if output_dir is None:
        output_dir = config.output_dir
    runs = config.runs()
    jobs = [Job(config, run, output_dir) for run in runs]
    log.info('%s: %d run(s) on %d worker(s)', config.name, len(jobs),
             n_workers)
    rows = run_jobs(jobs, n_workers)
    specs_b = [run.parent_b for run in runs]
    rows.sort(key=sort_key(specs_b))
    return rows


def minimality_prediction(spec_a, spec_b, bound=64):
    """What multiplicative independence of the two dominant eigenvalues
    predicts for the product hull; a one-line report"""
    try:
        sub_a = substitution_from_spec(spec_a)
        sub_b = substitution_from_spec(spec_b)
    except exceptions.UsageError:
        return '%s x %s: not both substitutions, no minimality prediction' % (
            spec_a, spec_b)
    if sub_a.primitivity_power() is None or sub_b.primitivity_power() is None:
        return '%s x %s: not both primitive, no minimality prediction' % (
            spec_a, spec_b)
    theta = sub_a.spectral_info().dominant
    vartheta = sub_b.spectral_info().dominant
    try:
        verdict = multiplicative_independence(theta, vartheta, L=bound)
    except exceptions.PreconditionError as e:
        return '%s x %s: %s' % (spec_a, spec_b, e)
    if verdict.independent:
        prediction = 'product hull minimal (localization expected)'
    else:
        prediction = 'no minimality prediction'
    return '%s x %s: dominant eigenvalues %.10g and %.10g are %s; %s' % (
        spec_a, spec_b, theta, vartheta, verdict, prediction)
