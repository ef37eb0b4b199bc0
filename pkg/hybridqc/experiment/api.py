"""
   This module provides the external API behind the ``hybridqc`` command.

   Every function takes string arguments as they come from the command
   line and returns the text the shell prints.
"""

# The docstrings of the command functions are shown as command line
# help; keep them free of sphinx markup.

import sys
import logging

from hybridqc import exceptions
from hybridqc.experiment import (output as output_,
    sweep as sweep_) # names of command arguments
from hybridqc.experiment.cfgparse import ExperimentConfig, THRESHOLD_FIELDS
from hybridqc.experiment.config import BOSHERNITZAN_N
from hybridqc.experiment.pathed import OutputDir
from hybridqc.sequences import symbolic
from hybridqc.sequences.catalogue import source_from_spec, substitution_from_spec
from hybridqc.sequences.substitution import INDETERMINATE, format_letter
from hybridqc.transport.analysis import (RegimeThresholds, classify,
    fit_beta, read_series)
from hybridqc.transport.hybrid import build_hybrid
from hybridqc.util import asbool, catch_known_errors


log = logging.getLogger(__name__)
command_desc = {
    'help': 'displays help on a given command',
    'gen': 'print the first letters of a sequence',
    'matrix': 'show the substitution matrix and its spectral invariants',
    'simulate': 'evolve one hybrid potential and fit its transport exponent',
    'sweep': 'run an experiment over shifts, kappas and lambdas',
    'diagnose': 'finite-window symbolic diagnostics for a pair of sequences',
    'analyze': 'fit the transport exponent of an existing moment series',
}
__all__ = list(command_desc.keys())


def _int(name, value):
    try:
        return int(value)
    except (TypeError, ValueError):
        raise exceptions.UsageError("%s must be an integer, got %r"
                                    % (name, value))


def _float(name, value):
    try:
        return float(value)
    except (TypeError, ValueError):
        raise exceptions.UsageError("%s must be a number, got %r"
                                    % (name, value))


def help(cmd=None, **opts):
    """%prog help COMMAND

    Displays help on a given command.
    """
    if cmd is None:
        raise exceptions.UsageError(
            "Enter 'help COMMAND' for help on one of: %s"
            % ', '.join(sorted(__all__)))
    if cmd not in __all__:
        raise exceptions.UsageError(
            "'%s' isn't a valid command. Try 'help COMMAND'" % cmd)
    ret = globals()[cmd].__doc__
    if sys.argv[0]:
        ret = ret.replace('%prog', sys.argv[0])
    return ret


@catch_known_errors
def gen(source, length, output=None, **opts):
    """%prog gen SOURCE LENGTH [--output=FILE]

    Print the first LENGTH letters of SOURCE.

    SOURCE is a built-in substitution (fcc, tm, pd, pf, rs),
    periodic:PATTERN, period:P, word:LETTERS or a file of
    'letter -> image' lines. Append @J to shift the sequence J times.
    With --output the word is written to FILE instead.
    """
    length = _int('LENGTH', length)
    if length < 0:
        raise exceptions.UsageError("LENGTH must be >= 0, got %d" % length)
    word = str(source_from_spec(source).window(0, length))
    if output:
        with open(output, 'w') as fd:
            fd.write(word + '\n')
        return 'Wrote %d letters of %s to %s' % (length, source, output)
    return word


@catch_known_errors
def matrix(source, **opts):
    """%prog matrix SOURCE

    Show the substitution matrix of SOURCE (a built-in substitution or a
    rule file), its dominant eigenvalue, the moduli of the other
    eigenvalues, the primitivity power and the Pisot verdict.
    """
    sub = substitution_from_spec(source)
    m = sub.matrix()
    info = m.spectral_info()
    width = max(len(str(x)) for row in m.entries for x in row)
    lines = ['substitution %s: %s' % (sub.name or source, sub),
             'matrix (rows and columns %s):' % ' '.join(
                 format_letter(l) for l in sub.alphabet)]
    for row in m.entries:
        lines.append('  ' + ' '.join(str(x).rjust(width) for x in row))
    verdict = info.verdict
    if verdict == INDETERMINATE:
        verdict = '%s: a modulus lies within %g of 1' % (verdict, info.margin)
        log.warning('Pisot verdict for %s is %s', source, verdict)
    power = m.primitivity_power()
    lines += [
        'dominant eigenvalue: %.12g' % info.dominant,
        'other moduli: %s' % (', '.join('%.6g' % x for x in info.others)
                              or 'none'),
        'primitivity power: %s' % (power if power is not None
                                   else 'none (not primitive)'),
        'pisot: %s (%s)' % (info.pisot, verdict),
    ]
    return '\n'.join(lines)


def _load(config, preset, full, opts):
    return ExperimentConfig.load(config, preset, opts, asbool(full)) \
        .validate()


@catch_known_errors
def simulate(parent_a=None, parent_b=None, config=None, preset=None,
             output=None, full=False, **opts):
    """%prog simulate [PARENT_A [PARENT_B]] [--config=FILE | --preset=NAME] [--output=DIR] [--full] [--FIELD=VALUE ...]

    Evolve a wave packet in one hybrid potential and write its moment
    series (t, m2, norm) as CSV. Any experiment field can be set with
    --FIELD=VALUE, e.g. --shift=3 --kappa=0.5 --N=4096 --T_max=500.
    Only the first point of the experiment is run.
    """
    overrides = dict(opts, parent_a=parent_a, parent_b=parent_b)
    cfg = _load(config, preset, full, overrides)
    runs = cfg.runs()
    if len(runs) > 1:
        log.info('%d points configured; simulating the first (%s)',
                 len(runs), runs[0])
    out = OutputDir(output or cfg.output_dir).ensure()
    job = sweep_.Job(cfg, runs[0], out.path)
    series = sweep_.run_series(job)
    path = out.join(output_series_name(cfg, runs[0]))
    series.to_csv(path, job.header)
    lines = ['%s x %s: %d samples up to t=%g written to %s'
             % (cfg.values['parent_a'], runs[0], len(series), series.t_max,
                path)]
    try:
        fit = fit_beta(series)
    except exceptions.InsufficientDataError as e:
        lines.append('no transport exponent: %s' % e)
    else:
        label = classify(series, fit, cfg.thresholds)
        lines.append('beta=%.6f residual=%.3g label=%s'
                     % (fit.beta, fit.residual, label))
    return '\n'.join(lines)


def output_series_name(cfg, run):
    return output_.series_filename(cfg.values['parent_a'], run)


@catch_known_errors
def sweep(config=None, preset=None, jobs=1, output=None, full=False, **opts):
    """%prog sweep [CONFIG] [--preset=NAME] [--jobs=N] [--output=DIR] [--full] [--FIELD=VALUE ...]

    Run every combination of parent_b, shift, kappa and lambda of an
    experiment, write one moment series per run and a summary CSV
    (experiment_id,parent_a,parent_b,shift,kappa,lambda,beta,residual,
    label), and print the minimality prediction for each pair of
    parents next to the regime labels.

    Presets: fig1 (TM x Fcc), fig2 (TM x TM), fig3 (PF x periodic),
    fcc-self, pd-self, periodic, kappa, lambda. They run at N = 8192;
    --full switches to N = 16384.
    """
    cfg = _load(config, preset, full, opts)
    out = OutputDir(output or cfg.output_dir).ensure()
    rows = sweep_.sweep(cfg, _int('jobs', jobs), out.path)
    summary = out.join(output_.safe_name('summary_%s.csv' % cfg.name))
    output_.write_summary(summary, rows, cfg.resolved())

    specs_b = []
    for run in cfg.runs():
        if run.parent_b not in specs_b:
            specs_b.append(run.parent_b)
    lines = [sweep_.minimality_prediction(cfg.values['parent_a'], b)
             for b in specs_b]
    lines.append('%-14s %5s %6s %6s %9s  %s'
                 % ('parent_b', 'shift', 'kappa', 'lambda', 'beta', 'label'))
    for row in rows:
        lines.append('%-14s %5d %6g %6g %9.4f  %s'
                     % (row['parent_b'], row['shift'], row['kappa'],
                        row['lambda'], row['beta'], row['label']))
    lines.append('summary written to %s' % summary)
    return '\n'.join(lines)


@catch_known_errors
def diagnose(source_a, source_b, max_word_len=8, window_len=65536,
             shift_radius=0, bound=64, kappa=0.5, output='.', **opts):
    """%prog diagnose SOURCE_A SOURCE_B [--max_word_len=8] [--window_len=65536] [--shift_radius=0] [--bound=64] [--kappa=0.5] [--output=DIR]

    Finite-window evidence about the pair of sequences: the
    multiplicative independence of their dominant eigenvalues, pairs of
    words that never occur aligned (witnesses against minimality of the
    product), factor complexity and Boshernitzan scores of both parents
    and of their hybrid at KAPPA. Writes complexity.csv and
    witnesses.csv to DIR.
    """
    max_word_len = _int('max_word_len', max_word_len)
    window_len = _int('window_len', window_len)
    shift_radius = _int('shift_radius', shift_radius)
    bound = _int('bound', bound)
    kappa = _float('kappa', kappa)
    a = source_from_spec(source_a)
    b = source_from_spec(source_b)
    lines = [sweep_.minimality_prediction(source_a, source_b, bound)]

    witnesses = symbolic.witness_search(a, b, max_word_len, window_len,
                                        shift_radius)
    length = min(a.available(window_len), b.available(window_len))
    lines.append('%d witness(es) up to length %d over %d letters, shifts '
                 '%d..%d' % (len(witnesses), max_word_len, length,
                             -shift_radius, shift_radius))
    by_length = {}
    for w in witnesses:
        by_length.setdefault(len(w), []).append(w)
    for m in sorted(by_length):
        shown = ' '.join(str(w) for w in by_length[m][:5])
        more = len(by_length[m]) - 5
        lines.append('  length %d: %d  %s%s' % (
            m, len(by_length[m]), shown,
            ' (+%d more)' % more if more > 0 else ''))

    sources = [a, b]
    try:
        hybrid = build_hybrid(a, b, kappa, 0, length,
                              opts.get('value_map_a'), opts.get('value_map_b'))
    except exceptions.Error as e:
        lines.append('no hybrid: %s' % e)
    else:
        sources.append(hybrid.as_source())

    complexity_rows = []
    for source in sources:
        available = source.available(window_len)
        n_values = set(range(1, max_word_len + 1))
        n_values.update(n for n in BOSHERNITZAN_N
                        if symbolic.BOSHERNITZAN_WINDOW_FACTOR * n <= available)
        n_values = sorted(n for n in n_values if n <= available)
        if not n_values:
            continue
        profile = symbolic.complexity_profile(source, n_values, window_len)
        for n, p_n, eta, score in profile.rows():
            complexity_rows.append((str(source), n, p_n, eta, score))
        trend = ['n=%d: %.4g' % (n, s) for n, _, _, s in profile.rows()
                 if n in BOSHERNITZAN_N]
        lines.append('%s: p(%d)=%d%s' % (
            source, profile.n_values[-1], profile.counts[-1],
            '; n*eta_hat ' + ', '.join(trend) if trend else ''))

    out = OutputDir(output).ensure()
    meta = dict(source_a=source_a, source_b=source_b,
                max_word_len=max_word_len, window_len=window_len,
                shift_radius=shift_radius, kappa=kappa)
    output_.write_rows(out.join('complexity.csv'),
                      ('source', 'n', 'p_n', 'eta_hat', 'score'),
                      complexity_rows, meta)
    output_.write_rows(out.join('witnesses.csv'),
                      ('r', 's', 'length', 'shift_min', 'shift_max',
                       'window_len'),
                      [(str(w.r), str(w.s), len(w), w.shift_range[0],
                        w.shift_range[1], w.window_len) for w in witnesses],
                      meta)
    lines.append('tables written to %s' % out)
    return '\n'.join(lines)


@catch_known_errors
def analyze(path, t_min=None, t_max=None, **opts):
    """%prog analyze CSV_FILE [--t_min=T] [--t_max=T] [--localized_beta=0.2] [--plateau_ratio=1.25] [--ballistic_beta=1.9] [--plateau_reference=run]

    Fit m2(T) ~ C T^beta on a moment series written by simulate or
    sweep (by default over the last decade of T) and classify the
    regime.
    """
    unknown = sorted(set(opts) - set(THRESHOLD_FIELDS))
    if unknown:
        raise exceptions.UsageError("Unknown option(s) for analyze: %s"
                                    % ', '.join(unknown))
    try:
        thresholds = RegimeThresholds.from_dict(opts)
    except ValueError as e:
        raise exceptions.UsageError(str(e))
    series = read_series(path)
    if t_min is not None:
        t_min = _float('t_min', t_min)
    if t_max is not None:
        t_max = _float('t_max', t_max)
    fit = fit_beta(series, t_min, t_max)
    label = classify(series, fit, thresholds)
    return ('beta=%.6f C=%.6g residual=%.3g window=[%g, %g] points=%d '
            'label=%s plateau_ratio=%.4g'
            % (fit.beta, fit.C, fit.residual, fit.t_window[0],
               fit.t_window[1], fit.n_points, label, label.ratio))
