"""
   Files written by the command line: moment series per run, the sweep
   summary and the diagnose tables. Every file starts with ``#`` header
   lines carrying the format version and the resolved configuration.
"""
import re
import csv
import logging

from hybridqc.experiment.config import SUMMARY_COLUMNS
from hybridqc.util import tables


log = logging.getLogger(__name__)

_unsafe = re.compile(r'[^A-Za-z0-9_.+@-]+')


def safe_name(text):
    """`text` reduced to characters that are safe in file names"""
    return _unsafe.sub('-', str(text)).strip('-') or 'x'


def series_filename(parent_a, run):
    return safe_name('m2_%s_%s@%d_k%g_l%g.csv' % (
        parent_a, run.parent_b, run.shift, run.kappa, run.lam))


def _format(value):
    if isinstance(value, float):
        return tables.FLOAT_FORMAT % value
    return str(value)


def write_rows(path, columns, rows, metadata=None):
    """Write a table with text and number columns"""
    with open(path, 'w', newline='') as fd:
        for line in tables.header_lines(metadata):
            fd.write(line + '\n')
        writer = csv.writer(fd, lineterminator='\n')
        writer.writerow(columns)
        for row in rows:
            if isinstance(row, dict):
                row = [row[c] for c in columns]
            writer.writerow([_format(value) for value in row])
    log.debug('Wrote %s', path)
    return path


def write_summary(path, rows, metadata=None):
    return write_rows(path, SUMMARY_COLUMNS, rows, metadata)
