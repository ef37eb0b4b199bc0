"""
   Plain-text numeric tables: ``#`` metadata lines, one line of column
   names, then comma separated rows in full double precision.

   ::

      # hybridqc-format = 1
      # kappa = 0.5
      t,m2,norm
      0,0,1
"""
import os
import logging
from collections import OrderedDict

import numpy as np

from hybridqc import exceptions


log = logging.getLogger(__name__)

FORMAT_VERSION = 1
FORMAT_KEY = 'hybridqc-format'
#: 17 significant digits round-trip every double
FLOAT_FORMAT = '%.17g'


def header_lines(metadata=None):
    """``# key = value`` lines, format version first"""
    lines = ['# %s = %d' % (FORMAT_KEY, FORMAT_VERSION)]
    for key, value in (metadata or {}).items():
        if key == FORMAT_KEY:
            continue
        value = str(value).replace('\n', ' ')
        lines.append('# %s = %s' % (key, value))
    return lines


def parse_header_line(line):
    key, sep, value = line.lstrip('#').partition('=')
    if not sep:
        return None
    return key.strip(), value.strip()


def write_table(path, columns, data, metadata=None):
    """Write `data` (rows by columns) to `path` as a commented CSV"""
    data = np.asarray(data, dtype=float)
    if data.ndim == 1:
        data = data.reshape(-1, len(columns))
    if data.shape[1] != len(columns):
        raise exceptions.InvalidInputError(
            "%d columns named, data has %d" % (len(columns), data.shape[1]))
    header = '\n'.join(header_lines(metadata) + [','.join(columns)])
    np.savetxt(path, data, fmt=FLOAT_FORMAT, delimiter=',', header=header,
               comments='')
    log.debug('Wrote %d rows to %s', len(data), path)
    return path


def read_metadata(path):
    """Metadata and column names of a table, without reading the rows.

    :returns: ``(metadata, columns, n_header_lines)``
    """
    if not os.path.exists(path):
        raise exceptions.PathNotFoundError(path)
    metadata = OrderedDict()
    columns = None
    skip = 0
    with open(path) as fd:
        for line in fd:
            skip += 1
            line = line.strip()
            if line.startswith('#'):
                pair = parse_header_line(line)
                if pair is not None:
                    metadata[pair[0]] = pair[1]
                continue
            if line:
                columns = [c.strip() for c in line.split(',')]
                break
    if columns is None:
        raise exceptions.InvalidInputError("%s has no column line" % path)
    return metadata, columns, skip


def read_table(path):
    """:returns: ``(columns, data, metadata)``; data has one row per line"""
    metadata, columns, skip = read_metadata(path)
    version = metadata.get(FORMAT_KEY)
    if version is not None and version != str(FORMAT_VERSION):
        log.warning('%s has format %s, this is format %d',
                    path, version, FORMAT_VERSION)
    data = np.loadtxt(path, delimiter=',', skiprows=skip, ndmin=2)
    if data.size == 0:
        data = np.zeros((0, len(columns)))
    if data.shape[1] != len(columns):
        raise exceptions.InvalidInputError(
            "%s: %d columns named, rows have %d"
            % (path, len(columns), data.shape[1]))
    return columns, data, metadata
