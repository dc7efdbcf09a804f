# Copyright (C) 2026 The tunedline developers
#
# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; either version 2 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along
# with this program; if not, write to the Free Software Foundation, Inc.,
# 51 Franklin Street, Fifth Floor, Boston, MA 02110-1301 USA.
r"""results.py: Write sweep results, dip reports and run manifests.

Sweep records hold per-phase SI values.  For reporting they are converted to
`ReportRow` objects holding three-phase totals in MW and MVAr and
line-to-line voltages in kV; it is these rows that are written to (and read
back from) CSV.  Floats are written with 17 significant digits, so reading a
CSV back gives exactly the rows which were written.

Every file is first written under its name plus ".partial", and renamed into
place once complete.

"""
__docformat__ = "restructuredtext en"

import contextlib
import csv
import datetime
import json
import logging
import math
import os

log = logging.getLogger(__name__)

CSV_FIELDS = ('f_hz', 'p_r_mw', 'q_r_mvar', 'q_line_mvar', 'vs_kv', 'vr_kv',
              'delta_v', 'singular')

# Quantities which get a gnuplot data file of their own.
PLOT_FIELDS = CSV_FIELDS[1:-1]

PARTIAL_SUFFIX = '.partial'

SQRT3 = math.sqrt(3.0)

class ReportRow(object):
    """One sweep point in reporting units.

    Values which are unknown for a singular point are None.

    """
    __slots__ = CSV_FIELDS

    def __init__(self, f_hz, p_r_mw=None, q_r_mvar=None, q_line_mvar=None,
                 vs_kv=None, vr_kv=None, delta_v=None, singular=False):
        self.f_hz = f_hz
        self.p_r_mw = p_r_mw
        self.q_r_mvar = q_r_mvar
        self.q_line_mvar = q_line_mvar
        self.vs_kv = vs_kv
        self.vr_kv = vr_kv
        self.delta_v = delta_v
        self.singular = bool(singular)

    @classmethod
    def from_record(cls, record):
        """Convert a per-phase SweepRecord to three-phase reporting units.

        """
        def mega3(value):
            if value is None:
                return None
            return 3.0 * value / 1e6
        def kv(value):
            if value is None:
                return None
            return SQRT3 * value / 1e3
        return cls(f_hz=record.f,
                   p_r_mw=mega3(record.p_r),
                   q_r_mvar=mega3(record.q_r),
                   q_line_mvar=mega3(record.q_line),
                   vs_kv=kv(record.vs_mag),
                   vr_kv=kv(record.vr_mag),
                   delta_v=record.delta_v,
                   singular=record.singular)

    def as_tuple(self):
        return tuple(getattr(self, name) for name in CSV_FIELDS)

    def as_dict(self):
        return dict(zip(CSV_FIELDS, self.as_tuple()))

    def __eq__(self, other):
        if not isinstance(other, ReportRow):
            return NotImplemented
        return self.as_tuple() == other.as_tuple()

    def __repr__(self):
        return 'ReportRow(%s)' % ', '.join('%s=%r' % item
                                           for item in self.as_dict().items())

def rows_from_records(records):
    return [ReportRow.from_record(record) for record in records]

def format_float(value):
    """Format a float so that it reads back exactly.

    >>> format_float(0.1)
    '0.10000000000000001'
    >>> format_float(None)
    ''

    """
    if value is None:
        return ''
    return '%.17g' % value

def parse_float(text):
    if text == '':
        return None
    return float(text)

@contextlib.contextmanager
def atomic_output(path, mode='w'):
    """Open `path` for writing via a ".partial" file.

    The partial file is renamed to `path` when the block completes, and
    removed if it raises.

    """
    partial = path + PARTIAL_SUFFIX
    fd = open(partial, mode, newline='' if 'b' not in mode else None)
    try:
        with fd:
            yield fd
    except BaseException:
        try:
            os.remove(partial)
        except OSError:
            pass
        raise
    os.replace(partial, path)

@contextlib.contextmanager
def output_group():
    """Collect the paths of a set of files written together.

    Yields a list, to which the path of each file is appended once it has
    been written.  If the block raises, the files already listed are
    removed, so a failed run leaves none of its outputs behind.

    """
    paths = []
    try:
        yield paths
    except BaseException:
        for path in paths:
            try:
                os.remove(path)
            except OSError:
                pass
            else:
                log.debug("removed %s", path)
        raise

def write_csv(rows, path):
    """Write report rows to `path` as CSV.

    """
    with atomic_output(path) as fd:
        writer = csv.writer(fd, lineterminator='\n')
        writer.writerow(CSV_FIELDS)
        for row in rows:
            writer.writerow([format_float(value) for value in
                             row.as_tuple()[:-1]] +
                            ['1' if row.singular else '0'])
    log.info("wrote %d rows to %s", len(rows), path)
    return path

def read_csv(path):
    """Read report rows back from a CSV written by `write_csv`.

    """
    rows = []
    with open(path, newline='') as fd:
        reader = csv.reader(fd)
        header = next(reader, None)
        if tuple(header or ()) != CSV_FIELDS:
            raise ValueError("%s: unexpected CSV header %r" % (path, header))
        for fields in reader:
            if len(fields) != len(CSV_FIELDS):
                raise ValueError("%s: bad CSV row %r" % (path, fields))
            values = [parse_float(text) for text in fields[:-1]]
            rows.append(ReportRow(*values, singular=(fields[-1] == '1')))
    return rows

def write_json(data, path):
    """Write `data` to `path` as indented JSON.

    """
    with atomic_output(path) as fd:
        json.dump(data, fd, indent=2, sort_keys=True)
        fd.write('\n')
    return path

def write_rows_json(rows, path):
    return write_json([row.as_dict() for row in rows], path)

def write_dips(dips, path):
    """Write a dips report: a JSON array of dip objects.

    """
    return write_json([dip.as_dict() for dip in dips], path)

def write_plot_data(rows, stem):
    """Write one two-column (frequency, value) file per plotted quantity.

    Singular points are written as blank lines, which gnuplot draws as gaps.
    Returns the list of paths written.

    """
    with output_group() as paths:
        for field in PLOT_FIELDS:
            path = '%s.%s.dat' % (stem, field)
            with atomic_output(path) as fd:
                fd.write('# f_hz %s\n' % field)
                for row in rows:
                    value = getattr(row, field)
                    if value is None:
                        fd.write('\n')
                    else:
                        fd.write('%s %s\n' % (format_float(row.f_hz),
                                              format_float(value)))
            paths.append(path)
    return paths

class RunManifest(object):
    """A record of one CLI run.

    `config_digest` identifies the resolved config, `tool_version` the
    version of tunedline, `timestamp` the UTC time of the run and `outputs`
    the files written.

    """
    __slots__ = 'config_digest', 'tool_version', 'timestamp', 'outputs'

    def __init__(self, config_digest, tool_version, timestamp=None,
                 outputs=None):
        self.config_digest = config_digest
        self.tool_version = tool_version
        if timestamp is None:
            timestamp = datetime.datetime.now(datetime.timezone.utc) \
                                         .replace(microsecond=0).isoformat()
        self.timestamp = timestamp
        if outputs is None:
            outputs = []
        self.outputs = outputs

    def as_dict(self):
        return {'config_digest': self.config_digest,
                'tool_version': self.tool_version,
                'timestamp': self.timestamp,
                'outputs': list(self.outputs)}

    def write(self, path):
        return write_json(self.as_dict(), path)

    def __repr__(self):
        return 'RunManifest(%r, %r, %r, %r)' % (
            self.config_digest, self.tool_version, self.timestamp,
            self.outputs)
