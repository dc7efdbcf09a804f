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
r"""cli.py: The tunedline command line.

Subcommands:

 - ``tuning --length L`` or ``tuning --frequency F``: list tuning
   frequencies of a line, or tuned lengths at a frequency.
 - ``solve --config CFG --frequency F``: solve one operating point.
 - ``sweep --config CFG --out results.csv``: run a frequency sweep, and
   write the results, a dips report and a run manifest.

Exit codes: 0 on success, 2 for bad arguments or config, 3 if `solve` hits
a singular operating point and 4 for I/O errors.

"""
__docformat__ = "restructuredtext en"

import argparse
import json
import logging
import os
import sys

from tunedline import __version__
from tunedline import results
from tunedline.config import config_digest, load_config
from tunedline.errors import (ConfigError, InsufficientDataError,
                              ParameterError, ResonanceError)
from tunedline.sweep import detect_tuning_dips, run_sweep, solve_point
from tunedline.tuning import (DEFAULT_N_MAX, PropagationVelocity, is_tuned,
                              tuned_lengths, tuning_frequencies)
from tunedline.linemodel import SPEED_OF_LIGHT

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SINGULAR = 3
EXIT_IO = 4

class UsageError(Exception):
    """Bad command line arguments.

    """

class _ArgumentParser(argparse.ArgumentParser):
    """An ArgumentParser which reports errors as a single-line UsageError
    instead of printing usage and exiting.

    """
    def error(self, message):
        raise UsageError(message)

def _positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError("%r is not a number" % text)
    if not value > 0:
        raise argparse.ArgumentTypeError("%r must be positive" % text)
    return value

def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("%r is not an integer" % text)
    if value < 1:
        raise argparse.ArgumentTypeError("%r must be at least 1" % text)
    return value

def _format_value(value):
    return '%.12g' % value

def cmd_tuning(args, out=None):
    """Print tuning frequencies for a length, or tuned lengths for a
    frequency.

    """
    if out is None:
        out = sys.stdout
    if (args.length is None) == (args.frequency is None):
        raise UsageError("give exactly one of --length and --frequency")
    velocity = PropagationVelocity(args.velocity)
    if args.length is not None:
        solutions = tuning_frequencies(args.length, velocity, args.n_max)
        title = 'tuning frequencies of a %s km line' % \
                _format_value(args.length)
    else:
        solutions = tuned_lengths(args.frequency, velocity, args.n_max)
        title = 'tuned line lengths at %s Hz' % _format_value(args.frequency)
    out.write('# %s (v = %s km/s)\n' % (title, _format_value(velocity.v)))
    out.write('%-3s %14s %s\n' % ('n', 'value', 'unit'))
    for solution in solutions:
        out.write('%-3d %14s %s\n' % (solution.n,
                                       _format_value(solution.value),
                                       solution.unit))
    return EXIT_OK

def _describe_row(row, tuned, nearest):
    lines = [
        ('frequency', '%s Hz' % _format_value(row.f_hz)),
        ('tuned', '%s (nearest n = %d at %s Hz)' % (
            tuned and 'yes' or 'no', nearest.n,
            _format_value(nearest.value))),
        ('active power', '%s MW' % _format_value(row.p_r_mw)),
        ('receiving Q', '%s MVAr' % _format_value(row.q_r_mvar)),
        ('line Q', '%s MVAr' % _format_value(row.q_line_mvar)),
        ('sending V', '%s kV' % _format_value(row.vs_kv)),
        ('receiving V', '%s kV' % _format_value(row.vr_kv)),
        ('regulation', _format_value(row.delta_v)),
    ]
    return ''.join('%-14s %s\n' % line for line in lines)

def cmd_solve(args, out=None):
    """Solve one operating point of a configured system.

    """
    if out is None:
        out = sys.stdout
    cfg = load_config(args.config)
    record = solve_point(cfg, args.frequency)
    if record.singular:
        raise ResonanceError("singular operating point at %s Hz" %
                             _format_value(args.frequency),
                             freq=args.frequency)
    row = results.ReportRow.from_record(record)
    if args.format == 'json':
        out.write(json.dumps(row.as_dict(), indent=2, sort_keys=True) + '\n')
    else:
        tuned, nearest = is_tuned(cfg.length, args.frequency, cfg.velocity)
        out.write(_describe_row(row, tuned, nearest))
    if args.out is not None:
        results.write_json(row.as_dict(), args.out)
    return EXIT_OK

def cmd_sweep(args, out=None):
    """Run a sweep and write the results, dips report and manifest.

    """
    if out is None:
        out = sys.stdout
    cfg = load_config(args.config)
    records = run_sweep(cfg, workers=args.workers)
    rows = results.rows_from_records(records)

    velocity = cfg.velocity
    if args.velocity is not None:
        velocity = PropagationVelocity(args.velocity)
    try:
        dips = detect_tuning_dips(records, cfg.length, velocity)
    except InsufficientDataError as e:
        log.warning("no dip detection: %s", e)
        dips = []

    stem = os.path.splitext(args.out)[0]
    with results.output_group() as outputs:
        if args.format == 'json':
            outputs.append(results.write_rows_json(rows, args.out))
        else:
            outputs.append(results.write_csv(rows, args.out))
        outputs.append(results.write_dips(dips, stem + '.dips.json'))
        if args.plot_data:
            outputs.extend(results.write_plot_data(rows, stem))
        manifest = results.RunManifest(config_digest(cfg), __version__,
                                       outputs=list(outputs))
        manifest.write(stem + '.manifest.json')

    out.write('%d points, %d singular\n' % (
        len(records), sum(1 for record in records if record.singular)))
    for dip in dips:
        if dip.n_matched:
            match = 'n = %d' % dip.n_matched
        else:
            match = 'unmatched'
        out.write('dip at %s Hz (%s), line Q %s MVAr\n' % (
            _format_value(dip.f_detected), match,
            _format_value(3.0 * dip.q_line_at_dip / 1e6)))
    return EXIT_OK

def build_parser():
    parser = _ArgumentParser(
        prog='tunedline',
        description='Steady-state simulation of tuned long HVAC lines.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log more (repeat for debug output)')
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True

    tuning = subparsers.add_parser(
        'tuning', help='tuning frequencies or tuned lengths')
    group = tuning.add_mutually_exclusive_group(required=True)
    group.add_argument('--length', type=_positive_float,
                       help='line length (km)')
    group.add_argument('--frequency', type=_positive_float,
                       help='supply frequency (Hz)')
    tuning.add_argument('--velocity', type=_positive_float,
                        default=SPEED_OF_LIGHT,
                        help='wave velocity (km/s, default %(default)s)')
    tuning.add_argument('--n-max', type=_positive_int, default=DEFAULT_N_MAX,
                        help='number of harmonics (default %(default)s)')
    tuning.set_defaults(handler=cmd_tuning)

    solve = subparsers.add_parser('solve', help='solve one operating point')
    solve.add_argument('--config', required=True,
                       help='config file, or name of a bundled config')
    solve.add_argument('--frequency', type=_positive_float, required=True,
                       help='supply frequency (Hz)')
    solve.add_argument('--format', choices=('text', 'json'), default='text')
    solve.add_argument('--out', help='also write the result as JSON here')
    solve.set_defaults(handler=cmd_solve)

    sweep = subparsers.add_parser('sweep', help='run a frequency sweep')
    sweep.add_argument('--config', required=True,
                       help='config file, or name of a bundled config')
    sweep.add_argument('--out', required=True,
                       help='results file; the dips report and manifest are '
                            'written alongside it')
    sweep.add_argument('--format', choices=('csv', 'json'), default='csv')
    sweep.add_argument('--velocity', type=_positive_float,
                       help='wave velocity (km/s) for matching dips')
    sweep.add_argument('--plot-data', action='store_true',
                       help='also write gnuplot data files')
    sweep.add_argument('--workers', type=_positive_int,
                       help='threads used to evaluate the grid')
    sweep.set_defaults(handler=cmd_sweep)

    return parser

def configure_logging(verbosity):
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(level=level, stream=sys.stderr, force=True,
                        format='%(name)s: %(levelname)s: %(message)s')

def _fail(message):
    sys.stderr.write('tunedline: error: %s\n' % ' '.join(str(message).split()))

def main(argv=None):
    """Run the command line, returning the exit code.

    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        configure_logging(args.verbose)
        return args.handler(args)
    except UsageError as e:
        _fail(e)
        return EXIT_USAGE
    except (ConfigError, ParameterError) as e:
        _fail(e)
        return EXIT_USAGE
    except ResonanceError as e:
        _fail(e)
        return EXIT_SINGULAR
    except OSError as e:
        _fail(e)
        return EXIT_IO

def run_from_commandline():
    sys.exit(main())

if __name__ == '__main__':
    run_from_commandline()
