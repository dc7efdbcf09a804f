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
from tunedline.unittests.tunedlinetest import *

import contextlib
import io
import json

import numpy

from tunedline import cli, results
from tunedline.linemodel import (abcd_exact, default_profile,
                                 electrical_length, wave_quantities)

class CliTestCase(TestCase):

    def run_cli(self, *argv):
        """Run the command line, returning (exit code, stdout, stderr).

        """
        out = io.StringIO()
        err = io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = cli.main(list(argv))
        return code, out.getvalue(), err.getvalue()

    def table(self, text):
        """Parse the rows of a tuning table.

        """
        rows = []
        for line in text.splitlines()[2:]:
            n, value, unit = line.split()
            rows.append((int(n), float(value), unit))
        return rows

    def read_json(self, path):
        with open(path) as fd:
            return json.load(fd)

class TestTuningCommand(CliTestCase):

    def test_length(self):
        code, out, err = self.run_cli('tuning', '--length', '500')
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(self.table(out), [(1, 300.0, 'Hz'), (2, 600.0, 'Hz'),
                                           (3, 900.0, 'Hz')])
        self.assertEqual(err, '')

    def test_frequency(self):
        code, out, err = self.run_cli('tuning', '--frequency', '50')
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(self.table(out), [(1, 3000.0, 'km'),
                                           (2, 6000.0, 'km'),
                                           (3, 9000.0, 'km')])

    def test_300km(self):
        code, out, err = self.run_cli('tuning', '--length', '300',
                                      '--n-max', '2')
        self.assertEqual(self.table(out), [(1, 500.0, 'Hz'),
                                           (2, 1000.0, 'Hz')])

    def test_velocity(self):
        code, out, err = self.run_cli('tuning', '--length', '500',
                                      '--velocity', '2.5e5', '--n-max', '1')
        self.assertEqual(self.table(out), [(1, 250.0, 'Hz')])

    def test_bad_arguments(self):
        for argv in (('tuning', '--length', '500', '--frequency', '50'),
                     ('tuning',),
                     ('tuning', '--length', '-5'),
                     ('tuning', '--length', 'far'),
                     ('tuning', '--length', '500', '--n-max', '0'),
                     ('launch',),
                     ()):
            code, out, err = self.run_cli(*argv)
            self.assertEqual(code, cli.EXIT_USAGE, argv)
            self.assertEqual(out, '')
            self.assertEqual(err.count('\n'), 1, err)
            self.assertTrue(err.startswith('tunedline: error: '), err)

    def test_mutual_exclusion_message(self):
        code, out, err = self.run_cli('tuning', '--length', '500',
                                      '--frequency', '50')
        self.assertTrue('not allowed with' in err, err)

class TestSolveCommand(CliTestCase):

    def test_tuned_point(self):
        code, out, err = self.run_cli('solve', '--config', 'experiment_500km',
                                      '--frequency', '300', '--format',
                                      'json')
        self.assertEqual(code, cli.EXIT_OK)
        row = json.loads(out)
        self.assertClose(row['delta_v'], 0, abs_=1e-9)
        self.assertClose(row['vr_kv'], 220.0, rel=1e-9)
        self.assertFalse(row['singular'])

    def test_text_report(self):
        code, out, err = self.run_cli('solve', '--config', 'experiment_500km',
                                      '--frequency', '300')
        self.assertEqual(code, cli.EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(lines[0].split(), ['frequency', '300', 'Hz'])
        self.assertTrue(lines[1].split()[1] == 'yes', lines[1])

    def test_against_linear_solve(self):
        params = default_profile()
        load = rated_capacitor_bank()
        line = abcd_exact(params, 500, 150)
        y_load = load.admittance_at(150)
        vr, ir = numpy.linalg.solve(
            numpy.array([[line.a, line.b], [-y_load, 1]], dtype=complex),
            numpy.array([SOURCE_PHASE_V, 0], dtype=complex))
        s_r = complex(vr * ir.conjugate())
        is_ = line.c * vr + line.d * ir
        s_s = complex(SOURCE_PHASE_V * is_.conjugate())

        path = self.path('point.json')
        code, out, err = self.run_cli('solve', '--config', 'experiment_500km',
                                      '--frequency', '150', '--out', path)
        self.assertEqual(code, cli.EXIT_OK)
        row = self.read_json(path)
        self.assertEqual(row['f_hz'], 150.0)
        self.assertClose(row['q_r_mvar'], 3 * s_r.imag / 1e6, rel=1e-9)
        self.assertClose(row['q_line_mvar'], 3 * (s_s.imag - s_r.imag) / 1e6,
                         rel=1e-9)
        self.assertClose(row['vr_kv'], math.sqrt(3) * abs(vr) / 1e3,
                         rel=1e-9)
        self.assertClose(row['p_r_mw'], 0, abs_=1e-9)

    def test_malformed_config(self):
        path = self.path('bad.cfg')
        with open(path, 'w') as fd:
            fd.write('[line]\nlength = far\n')
        code, out, err = self.run_cli('solve', '--config', path,
                                      '--frequency', '300')
        self.assertEqual(code, cli.EXIT_USAGE)
        self.assertEqual(err.count('\n'), 1, err)
        code, out, err = self.run_cli('solve', '--config', self.path('none'),
                                      '--frequency', '300')
        self.assertEqual(code, cli.EXIT_USAGE)

    def test_singular_point(self):
        # A capacitor which shorts the source through the line at 100 Hz.
        params = default_profile()
        theta = electrical_length(params, 500, 100)
        zc = wave_quantities(params, 100).zc.real
        c_load = math.cos(theta) / (zc * 2 * math.pi * 100 * math.sin(theta))
        path = self.path('resonant.cfg')
        with open(path, 'w') as fd:
            fd.write('[line]\nprofile = default\nlength = 500 km\n'
                     '[load]\nkind = admittance\nc_load = %r\n'
                     '[source]\nvoltage = 220 kV\n'
                     '[sweep]\nf_start = 50\nf_end = 150\nn_points = 11\n'
                     % c_load)
        code, out, err = self.run_cli('solve', '--config', path,
                                      '--frequency', '100')
        self.assertEqual(code, cli.EXIT_SINGULAR)
        self.assertTrue('singular' in err, err)
        code, out, err = self.run_cli('solve', '--config', path,
                                      '--frequency', '90')
        self.assertEqual(code, cli.EXIT_OK)

class TestSweepCommand(CliTestCase):

    def sweep(self, config, *extra):
        path = self.path('sweep.csv')
        code, out, err = self.run_cli('sweep', '--config', config,
                                      '--out', path, *extra)
        self.assertEqual(code, cli.EXIT_OK, err)
        return path, out

    def matched_dips(self, path):
        return [(dip['n_matched'], dip['f_detected'])
                for dip in self.read_json(path)
                if dip['n_matched']]

    def test_500km(self):
        path, out = self.sweep('experiment_500km')
        self.assertEqual(self.matched_dips(self.path('sweep.dips.json')),
                         [(1, 300.0), (2, 600.0), (3, 900.0)])
        self.assertTrue('dip at 300 Hz (n = 1)' in out, out)
        manifest = self.read_json(self.path('sweep.manifest.json'))
        self.assertEqual(manifest['outputs'],
                         [path, self.path('sweep.dips.json')])
        for output in manifest['outputs']:
            self.assertTrue(os.path.exists(output))
        self.assertEqual(manifest['tool_version'], cli.__version__)
        self.assertEqual(len(manifest['config_digest']), 40)
        with open(path) as fd:
            lines = fd.read().splitlines()
        self.assertEqual(lines[0], 'f_hz,p_r_mw,q_r_mvar,q_line_mvar,vs_kv,'
                                   'vr_kv,delta_v,singular')
        self.assertEqual(len(lines), 952)

    def test_300km(self):
        self.sweep('experiment_300km')
        self.assertEqual(self.matched_dips(self.path('sweep.dips.json')),
                         [(1, 500.0), (2, 1000.0)])

    def test_deterministic(self):
        path, out = self.sweep('experiment_300km')
        with open(path, 'rb') as fd:
            first = fd.read()
        digest = self.read_json(self.path('sweep.manifest.json'))
        digest = digest['config_digest']
        path, out = self.sweep('experiment_300km', '--workers', '3')
        with open(path, 'rb') as fd:
            self.assertEqual(fd.read(), first)
        self.assertEqual(
            self.read_json(self.path('sweep.manifest.json'))['config_digest'],
            digest)

    def test_json_and_plot_data(self):
        path = self.path('sweep.json')
        code, out, err = self.run_cli('sweep', '--config', 'experiment_500km',
                                      '--out', path, '--format', 'json',
                                      '--plot-data')
        self.assertEqual(code, cli.EXIT_OK, err)
        self.assertEqual(len(self.read_json(path)), 951)
        manifest = self.read_json(self.path('sweep.manifest.json'))
        self.assertEqual(len(manifest['outputs']),
                         2 + len(results.PLOT_FIELDS))
        for output in manifest['outputs']:
            self.assertTrue(os.path.exists(output), output)
        self.assertFalse([name for name in os.listdir(self.tempdir)
                          if name.endswith('.partial')])

    def test_unwritable_output(self):
        path = self.path('missing', 'sweep.csv')
        code, out, err = self.run_cli('sweep', '--config', 'experiment_300km',
                                      '--out', path)
        self.assertEqual(code, cli.EXIT_IO)
        self.assertEqual(err.count('\n'), 1, err)
        self.assertEqual(os.listdir(self.tempdir), [])

    def test_failed_write_leaves_no_outputs(self):
        blocker = self.path('sweep.manifest.json' + results.PARTIAL_SUFFIX)
        os.mkdir(blocker)
        code, out, err = self.run_cli('sweep', '--config', 'experiment_300km',
                                      '--out', self.path('sweep.csv'),
                                      '--plot-data')
        self.assertEqual(code, cli.EXIT_IO)
        self.assertEqual(err.count('\n'), 1, err)
        self.assertEqual(os.listdir(self.tempdir), [os.path.basename(blocker)])

    def test_bad_config(self):
        code, out, err = self.run_cli('sweep', '--config', 'experiment_1km',
                                      '--out', self.path('sweep.csv'))
        self.assertEqual(code, cli.EXIT_USAGE)
        self.assertEqual(os.listdir(self.tempdir), [])

if __name__ == '__main__':
    main()
