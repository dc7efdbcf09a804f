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

import time

from tunedline.errors import ParameterError
from tunedline.linemodel import LineParameters, default_profile
from tunedline.tuning import (PropagationVelocity, TuningSolution,
                              harmonic_ratio, is_tuned, nearest_harmonic,
                              tuned_lengths, tuned_lengths_for,
                              tuning_frequencies, tuning_frequencies_for)

def values(solutions):
    return [solution.value for solution in solutions]

class TestTuningSolvers(TestCase):

    def test_tuned_lengths_at_power_frequencies(self):
        self.assertEqual(values(tuned_lengths(50)), [3000.0, 6000.0, 9000.0])
        self.assertEqual(values(tuned_lengths(60)), [2500.0, 5000.0, 7500.0])
        self.assertEqual([solution.unit for solution in tuned_lengths(50)],
                         ['km'] * 3)

    def test_tuning_frequencies_of_experiment_lines(self):
        self.assertEqual(values(tuning_frequencies(500)),
                         [300.0, 600.0, 900.0])
        self.assertEqual(values(tuning_frequencies(300)),
                         [500.0, 1000.0, 1500.0])
        self.assertEqual(tuning_frequencies(500)[0],
                         TuningSolution(1, 300.0, 'Hz'))

    def test_runtime(self):
        start = time.perf_counter()
        for i in range(100):
            tuning_frequencies(500)
            tuned_lengths(50)
        elapsed = (time.perf_counter() - start) / 100
        self.assertTrue(elapsed < 1e-3, elapsed)

    def test_n_max(self):
        self.assertEqual(values(tuning_frequencies(500, n_max=1)), [300.0])
        self.assertEqual([solution.n for solution in
                          tuning_frequencies(500, n_max=5)], [1, 2, 3, 4, 5])
        self.assertRaises(ParameterError, tuning_frequencies, 500, None, 0)
        self.assertRaises(ParameterError, tuned_lengths, 50, None, 1.5)
        self.assertRaises(ParameterError, tuned_lengths, 50, None, True)

    def test_velocity(self):
        self.assertEqual(values(tuning_frequencies(500, 2.5e5)),
                         [250.0, 500.0, 750.0])
        velocity = PropagationVelocity(2.5e5)
        self.assertEqual(values(tuning_frequencies(500, velocity)),
                         [250.0, 500.0, 750.0])
        self.assertRaises(ParameterError, PropagationVelocity, 0)
        self.assertRaises(ParameterError, PropagationVelocity, -3e5)
        self.assertRaises(ParameterError, PropagationVelocity, float('inf'))

    def test_velocity_from_params(self):
        params = LineParameters(L=1e-3, C=1.0 / (6.25e10 * 1e-3))
        for got, expected in zip(values(tuning_frequencies_for(params, 500)),
                                 (250.0, 500.0, 750.0)):
            self.assertClose(got, expected, rel=1e-12)
        for got, expected in zip(values(tuned_lengths_for(default_profile(),
                                                          50)),
                                 (3000.0, 6000.0, 9000.0)):
            self.assertClose(got, expected, rel=1e-12)

    def test_rejects_bad_inputs(self):
        self.assertRaises(ParameterError, tuned_lengths, 0)
        self.assertRaises(ParameterError, tuned_lengths, -50)
        self.assertRaises(ParameterError, tuning_frequencies, 0)
        self.assertRaises(ParameterError, tuning_frequencies, -500)
        self.assertRaises(ParameterError, tuning_frequencies, float('inf'))

    @given(frequencies(min_value=1.0, max_value=1e4),
           st.floats(min_value=1e5, max_value=3e5))
    @settings(max_examples=200, deadline=None)
    def test_round_trip(self, f, v):
        for solution in tuned_lengths(f, v):
            back = tuning_frequencies(solution.value, v)[solution.n - 1]
            self.assertEqual(back.n, solution.n)
            self.assertClose(back.value, f, rel=1e-12)

    @given(st.lists(frequencies(min_value=1.0, max_value=1e4), min_size=2,
                    max_size=2, unique=True))
    @settings(max_examples=200, deadline=None)
    def test_lengths_fall_with_frequency(self, pair):
        low, high = sorted(pair)
        assume(high > low * (1 + 1e-9))
        for n in (1, 2, 3):
            self.assertTrue(tuned_lengths(low)[n - 1].value >
                            tuned_lengths(high)[n - 1].value)

    @given(lengths(1e4))
    @settings(max_examples=200, deadline=None)
    def test_frequencies_are_harmonics(self, length):
        solutions = tuning_frequencies(length)
        for solution in solutions:
            self.assertClose(solution.value, solution.n * solutions[0].value,
                             rel=1e-12)

class TestIsTuned(TestCase):

    def test_tuned_points(self):
        self.assertEqual(is_tuned(500, 300),
                         (True, TuningSolution(1, 300.0, 'Hz')))
        self.assertEqual(is_tuned(500, 600)[0], True)
        self.assertEqual(is_tuned(300, 1000),
                         (True, TuningSolution(2, 1000.0, 'Hz')))
        self.assertEqual(is_tuned(3000, 50)[0], True)

    def test_untuned_points(self):
        tuned, nearest = is_tuned(500, 150)
        self.assertFalse(tuned)
        self.assertEqual(nearest, TuningSolution(1, 300.0, 'Hz'))
        tuned, nearest = is_tuned(500, 50)
        self.assertFalse(tuned)
        self.assertEqual(nearest.n, 1)
        tuned, nearest = is_tuned(500, 460)
        self.assertFalse(tuned)
        self.assertEqual(nearest.n, 2)

    def test_tolerance(self):
        self.assertTrue(is_tuned(500, 300.0003, rel_tol=1e-5)[0])
        self.assertFalse(is_tuned(500, 300.0003, rel_tol=1e-7)[0])
        self.assertRaises(ParameterError, is_tuned, 500, 300, None, 0)
        self.assertRaises(ParameterError, is_tuned, 500, 300, None, 0.5)
        self.assertRaises(ParameterError, is_tuned, 0, 300)

    def test_nearest_harmonic(self):
        self.assertEqual(nearest_harmonic(0.1), 1)
        self.assertEqual(nearest_harmonic(0.5), 1)
        self.assertEqual(nearest_harmonic(1.49), 1)
        self.assertEqual(nearest_harmonic(1.5), 2)
        self.assertEqual(nearest_harmonic(2.9), 3)

    def test_harmonic_ratio(self):
        self.assertEqual(harmonic_ratio(500, 300), 1.0)
        self.assertEqual(harmonic_ratio(500, 150), 0.5)

    @given(lengths(1e4), st.integers(min_value=1, max_value=20))
    @settings(max_examples=200, deadline=None)
    def test_solutions_are_tuned(self, length, n):
        f = tuning_frequencies(length, n_max=n)[-1].value
        tuned, nearest = is_tuned(length, f)
        self.assertTrue(tuned)
        self.assertEqual(nearest.n, n)

if __name__ == '__main__':
    main()
