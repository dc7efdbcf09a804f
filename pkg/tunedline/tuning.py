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
r"""tuning.py: Solve the tuned-line condition.

A lossless line of length l is tuned at frequency f when

    omega * l * sqrt(L * C) = n * pi,   n = 1, 2, 3, ...

which, writing v = 1 / sqrt(L * C), gives the tuned lengths l = n * v / (2 f)
for a fixed frequency and the tuning frequencies f = n * v / (2 l) for a fixed
length.

"""
__docformat__ = "restructuredtext en"

import math

from tunedline.errors import ParameterError
from tunedline.linemodel import SPEED_OF_LIGHT, as_frequency

# Default number of harmonics returned by the solvers.
DEFAULT_N_MAX = 3

class PropagationVelocity(object):
    """Wave velocity `v` in km/s.

    """
    __slots__ = 'v',

    def __init__(self, v=SPEED_OF_LIGHT):
        v = float(v)
        if not v > 0 or math.isinf(v):
            raise ParameterError("velocity must be positive and finite "
                                 "(got %r)" % v)
        self.v = v

    @classmethod
    def from_params(cls, params):
        return cls(params.velocity)

    def __eq__(self, other):
        if not isinstance(other, PropagationVelocity):
            return NotImplemented
        return self.v == other.v

    def __hash__(self):
        return hash(self.v)

    def __repr__(self):
        return 'PropagationVelocity(%r)' % self.v

def as_velocity(velocity):
    """Return `velocity` as a PropagationVelocity, accepting km/s numbers.

    """
    if velocity is None:
        return PropagationVelocity()
    if isinstance(velocity, PropagationVelocity):
        return velocity
    return PropagationVelocity(velocity)

class TuningSolution(object):
    """One harmonic of the tuning condition.

    `n` is the harmonic index, `value` the tuned frequency (Hz) or tuned
    length (km) and `unit` says which.

    """
    __slots__ = 'n', 'value', 'unit'

    def __init__(self, n, value, unit):
        if n < 1:
            raise ParameterError("harmonic index must be at least 1 "
                                 "(got %r)" % (n,))
        self.n = int(n)
        self.value = float(value)
        self.unit = unit

    def __eq__(self, other):
        if not isinstance(other, TuningSolution):
            return NotImplemented
        return (self.n, self.value, self.unit) == \
               (other.n, other.value, other.unit)

    def __hash__(self):
        return hash((self.n, self.value, self.unit))

    def __repr__(self):
        return 'TuningSolution(%d, %r, %r)' % (self.n, self.value, self.unit)

def _check_n_max(n_max):
    if isinstance(n_max, bool) or int(n_max) != n_max or n_max < 1:
        raise ParameterError("n_max must be a positive integer (got %r)" %
                             (n_max,))
    return int(n_max)

def tuned_lengths(freq, velocity=None, n_max=DEFAULT_N_MAX):
    """Line lengths (km) which are tuned at `freq`.

    >>> [s.value for s in tuned_lengths(50)]
    [3000.0, 6000.0, 9000.0]

    """
    freq = as_frequency(freq)
    v = as_velocity(velocity).v
    n_max = _check_n_max(n_max)
    return [TuningSolution(n, n * v / (2.0 * freq.f), 'km')
            for n in range(1, n_max + 1)]

def tuning_frequencies(length, velocity=None, n_max=DEFAULT_N_MAX):
    """Supply frequencies (Hz) at which a line of `length` km is tuned.

    >>> [s.value for s in tuning_frequencies(500)]
    [300.0, 600.0, 900.0]

    """
    length = float(length)
    if not length > 0 or math.isinf(length):
        raise ParameterError("length must be positive and finite (got %r)" %
                             length)
    v = as_velocity(velocity).v
    n_max = _check_n_max(n_max)
    return [TuningSolution(n, n * v / (2.0 * length), 'Hz')
            for n in range(1, n_max + 1)]

def tuned_lengths_for(params, freq, n_max=DEFAULT_N_MAX):
    """`tuned_lengths` with the velocity taken from line parameters.

    """
    return tuned_lengths(freq, PropagationVelocity.from_params(params), n_max)

def tuning_frequencies_for(params, length, n_max=DEFAULT_N_MAX):
    """`tuning_frequencies` with the velocity taken from line parameters.

    """
    return tuning_frequencies(length, PropagationVelocity.from_params(params),
                              n_max)

def harmonic_ratio(length, freq, velocity=None):
    """The number of half-wavelengths on the line, 2 * f * l / v.

    """
    return 2.0 * as_frequency(freq).f * float(length) / as_velocity(velocity).v

def nearest_harmonic(ratio):
    """The harmonic index nearest to `ratio`, never less than 1.

    Ties round upwards, so a quarter-wave line (ratio 0.5) maps to n = 1.

    """
    return max(1, int(math.floor(ratio + 0.5)))

def is_tuned(length, freq, velocity=None, rel_tol=1e-6):
    """Check whether a (length, frequency) pair is tuned.

    The distance from tuning is the fractional distance of 2 * f * l / v to
    the nearest whole number.  Returns a tuple ``(tuned, nearest)`` where
    `nearest` is the TuningSolution for the nearest tuning frequency of this
    length.

    >>> is_tuned(500, 300)
    (True, TuningSolution(1, 300.0, 'Hz'))
    >>> is_tuned(500, 150, rel_tol=1e-3)
    (False, TuningSolution(1, 300.0, 'Hz'))

    """
    rel_tol = float(rel_tol)
    if not 0 < rel_tol < 0.5:
        raise ParameterError("rel_tol must be in (0, 0.5) (got %r)" % rel_tol)
    length = float(length)
    if not length > 0 or math.isinf(length):
        raise ParameterError("length must be positive and finite (got %r)" %
                             length)
    v = as_velocity(velocity).v
    ratio = harmonic_ratio(length, freq, v)
    n = nearest_harmonic(ratio)
    tuned = round(ratio) >= 1 and abs(ratio - n) <= rel_tol
    return tuned, TuningSolution(n, n * v / (2.0 * length), 'Hz')
