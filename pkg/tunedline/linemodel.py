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
r"""linemodel.py: Distributed-parameter model of a transmission line.

Terminology:

 params: the per-km constants of a line (series r and L, shunt g and C),
    held in a `LineParameters` object.

 two-port: a 2x2 complex transmission (ABCD) matrix relating the sending-end
    voltage and current to the receiving-end voltage and current::

        [Vs]   [a  b] [Vr]
        [Is] = [c  d] [Ir]

    a and d are dimensionless, b is in ohm and c in siemens.

 electrical length: omega * l * sqrt(L * C), in radians.  A lossless line is
    "tuned" when this is a whole multiple of pi.

All lengths are in km, frequencies in Hz and impedances in ohm.  There is no
per-unit system here.

"""
__docformat__ = "restructuredtext en"

import cmath
import math

import numpy

from tunedline.errors import ParameterError

# Wave velocity used for the default profile and for the tuning formulas, in
# km/s.  This is the round figure, not 2.9979e5.
SPEED_OF_LIGHT = 3.0e5

# Tolerance on |a*d - b*c - 1| for a two-port to count as reciprocal.
RECIPROCITY_TOL = 1e-10

# Length boundaries (km) between short, medium and long line models.
SHORT_LINE_MAX = 80.0
MEDIUM_LINE_MAX = 250.0

def _positive(name, value):
    value = float(value)
    if not value > 0 or math.isinf(value):
        raise ParameterError("%s must be positive and finite (got %r)" %
                             (name, value))
    return value

def _non_negative(name, value):
    value = float(value)
    if not value >= 0 or math.isinf(value):
        raise ParameterError("%s must be non-negative and finite (got %r)" %
                             (name, value))
    return value

class Frequency(object):
    """A supply frequency.

    `f` is the cyclic frequency in Hz, `omega` the angular frequency in rad/s.

    """
    __slots__ = 'f', 'omega'

    def __init__(self, f):
        self.f = _positive('frequency', f)
        self.omega = 2.0 * math.pi * self.f

    @classmethod
    def from_omega(cls, omega):
        """Create a Frequency from an angular frequency in rad/s.

        """
        return cls(_positive('angular frequency', omega) / (2.0 * math.pi))

    def __eq__(self, other):
        if not isinstance(other, Frequency):
            return NotImplemented
        return self.f == other.f

    def __hash__(self):
        return hash(self.f)

    def __repr__(self):
        return 'Frequency(%r)' % self.f

def as_frequency(freq):
    """Return `freq` as a Frequency, accepting a plain number of Hz.

    """
    if isinstance(freq, Frequency):
        return freq
    return Frequency(freq)

class LineParameters(object):
    """The per-unit-length constants of a line.

     - `r`: series resistance (ohm/km)
     - `L`: series inductance (H/km)
     - `g`: shunt conductance (S/km)
     - `C`: shunt capacitance (F/km)

    """
    __slots__ = 'r', 'L', 'g', 'C'

    def __init__(self, r=0.0, L=None, g=0.0, C=None):
        if L is None or C is None:
            raise ParameterError("both L and C must be supplied")
        self.r = _non_negative('r', r)
        self.L = _positive('L', L)
        self.g = _non_negative('g', g)
        self.C = _positive('C', C)

    def is_lossless(self):
        return self.r == 0 and self.g == 0

    @property
    def velocity(self):
        """Propagation velocity 1 / sqrt(L * C), in km/s.

        """
        return 1.0 / math.sqrt(self.L * self.C)

    def series_impedance(self, freq):
        """Series impedance per km, r + j*omega*L.

        """
        return complex(self.r, as_frequency(freq).omega * self.L)

    def shunt_admittance(self, freq):
        """Shunt admittance per km, g + j*omega*C.

        """
        return complex(self.g, as_frequency(freq).omega * self.C)

    def as_dict(self):
        return {'r': self.r, 'L': self.L, 'g': self.g, 'C': self.C}

    def __eq__(self, other):
        if not isinstance(other, LineParameters):
            return NotImplemented
        return (self.r, self.L, self.g, self.C) == \
               (other.r, other.L, other.g, other.C)

    def __repr__(self):
        return 'LineParameters(r=%r, L=%r, g=%r, C=%r)' % (
            self.r, self.L, self.g, self.C)

def default_profile():
    """The default lossless 220 kV profile.

    L is 1 mH/km and C is chosen so that 1 / sqrt(L * C) is exactly the
    velocity of light used by the tuning formulas, which makes the
    characteristic impedance 300 ohm.

    >>> params = default_profile()
    >>> params.is_lossless()
    True
    >>> round(params.velocity)
    300000

    """
    L = 1.0e-3
    return LineParameters(r=0.0, L=L, g=0.0,
                          C=1.0 / (SPEED_OF_LIGHT * SPEED_OF_LIGHT * L))

class WaveQuantities(object):
    """Propagation constant `gamma` (1/km) and characteristic impedance `zc`
    (ohm) of a line at one frequency.

    """
    __slots__ = 'gamma', 'zc'

    def __init__(self, gamma, zc):
        self.gamma = complex(gamma)
        self.zc = complex(zc)
        if self.zc == 0:
            raise ParameterError("characteristic impedance must be non-zero")

    def __repr__(self):
        return 'WaveQuantities(gamma=%r, zc=%r)' % (self.gamma, self.zc)

class TwoPort(object):
    """A 2x2 complex transmission matrix.

    Cascading is available as a function (`cascade`) and as the ``@``
    operator, with the sending side on the left.

    """
    __slots__ = 'a', 'b', 'c', 'd'

    def __init__(self, a, b, c, d):
        self.a = complex(a)
        self.b = complex(b)
        self.c = complex(c)
        self.d = complex(d)

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    @classmethod
    def from_matrix(cls, matrix):
        """Build a TwoPort from a 2x2 array-like.

        """
        matrix = numpy.asarray(matrix, dtype=complex)
        if matrix.shape != (2, 2):
            raise ParameterError("expected a 2x2 matrix, got shape %r" %
                                 (matrix.shape,))
        return cls(matrix[0, 0], matrix[0, 1], matrix[1, 0], matrix[1, 1])

    def as_matrix(self):
        return numpy.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    def determinant(self):
        return self.a * self.d - self.b * self.c

    def is_reciprocal(self, tol=RECIPROCITY_TOL):
        """Return True if a*d - b*c = 1 within `tol` on each component.

        """
        err = self.determinant() - 1
        return abs(err.real) < tol and abs(err.imag) < tol

    def is_lossless(self, tol=1e-12):
        """Return True if a and d are real and b and c purely imaginary.

        The test is relative to the size of each entry, so the check is
        meaningful for b in ohm and c in siemens alike.

        """
        for value in (self.a, self.d):
            if abs(value.imag) > tol * max(1.0, abs(value)):
                return False
        for value in (self.b, self.c):
            if abs(value.real) > tol * max(1.0, abs(value)):
                return False
        return True

    def max_deviation(self, other, zc=None):
        """Largest absolute difference between corresponding entries.

        If `zc` is given, entries are compared in dimensionless form: a, d,
        b / zc and c * zc.

        """
        if zc is None:
            pairs = ((self.a, other.a), (self.b, other.b),
                     (self.c, other.c), (self.d, other.d))
        else:
            zc = complex(zc)
            pairs = ((self.a, other.a), (self.b / zc, other.b / zc),
                     (self.c * zc, other.c * zc), (self.d, other.d))
        return max(abs(x - y) for x, y in pairs)

    def __matmul__(self, other):
        if not isinstance(other, TwoPort):
            return NotImplemented
        return cascade(self, other)

    def __eq__(self, other):
        if not isinstance(other, TwoPort):
            return NotImplemented
        return (self.a, self.b, self.c, self.d) == \
               (other.a, other.b, other.c, other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __repr__(self):
        return 'TwoPort(%r, %r, %r, %r)' % (self.a, self.b, self.c, self.d)

def propagation_velocity(params):
    """Wave velocity 1 / sqrt(L * C) of a line, in km/s.

    """
    return params.velocity

def electrical_length(params, length, freq):
    """omega * l * sqrt(L * C), in radians.

    >>> round(electrical_length(default_profile(), 500, 150) / math.pi, 12)
    0.5

    """
    length = _positive('length', length)
    return as_frequency(freq).omega * length * math.sqrt(params.L * params.C)

def wavelength(params, freq):
    """Wavelength (km) of the lossless wave at `freq`.

    """
    return params.velocity / as_frequency(freq).f

def classify_length(length):
    """Classify an overhead line by length.

    Returns "short" below 80 km, "medium" below 250 km, and "long" otherwise;
    only long lines need the distributed model.

    >>> classify_length(50), classify_length(200), classify_length(500)
    ('short', 'medium', 'long')

    """
    length = _positive('length', length)
    if length < SHORT_LINE_MAX:
        return 'short'
    if length < MEDIUM_LINE_MAX:
        return 'medium'
    return 'long'

def wave_quantities(params, freq):
    """Compute the propagation constant and characteristic impedance.

    gamma = sqrt(z * y) and zc = sqrt(z / y), both on the branch with a
    non-negative real part.  For a lossless line this is exactly
    gamma = j * omega * sqrt(L * C) and zc = sqrt(L / C).

    """
    freq = as_frequency(freq)
    if params.is_lossless():
        return WaveQuantities(complex(0.0, freq.omega *
                                      math.sqrt(params.L * params.C)),
                              complex(math.sqrt(params.L / params.C), 0.0))
    z = params.series_impedance(freq)
    y = params.shunt_admittance(freq)
    # cmath.sqrt is the principal root, which has a non-negative real part.
    return WaveQuantities(cmath.sqrt(z * y), cmath.sqrt(z / y))

def abcd_exact(params, length, freq):
    """The exact two-port of a uniform line of `length` km.

    a = d = cosh(gamma * l), b = zc * sinh(gamma * l) and
    c = sinh(gamma * l) / zc.

    """
    length = _positive('length', length)
    waves = wave_quantities(params, freq)
    gl = waves.gamma * length
    ch = cmath.cosh(gl)
    sh = cmath.sinh(gl)
    return TwoPort(ch, waves.zc * sh, sh / waves.zc, ch)

def abcd_lossless(params, length, freq):
    """The two-port of a lossless line, written with real trigonometry.

    Only valid when r and g are both zero; agrees with `abcd_exact` on such
    lines.

    """
    if not params.is_lossless():
        raise ParameterError("abcd_lossless needs r = 0 and g = 0 (got r=%r, "
                             "g=%r)" % (params.r, params.g))
    theta = electrical_length(params, length, freq)
    zc = math.sqrt(params.L / params.C)
    sin_theta = math.sin(theta)
    cos_theta = math.cos(theta)
    return TwoPort(cos_theta, complex(0.0, zc * sin_theta),
                   complex(0.0, sin_theta / zc), cos_theta)

def nominal_pi(params, length, freq):
    """The lumped nominal-pi two-port of a line section.

    The total series impedance Z sits between two shunt branches each holding
    half of the total shunt admittance Y.

    """
    length = _positive('length', length)
    Z = params.series_impedance(freq) * length
    Y = params.shunt_admittance(freq) * length
    ZY = Z * Y
    a = 1 + ZY / 2
    return TwoPort(a, Z, Y * (1 + ZY / 4), a)

def cascade(first, second):
    """Connect two two-ports in series, `first` on the sending side.

    Both operands must be reciprocal.

    """
    for name, port in (('first', first), ('second', second)):
        if not port.is_reciprocal():
            raise ParameterError("%s operand of cascade is not reciprocal "
                                 "(det = %r)" % (name, port.determinant()))
    return TwoPort(first.a * second.a + first.b * second.c,
                   first.a * second.b + first.b * second.d,
                   first.c * second.a + first.d * second.c,
                   first.c * second.b + first.d * second.d)

def pi_cascade_oracle(params, length, freq, n_sections):
    """Approximate the exact two-port by `n_sections` nominal-pi sections.

    The result converges on `abcd_exact` as the number of sections grows,
    which makes it an independent check on the distributed model.

    """
    if isinstance(n_sections, bool) or int(n_sections) != n_sections or \
       n_sections < 1:
        raise ParameterError("n_sections must be a positive integer (got %r)"
                             % (n_sections,))
    n_sections = int(n_sections)
    length = _positive('length', length)
    section = nominal_pi(params, length / n_sections, freq)
    if n_sections == 1:
        return section
    return TwoPort.from_matrix(
        numpy.linalg.matrix_power(section.as_matrix(), n_sections))
