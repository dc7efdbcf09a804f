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
r"""powerflow.py: Terminal phasors and power of a source-line-load system.

There are two groups of functions here:

 - The exact solver (`solve_receiving_end` followed by
   `complex_power_accounting`), which works from a two-port and a load.

 - Closed-form evaluators of the simplified reactance transfer model
   (`receiving_active_power`, `receiving_reactive_power`,
   `voltage_regulation`, `reactive_power_with_regulation`,
   `reactive_power_tuned`).  Their torque angle and reactance are supplied
   by the caller; they are not derived from the exact solution.

All phasors are RMS line-to-neutral, and all powers are per phase.  Q > 0
means an element absorbs inductive VArs, so a capacitive load has q_r < 0.

"""
__docformat__ = "restructuredtext en"

import math

from tunedline.errors import ParameterError, ResonanceError
from tunedline.linemodel import as_frequency

# |a + b * y_load| below this fraction of |a| is treated as a resonance.
SINGULAR_TOL = 1e-9

class TerminalState(object):
    """The four terminal phasors of a solved line: `vs`, `is_`, `vr`, `ir`.

    """
    __slots__ = 'vs', 'is_', 'vr', 'ir'

    def __init__(self, vs, is_, vr, ir):
        self.vs = complex(vs)
        self.is_ = complex(is_)
        self.vr = complex(vr)
        self.ir = complex(ir)

    def sending_power(self):
        """Complex power into the sending end, Vs * conj(Is).

        """
        return self.vs * self.is_.conjugate()

    def receiving_power(self):
        """Complex power out of the receiving end, Vr * conj(Ir).

        """
        return self.vr * self.ir.conjugate()

    def __repr__(self):
        return 'TerminalState(vs=%r, is_=%r, vr=%r, ir=%r)' % (
            self.vs, self.is_, self.vr, self.ir)

class LoadSpec(object):
    """A receiving-end load.

    `kind` is one of:

     - ``admittance``: conductance `g_load` (S) in parallel with capacitance
       `c_load` (F).
     - ``fixed-capacitance-rated``: a capacitor bank sized from its rating;
       `c_load` = `rated_q` / (2 pi `rated_f` `rated_v` ** 2), where `rated_q`
       is the three-phase VAr rating and `rated_v` the line-to-line voltage.
       An optional parallel `g_load` may be given.
     - ``impedance``: series `r_load` + j `x_load` ohm, with `x_load` quoted
       at `rated_f`.  Positive (inductive) reactance scales with frequency,
       negative (capacitive) reactance inversely.

    """
    ADMITTANCE = 'admittance'
    CAPACITOR_BANK = 'fixed-capacitance-rated'
    IMPEDANCE = 'impedance'
    KINDS = (ADMITTANCE, CAPACITOR_BANK, IMPEDANCE)

    __slots__ = ('kind', 'g_load', 'c_load', 'rated_q', 'rated_v', 'rated_f',
                 'r_load', 'x_load')

    def __init__(self, kind, g_load=0.0, c_load=0.0, rated_q=None,
                 rated_v=None, rated_f=None, r_load=0.0, x_load=0.0):
        if kind not in self.KINDS:
            raise ParameterError("unknown load kind %r (expected one of %s)" %
                                 (kind, ', '.join(self.KINDS)))
        self.kind = kind
        self.g_load = float(g_load)
        self.c_load = float(c_load)
        self.rated_q = rated_q
        self.rated_v = rated_v
        self.rated_f = rated_f
        self.r_load = float(r_load)
        self.x_load = float(x_load)
        if self.g_load < 0 or self.c_load < 0:
            raise ParameterError("g_load and c_load must be non-negative")

        if kind == self.CAPACITOR_BANK:
            for name in ('rated_q', 'rated_v', 'rated_f'):
                value = getattr(self, name)
                if value is None or not float(value) > 0:
                    raise ParameterError("%s must be positive for a %s load "
                                         "(got %r)" % (name, kind, value))
                setattr(self, name, float(value))
            self.c_load = self.rated_q / (2.0 * math.pi * self.rated_f *
                                          self.rated_v * self.rated_v)
        elif kind == self.IMPEDANCE:
            if self.r_load < 0:
                raise ParameterError("r_load must be non-negative")
            if self.x_load != 0:
                if self.rated_f is None or not float(self.rated_f) > 0:
                    raise ParameterError("rated_f must be positive for a "
                                         "reactive impedance load")
                self.rated_f = float(self.rated_f)
            if self.r_load == 0 and self.x_load == 0:
                raise ParameterError("impedance load must be non-zero")

    @classmethod
    def admittance(cls, g_load=0.0, c_load=0.0):
        return cls(cls.ADMITTANCE, g_load=g_load, c_load=c_load)

    @classmethod
    def capacitor_bank(cls, rated_q, rated_v, rated_f, g_load=0.0):
        return cls(cls.CAPACITOR_BANK, g_load=g_load, rated_q=rated_q,
                   rated_v=rated_v, rated_f=rated_f)

    @classmethod
    def impedance(cls, r_load, x_load=0.0, rated_f=None):
        return cls(cls.IMPEDANCE, r_load=r_load, x_load=x_load,
                   rated_f=rated_f)

    def admittance_at(self, freq):
        """The load admittance (S) at `freq`.

        """
        freq = as_frequency(freq)
        if self.kind == self.IMPEDANCE:
            x = self.x_load
            if x > 0:
                x = x * freq.f / self.rated_f
            elif x < 0:
                x = x * self.rated_f / freq.f
            return 1.0 / complex(self.r_load, x)
        return complex(self.g_load, freq.omega * self.c_load)

    def as_dict(self):
        return dict((name, getattr(self, name)) for name in self.__slots__)

    def __repr__(self):
        if self.kind == self.IMPEDANCE:
            return 'LoadSpec(%r, r_load=%r, x_load=%r, rated_f=%r)' % (
                self.kind, self.r_load, self.x_load, self.rated_f)
        return 'LoadSpec(%r, g_load=%r, c_load=%r)' % (
            self.kind, self.g_load, self.c_load)

class PowerTransferInputs(object):
    """Inputs to the simplified transfer formulas.

    `vs_mag` and `vr_mag` are terminal voltage magnitudes (V), `delta` the
    torque angle (rad) and `x` the line reactance (ohm).

    """
    __slots__ = 'vs_mag', 'vr_mag', 'delta', 'x'

    def __init__(self, vs_mag, vr_mag, delta, x):
        self.vs_mag = float(vs_mag)
        self.vr_mag = float(vr_mag)
        self.delta = float(delta)
        self.x = _check_reactance(x)
        if self.vs_mag < 0 or self.vr_mag < 0:
            raise ParameterError("voltage magnitudes must be non-negative")

    def __repr__(self):
        return 'PowerTransferInputs(%r, %r, %r, %r)' % (
            self.vs_mag, self.vr_mag, self.delta, self.x)

class PowerResult(object):
    """Receiving-end power, regulation and line-absorbed reactive power.

    `p_r` (W), `q_r` (VAr), `delta_v` (dimensionless) and `q_line` (VAr).

    """
    __slots__ = 'p_r', 'q_r', 'delta_v', 'q_line'

    def __init__(self, p_r, q_r, delta_v, q_line):
        self.p_r = p_r
        self.q_r = q_r
        self.delta_v = delta_v
        self.q_line = q_line

    def __repr__(self):
        return 'PowerResult(p_r=%r, q_r=%r, delta_v=%r, q_line=%r)' % (
            self.p_r, self.q_r, self.delta_v, self.q_line)

def _check_reactance(x):
    x = float(x)
    if x == 0 or math.isnan(x):
        raise ParameterError("line reactance x must be non-zero")
    return x

def solve_receiving_end(line, vs, load, freq):
    """Solve the terminal phasors for an ideal source feeding `load`.

    With Ir = y_load * Vr the two-port gives Vr = Vs / (a + b * y_load).
    Raises ResonanceError when the denominator vanishes.

    >>> from tunedline.linemodel import TwoPort
    >>> state = solve_receiving_end(TwoPort.identity(), 1,
    ...                             LoadSpec.admittance(g_load=1), 50)
    >>> state.vr, state.ir, state.is_
    ((1+0j), (1+0j), (1+0j))

    """
    freq = as_frequency(freq)
    vs = complex(vs)
    y_load = load.admittance_at(freq)
    denominator = line.a + line.b * y_load
    if denominator == 0 or abs(denominator) < SINGULAR_TOL * abs(line.a):
        raise ResonanceError("source is short-circuited through the line at "
                             "%r Hz (|a + b*y_load| = %r)" %
                             (freq.f, abs(denominator)),
                             freq=freq.f, residual=abs(denominator))
    vr = vs / denominator
    ir = y_load * vr
    is_ = line.c * vr + line.d * ir
    return TerminalState(vs, is_, vr, ir)

def receiving_active_power(inp):
    """P_R = |Vs| |Vr| sin(delta) / X.

    """
    return inp.vs_mag * inp.vr_mag * math.sin(inp.delta) / inp.x

def receiving_reactive_power(inp):
    """Q_R = (|Vs| |Vr| cos(delta) - |Vr|^2) / X.

    """
    return (inp.vs_mag * inp.vr_mag * math.cos(inp.delta) -
            inp.vr_mag * inp.vr_mag) / inp.x

def voltage_regulation(vs_mag, vr_mag):
    """Voltage regulation (|Vs| - |Vr|) / |Vr|.

    >>> voltage_regulation(1.05, 1.0)  # doctest: +ELLIPSIS
    0.05...

    """
    vr_mag = float(vr_mag)
    if not vr_mag > 0:
        raise ParameterError("receiving-end voltage must be positive "
                             "(got %r)" % vr_mag)
    return (float(vs_mag) - vr_mag) / vr_mag

def reactive_power_with_regulation(vr_mag, delta_v, delta, x):
    """Q_R written in terms of the voltage regulation:

    |Vr|^2 ((1 + delta_v) cos(delta) - 1) / X.

    """
    x = _check_reactance(x)
    return vr_mag * vr_mag * ((1.0 + delta_v) * math.cos(delta) - 1.0) / x

def reactive_power_tuned(vr_mag, delta, x):
    """Q_R of a tuned line, where the regulation is zero:

    |Vr|^2 (cos(delta) - 1) / X.

    This is never positive for X > 0.

    """
    x = _check_reactance(x)
    return vr_mag * vr_mag * (math.cos(delta) - 1.0) / x

def complex_power_accounting(state):
    """Evaluate the power flows of a solved line.

    Line-absorbed reactive power is the sending-end Q minus the
    receiving-end Q.

    """
    s_r = state.receiving_power()
    s_s = state.sending_power()
    return PowerResult(p_r=s_r.real,
                       q_r=s_r.imag,
                       delta_v=voltage_regulation(abs(state.vs),
                                                  abs(state.vr)),
                       q_line=s_s.imag - s_r.imag)

def is_tuned_state(state, rel_tol=1e-9):
    """Return True if |Vs| = |Vr| and |Is| = |Ir| within `rel_tol`.

    """
    def same(x, y):
        return abs(x - y) <= rel_tol * max(x, y, 1e-300)
    return same(abs(state.vs), abs(state.vr)) and \
           same(abs(state.is_), abs(state.ir))

def three_phase(result):
    """Scale a per-phase PowerResult to three-phase totals.

    """
    return PowerResult(p_r=3.0 * result.p_r,
                       q_r=3.0 * result.q_r,
                       delta_v=result.delta_v,
                       q_line=3.0 * result.q_line)
