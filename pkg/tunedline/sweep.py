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
r"""sweep.py: Evaluate a source-line-load system over a frequency grid.

The source is an ideal voltage source at the sending end.  At each grid
frequency the line is turned into a two-port (exact, lossless or a cascade
of nominal-pi sections), the terminal phasors are solved and the power flows
recorded.  Frequencies at which the source is shorted through the line are
flagged as singular rather than dropped.

"""
__docformat__ = "restructuredtext en"

import concurrent.futures
import logging
import math

import numpy

from tunedline.errors import (InsufficientDataError, ParameterError,
                              ResonanceError)
from tunedline.linemodel import (LineParameters, abcd_exact, abcd_lossless,
                                 pi_cascade_oracle, Frequency)
from tunedline.powerflow import (LoadSpec, complex_power_accounting,
                                 solve_receiving_end)
from tunedline.tuning import (PropagationVelocity, as_velocity,
                              harmonic_ratio, nearest_harmonic)

log = logging.getLogger(__name__)

MODEL_EXACT = 'exact'
MODEL_LOSSLESS = 'lossless'
MODEL_PI_CASCADE = 'pi-cascade'
MODELS = (MODEL_EXACT, MODEL_LOSSLESS, MODEL_PI_CASCADE)

# Default number of sections for the pi-cascade model.
DEFAULT_SECTIONS = 100

# A minimum further than this many grid steps from every harmonic is
# reported as unmatched.
MATCH_STEPS = 2

class SweepConfig(object):
    """The definition of a frequency sweep.

     - `line`: LineParameters of the line.
     - `length`: line length (km).
     - `source_voltage`: line-to-line RMS voltage (V) of the ideal source.
     - `load`: LoadSpec of the receiving-end load.
     - `f_start`, `f_end`: grid endpoints (Hz), both included.
     - `n_points`: number of grid points.
     - `model`: 'exact', 'lossless' or 'pi-cascade'.
     - `sections`: number of sections for the pi-cascade model.
     - `velocity`: wave velocity (km/s) used to match dips to harmonics;
       defaults to that of `line`.
     - `workers`: number of threads used to evaluate the grid.

    Config values should not be changed once a sweep has started.

    """
    __slots__ = ('line', 'length', 'source_voltage', 'load', 'f_start',
                 'f_end', 'n_points', 'model', 'sections', 'velocity',
                 'workers')

    def __init__(self, line, length, source_voltage, load, f_start, f_end,
                 n_points, model=MODEL_EXACT, sections=DEFAULT_SECTIONS,
                 velocity=None, workers=1):
        if not isinstance(line, LineParameters):
            raise ParameterError("line must be a LineParameters object")
        if not isinstance(load, LoadSpec):
            raise ParameterError("load must be a LoadSpec object")
        self.line = line
        self.load = load
        self.length = float(length)
        if not self.length > 0 or math.isinf(self.length):
            raise ParameterError("length must be positive (got %r)" % length)
        self.source_voltage = float(source_voltage)
        if not self.source_voltage > 0:
            raise ParameterError("source voltage must be positive (got %r)" %
                                 source_voltage)
        self.f_start = Frequency(f_start).f
        self.f_end = Frequency(f_end).f
        if not self.f_start < self.f_end:
            raise ParameterError("f_start (%r) must be below f_end (%r)" %
                                 (self.f_start, self.f_end))
        if isinstance(n_points, bool) or int(n_points) != n_points or \
           n_points < 2:
            raise ParameterError("n_points must be an integer >= 2 (got %r)" %
                                 (n_points,))
        self.n_points = int(n_points)
        if model not in MODELS:
            raise ParameterError("unknown line model %r (expected one of %s)"
                                 % (model, ', '.join(MODELS)))
        if model == MODEL_LOSSLESS and not line.is_lossless():
            raise ParameterError("the lossless model needs r = 0 and g = 0")
        self.model = model
        if isinstance(sections, bool) or int(sections) != sections or \
           sections < 1:
            raise ParameterError("sections must be a positive integer "
                                 "(got %r)" % (sections,))
        self.sections = int(sections)
        if velocity is None:
            self.velocity = PropagationVelocity.from_params(line)
        else:
            self.velocity = as_velocity(velocity)
        if isinstance(workers, bool) or int(workers) != workers or \
           workers < 1:
            raise ParameterError("workers must be a positive integer "
                                 "(got %r)" % (workers,))
        self.workers = int(workers)

    @property
    def step(self):
        """Grid spacing in Hz.

        """
        return (self.f_end - self.f_start) / (self.n_points - 1)

    def grid(self):
        """The uniform frequency grid, endpoints included.

        """
        return numpy.linspace(self.f_start, self.f_end, self.n_points)

    def line_model(self, freq):
        """The two-port of the configured line at `freq`.

        """
        if self.model == MODEL_LOSSLESS:
            return abcd_lossless(self.line, self.length, freq)
        if self.model == MODEL_PI_CASCADE:
            return pi_cascade_oracle(self.line, self.length, freq,
                                     self.sections)
        return abcd_exact(self.line, self.length, freq)

    def phase_voltage(self):
        """The source phasor, line-to-neutral, at zero angle.

        """
        return complex(self.source_voltage / math.sqrt(3.0), 0.0)

    def as_dict(self):
        """A plain-data rendering of the config, used for digests and
        manifests.

        """
        return {
            'line': self.line.as_dict(),
            'length': self.length,
            'source_voltage': self.source_voltage,
            'load': self.load.as_dict(),
            'f_start': self.f_start,
            'f_end': self.f_end,
            'n_points': self.n_points,
            'model': self.model,
            'sections': self.sections,
            'velocity': self.velocity.v,
        }

    def __repr__(self):
        return ('SweepConfig(length=%r, source_voltage=%r, f_start=%r, '
                'f_end=%r, n_points=%r, model=%r)' % (
                    self.length, self.source_voltage, self.f_start,
                    self.f_end, self.n_points, self.model))

class SweepRecord(object):
    """One frequency point of a sweep.

    Powers are per phase (W and VAr), and `vs_mag` and `vr_mag` are
    line-to-neutral voltage magnitudes (V).  A singular record has
    `singular` set and None for all values that depend on the receiving
    end.

    """
    __slots__ = ('f', 'p_r', 'q_r', 'q_line', 'vs_mag', 'vr_mag', 'delta_v',
                 'singular')

    def __init__(self, f, p_r=None, q_r=None, q_line=None, vs_mag=None,
                 vr_mag=None, delta_v=None, singular=False):
        self.f = f
        self.p_r = p_r
        self.q_r = q_r
        self.q_line = q_line
        self.vs_mag = vs_mag
        self.vr_mag = vr_mag
        self.delta_v = delta_v
        self.singular = singular

    def as_tuple(self):
        return tuple(getattr(self, name) for name in self.__slots__)

    def __eq__(self, other):
        if not isinstance(other, SweepRecord):
            return NotImplemented
        return self.as_tuple() == other.as_tuple()

    def __hash__(self):
        return hash(self.as_tuple())

    def __repr__(self):
        if self.singular:
            return 'SweepRecord(%r, singular=True)' % self.f
        return ('SweepRecord(%r, p_r=%r, q_r=%r, q_line=%r, vs_mag=%r, '
                'vr_mag=%r, delta_v=%r)' % (self.f, self.p_r, self.q_r,
                                             self.q_line, self.vs_mag,
                                             self.vr_mag, self.delta_v))

class TuningDip(object):
    """A local minimum of the line-absorbed reactive power.

    `n_matched` is the harmonic the dip was matched to, or 0 if no harmonic
    was close enough.

    """
    __slots__ = 'f_detected', 'n_matched', 'q_line_at_dip'

    def __init__(self, f_detected, n_matched, q_line_at_dip):
        self.f_detected = f_detected
        self.n_matched = n_matched
        self.q_line_at_dip = q_line_at_dip

    def as_dict(self):
        return {'f_detected': self.f_detected,
                'n_matched': self.n_matched,
                'q_line_at_dip': self.q_line_at_dip}

    def __eq__(self, other):
        if not isinstance(other, TuningDip):
            return NotImplemented
        return (self.f_detected, self.n_matched, self.q_line_at_dip) == \
               (other.f_detected, other.n_matched, other.q_line_at_dip)

    def __repr__(self):
        return 'TuningDip(%r, %r, %r)' % (self.f_detected, self.n_matched,
                                          self.q_line_at_dip)

def solve_point(cfg, freq):
    """Solve the configured system at a single frequency.

    """
    freq = float(freq)
    vs = cfg.phase_voltage()
    line = cfg.line_model(freq)
    try:
        state = solve_receiving_end(line, vs, cfg.load, freq)
    except ResonanceError as e:
        log.warning("singular operating point at %r Hz: %s", freq, e)
        return SweepRecord(freq, vs_mag=abs(vs), singular=True)
    result = complex_power_accounting(state)
    return SweepRecord(freq,
                       p_r=result.p_r,
                       q_r=result.q_r,
                       q_line=result.q_line,
                       vs_mag=abs(state.vs),
                       vr_mag=abs(state.vr),
                       delta_v=result.delta_v,
                       singular=False)

def run_sweep(cfg, workers=None):
    """Run a sweep, returning one SweepRecord per grid frequency.

    Records are always in ascending frequency order, whatever the number of
    worker threads (`workers` defaults to the value in `cfg`).

    """
    if workers is None:
        workers = cfg.workers
    freqs = [float(f) for f in cfg.grid()]
    log.info("sweeping %d points from %r Hz to %r Hz (%s model, %r km)",
             len(freqs), cfg.f_start, cfg.f_end, cfg.model, cfg.length)
    if workers > 1:
        with concurrent.futures.ThreadPoolExecutor(workers) as pool:
            records = list(pool.map(lambda f: solve_point(cfg, f), freqs))
    else:
        records = [solve_point(cfg, f) for f in freqs]
    singular = sum(1 for record in records if record.singular)
    if singular:
        log.info("%d of %d points were singular", singular, len(records))
    return records

def detect_tuning_dips(records, length, velocity=None):
    """Find the local minima of |q_line| in a sweep.

    A usable (non-singular) record is a minimum if its |q_line| is strictly
    smaller than that of both usable neighbours.  Each minimum is matched to
    the nearest harmonic n * v / (2 * length); if that is more than two grid
    steps away, `n_matched` is 0.

    The first and last usable records have a single neighbour, so a
    minimum there is only reported when it matches a harmonic.

    """
    usable = [record for record in records if not record.singular]
    if len(usable) < 3:
        raise InsufficientDataError("need at least 3 usable records to find "
                                    "dips (got %d)" % len(usable))
    length = float(length)
    v = as_velocity(velocity).v

    freqs = numpy.array([record.f for record in records], dtype=float)
    step = float(numpy.median(numpy.diff(freqs)))

    q_abs = numpy.abs(numpy.array([record.q_line for record in usable],
                                  dtype=float))
    padded = numpy.concatenate(([numpy.inf], q_abs, [numpy.inf]))
    is_min = (q_abs < padded[:-2]) & (q_abs < padded[2:])

    last = len(usable) - 1
    dips = []
    for index in numpy.flatnonzero(is_min):
        record = usable[index]
        n = nearest_harmonic(harmonic_ratio(length, record.f, v))
        f_harmonic = n * v / (2.0 * length)
        if abs(record.f - f_harmonic) > MATCH_STEPS * step:
            if index == 0 or index == last:
                log.debug("ignoring minimum of |q_line| at the grid end "
                          "(%r Hz)", record.f)
                continue
            log.info("minimum of |q_line| at %r Hz is not near a harmonic",
                     record.f)
            n = 0
        dips.append(TuningDip(record.f, n, record.q_line))
    return dips
