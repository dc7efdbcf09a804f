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
r"""tunedline.

Steady-state phasor simulation of long (> 250 km) HVAC transmission lines,
and of "tuned" operation, where the supply frequency is chosen so that the
line's electrical length is a whole number of half-wavelengths.

See "docs/introduction.rst" for an introduction to using the package.

"""
__docformat__ = "restructuredtext en"

__version__ = '0.1.0'

from tunedline.errors import *
from tunedline.linemodel import (Frequency, LineParameters, TwoPort,
                                 WaveQuantities, SPEED_OF_LIGHT,
                                 abcd_exact, abcd_lossless, cascade,
                                 classify_length, default_profile,
                                 electrical_length, nominal_pi,
                                 pi_cascade_oracle, propagation_velocity,
                                 wave_quantities, wavelength)
from tunedline.tuning import (PropagationVelocity, TuningSolution, is_tuned,
                              tuned_lengths, tuning_frequencies)
from tunedline.powerflow import (LoadSpec, PowerResult, PowerTransferInputs,
                                 TerminalState, complex_power_accounting,
                                 reactive_power_tuned,
                                 reactive_power_with_regulation,
                                 receiving_active_power,
                                 receiving_reactive_power,
                                 solve_receiving_end, voltage_regulation)
from tunedline.sweep import (SweepConfig, SweepRecord, TuningDip,
                             detect_tuning_dips, run_sweep)
