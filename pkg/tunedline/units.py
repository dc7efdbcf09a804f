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
r"""units.py: Normalise quantities written with unit suffixes.

Config values may be written as a bare number, in which case they are taken
to be in the canonical unit for the key, or as a number followed by a unit
("500 km", "220 kV", "100 MVAr", "1 mH/km").

>>> parse_quantity('220 kV', 'V')
220000.0
>>> parse_quantity('500', 'km')
500.0

"""
__docformat__ = "restructuredtext en"

import math

import pint

from tunedline.errors import ConfigError

ureg = pint.UnitRegistry()
if 'VAr' not in ureg:
    ureg.define('volt_ampere_reactive = volt * ampere = VAr')

# Canonical units used internally.
LENGTH = 'km'
FREQUENCY = 'Hz'
VOLTAGE = 'V'
REACTIVE_POWER = 'VAr'
VELOCITY = 'km / s'
RESISTANCE = 'ohm'
CONDUCTANCE = 'S'
CAPACITANCE = 'F'
RESISTANCE_PER_LENGTH = 'ohm / km'
INDUCTANCE_PER_LENGTH = 'H / km'
CONDUCTANCE_PER_LENGTH = 'S / km'
CAPACITANCE_PER_LENGTH = 'F / km'

def parse_quantity(text, unit):
    """Parse `text` and return its magnitude in `unit`, as a float.

    Raises ConfigError if the text can't be parsed, or has the wrong
    dimensions.

    """
    text = str(text).strip()
    if not text:
        raise ConfigError("empty value (expected a quantity in %s)" % unit)
    try:
        value = float(text)
    except ValueError:
        try:
            value = float(ureg.Quantity(text).to(unit).magnitude)
        except (pint.errors.PintError, ValueError, TypeError,
                AttributeError, SyntaxError) as e:
            raise ConfigError("can't read %r as a quantity in %s (%s)" %
                              (text, unit, e))
    if math.isnan(value) or math.isinf(value):
        raise ConfigError("%r is not a finite quantity" % text)
    return value
