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
r"""errors.py: Exceptions for the line simulation core.

"""
__docformat__ = "restructuredtext en"

__all__ = (
    'TunedLineError',
    'ParameterError',
    'ResonanceError',
    'InsufficientDataError',
    'ConfigError',
)

class TunedLineError(Exception):
    r"""Base class for exceptions thrown by tunedline.

    Any errors generated by tunedline itself will be instances of this class
    or its subclasses.

    """

class ParameterError(TunedLineError, ValueError):
    r"""Class used to report invalid arguments to a library operation.

    This is also a ValueError, so callers which don't care about tunedline's
    hierarchy can catch it in the usual way.

    """

class ResonanceError(TunedLineError, ArithmeticError):
    r"""Class used to report a physically degenerate operating point.

    Raised when the source sees a (near) short through the line and load, ie
    when |a + b * y_load| vanishes.  `freq` is the frequency in Hz (or None
    if not known), and `residual` is the offending value of |a + b * y_load|.

    """
    def __init__(self, message, freq=None, residual=None):
        TunedLineError.__init__(self, message)
        self.freq = freq
        self.residual = residual

class InsufficientDataError(TunedLineError):
    r"""Class used to report that too few usable sweep records were supplied.

    """

class ConfigError(TunedLineError):
    r"""Class used to report errors in a configuration file or value.

    `section` and `key` identify where the problem was found, when known.

    """
    def __init__(self, message, section=None, key=None):
        if section is not None:
            where = '[%s]' % section
            if key is not None:
                where += ' %s' % key
            message = '%s: %s' % (where, message)
        TunedLineError.__init__(self, message)
        self.section = section
        self.key = key
