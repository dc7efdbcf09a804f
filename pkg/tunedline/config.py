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
r"""config.py: Read sweep definitions from config files.

A config file has four sections::

    [line]
    profile = default       ; optional: start from the default profile
    r = 0                   ; ohm/km
    L = 1 mH/km
    g = 0                   ; S/km
    C = 11.111 nF/km
    length = 500 km

    [load]
    kind = fixed-capacitance-rated
    rated_q = 100 MVAr
    rated_v = 220 kV
    rated_f = 50 Hz

    [source]
    voltage = 220 kV        ; line-to-line RMS

    [sweep]
    f_start = 50 Hz
    f_end = 1 kHz
    n_points = 951          ; or: step = 1 Hz
    model = exact           ; exact, lossless or pi-cascade
    sections = 100          ; pi-cascade only
    velocity = 3e5 km/s     ; optional, for matching dips to harmonics
    workers = 1

Keys in the [line] section are case sensitive, since L and C are written in
upper case.

"""
__docformat__ = "restructuredtext en"

import configparser
import hashlib
import json
import logging
import os

from tunedline import units
from tunedline.errors import ConfigError, ParameterError
from tunedline.linemodel import LineParameters, default_profile
from tunedline.powerflow import LoadSpec
from tunedline.sweep import DEFAULT_SECTIONS, SweepConfig

log = logging.getLogger(__name__)

CONFIG_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                          'configs')
CONFIG_SUFFIX = '.cfg'

SECTIONS = ('line', 'load', 'source', 'sweep')

# The canonical unit of each key, by section.
_KEY_UNITS = {
    'line': {
        'r': units.RESISTANCE_PER_LENGTH,
        'L': units.INDUCTANCE_PER_LENGTH,
        'g': units.CONDUCTANCE_PER_LENGTH,
        'C': units.CAPACITANCE_PER_LENGTH,
        'length': units.LENGTH,
    },
    'load': {
        'g_load': units.CONDUCTANCE,
        'c_load': units.CAPACITANCE,
        'rated_q': units.REACTIVE_POWER,
        'rated_v': units.VOLTAGE,
        'rated_f': units.FREQUENCY,
        'r_load': units.RESISTANCE,
        'x_load': units.RESISTANCE,
    },
    'source': {
        'voltage': units.VOLTAGE,
    },
    'sweep': {
        'f_start': units.FREQUENCY,
        'f_end': units.FREQUENCY,
        'step': units.FREQUENCY,
        'velocity': units.VELOCITY,
    },
}

_OTHER_KEYS = {
    'line': ('profile',),
    'load': ('kind',),
    'source': (),
    'sweep': ('n_points', 'model', 'sections', 'workers'),
}

def bundled_configs():
    """List the names of the bundled configs.

    >>> bundled_configs()
    ['experiment_300km', 'experiment_500km', 'experiment_500km_rc']

    """
    return sorted(name[:-len(CONFIG_SUFFIX)]
                  for name in os.listdir(CONFIG_DIR)
                  if name.endswith(CONFIG_SUFFIX))

def resolve_config_path(name):
    """Resolve `name` as a path, or failing that as a bundled config name.

    """
    if os.path.exists(name):
        return name
    path = os.path.join(CONFIG_DIR, name)
    if not path.endswith(CONFIG_SUFFIX):
        path += CONFIG_SUFFIX
    if os.path.exists(path):
        return path
    raise ConfigError("no such config file or bundled config: %r" % name)

def _read_parser(path):
    parser = configparser.ConfigParser(interpolation=None,
                                       inline_comment_prefixes=(';', '#'))
    parser.optionxform = str
    try:
        with open(path, encoding='utf-8') as fd:
            parser.read_file(fd)
    except configparser.Error as e:
        raise ConfigError("can't parse %s: %s" % (path, e))
    except OSError as e:
        raise ConfigError("can't read %s: %s" % (path, e))
    return parser

def _check_keys(parser):
    for section in parser.sections():
        if section not in SECTIONS:
            raise ConfigError("unknown section", section)
        allowed = set(_KEY_UNITS[section]) | set(_OTHER_KEYS[section])
        for key in parser[section]:
            if key not in allowed:
                raise ConfigError("unknown key", section, key)
    for section in SECTIONS:
        if not parser.has_section(section):
            raise ConfigError("missing section", section)

def _quantity(parser, section, key, default=None):
    if not parser.has_option(section, key):
        if default is None:
            raise ConfigError("missing value", section, key)
        return default
    try:
        return units.parse_quantity(parser.get(section, key),
                                    _KEY_UNITS[section][key])
    except ConfigError as e:
        raise ConfigError(str(e), section, key)

def _integer(parser, section, key, default=None):
    if not parser.has_option(section, key):
        if default is None:
            raise ConfigError("missing value", section, key)
        return default
    text = parser.get(section, key).strip()
    try:
        return int(text)
    except ValueError:
        raise ConfigError("expected an integer, got %r" % text, section, key)

def _line_from(parser):
    profile = parser.get('line', 'profile', fallback=None)
    if profile is None:
        base = {}
    elif profile.strip() == 'default':
        base = default_profile().as_dict()
    else:
        raise ConfigError("unknown profile %r" % profile, 'line', 'profile')
    values = {}
    for key in ('r', 'L', 'g', 'C'):
        if parser.has_option('line', key):
            values[key] = _quantity(parser, 'line', key)
        elif key in base:
            values[key] = base[key]
        elif key in ('r', 'g'):
            values[key] = 0.0
        else:
            raise ConfigError("missing value (and no profile given)",
                              'line', key)
    return LineParameters(**values)

def _load_from(parser):
    kind = parser.get('load', 'kind', fallback='').strip()
    if kind not in LoadSpec.KINDS:
        raise ConfigError("kind must be one of %s (got %r)" %
                          (', '.join(LoadSpec.KINDS), kind), 'load', 'kind')
    kwargs = {}
    for key in _KEY_UNITS['load']:
        if parser.has_option('load', key):
            kwargs[key] = _quantity(parser, 'load', key)
    return LoadSpec(kind, **kwargs)

def _n_points(parser, f_start, f_end):
    has_points = parser.has_option('sweep', 'n_points')
    has_step = parser.has_option('sweep', 'step')
    if has_points == has_step:
        raise ConfigError("give exactly one of n_points and step", 'sweep')
    if has_points:
        return _integer(parser, 'sweep', 'n_points')
    step = _quantity(parser, 'sweep', 'step')
    if not step > 0:
        raise ConfigError("step must be positive", 'sweep', 'step')
    n_intervals = (f_end - f_start) / step
    if abs(n_intervals - round(n_intervals)) > 1e-9 * max(1.0, n_intervals):
        raise ConfigError("step must divide the range f_start..f_end",
                          'sweep', 'step')
    return int(round(n_intervals)) + 1

def config_from_parser(parser):
    """Build a SweepConfig from a populated ConfigParser.

    """
    _check_keys(parser)
    try:
        line = _line_from(parser)
        load = _load_from(parser)
        f_start = _quantity(parser, 'sweep', 'f_start')
        f_end = _quantity(parser, 'sweep', 'f_end')
        velocity = None
        if parser.has_option('sweep', 'velocity'):
            velocity = _quantity(parser, 'sweep', 'velocity')
        return SweepConfig(
            line=line,
            length=_quantity(parser, 'line', 'length'),
            source_voltage=_quantity(parser, 'source', 'voltage'),
            load=load,
            f_start=f_start,
            f_end=f_end,
            n_points=_n_points(parser, f_start, f_end),
            model=parser.get('sweep', 'model', fallback='exact').strip(),
            sections=_integer(parser, 'sweep', 'sections',
                              DEFAULT_SECTIONS),
            velocity=velocity,
            workers=_integer(parser, 'sweep', 'workers', 1),
        )
    except ParameterError as e:
        raise ConfigError(str(e))

def load_config(name):
    """Load a SweepConfig from a config file path or bundled config name.

    """
    path = resolve_config_path(name)
    cfg = config_from_parser(_read_parser(path))
    log.debug("loaded %s (digest %s)", path, config_digest(cfg))
    return cfg

def config_digest(cfg):
    """SHA-1 hex digest of the resolved config.

    Identical configs give identical digests, however they were written.

    """
    text = json.dumps(cfg.as_dict(), sort_keys=True)
    return hashlib.sha1(text.encode('utf-8')).hexdigest()
