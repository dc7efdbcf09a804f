#!/usr/bin/env python
#
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
"""Setup script for the tunedline package.

"""

import os
import re

from setuptools import setup

def get_version():
    """Read the version from tunedline/__init__.py, without importing it.

    """
    path = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                        'tunedline', '__init__.py')
    with open(path) as fd:
        match = re.search(r"^__version__ = '([^']+)'", fd.read(), re.M)
    return match.group(1)

long_description = """
The "tunedline" python package simulates the steady state of long (more than
250 km) HVAC transmission lines.  It models a line by its exact
distributed-parameter two-port, solves the terminal phasors of a
source-line-load system, and evaluates the transmitted and line-absorbed power.

It is built around "tuned" operation: a lossless line whose electrical length
is a whole number of half-wavelengths has zero voltage regulation and absorbs
no net reactive power.  The package solves for tuned lengths and frequencies,
and runs frequency sweeps which locate the tuning points from the dips in the
line-absorbed reactive power.

"""

setup(name = "tunedline",
      version = get_version(),
      author = "The tunedline developers",
      description = "Steady-state simulation of tuned long HVAC lines",
      long_description = long_description,
      classifiers = [
          'Development Status :: 3 - Alpha',
          'Intended Audience :: Science/Research',
          'License :: OSI Approved :: GNU General Public License (GPL)',
          'Programming Language :: Python :: 3',
          'Topic :: Scientific/Engineering',
          'Operating System :: OS Independent',
      ],
      license = 'GPL',
      platforms = 'Any',
      python_requires = '>=3.8',

      packages = ['tunedline', 'tunedline.unittests'],
      package_dir = {'tunedline': 'tunedline'},
      package_data = {'tunedline': ['configs/*.cfg', 'doctests/*.txt']},

      install_requires = [
          'numpy',
          'pint',
      ],
      extras_require = {
          'test': ['hypothesis', 'coverage'],
          'docs': ['docutils'],
      },
      entry_points = {
          'console_scripts': [
              'tunedline = tunedline.cli:run_from_commandline',
          ],
      },
      test_suite = "test.make_all_suite",
      )
