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
import tunedline

SECTIONS = (1, 10, 100, 1000)

def convergence_row(params, length, freq):
    """Dimensionless error of the nominal-pi cascade, for each entry of
    SECTIONS.

    """
    exact = tunedline.abcd_exact(params, length, freq)
    zc = tunedline.wave_quantities(params, freq).zc
    return [tunedline.pi_cascade_oracle(params, length, freq, n)
            .max_deviation(exact, zc) for n in SECTIONS]

def print_table(length, freqs):
    params = tunedline.default_profile()
    print("# %s km, default profile" % length)
    print("%-8s" % "f_hz" + "".join("%12s" % ("n=%d" % n) for n in SECTIONS))
    for freq in freqs:
        row = convergence_row(params, length, freq)
        print("%-8g" % freq + "".join("%12.3e" % err for err in row))

usage = """
convergence_table.py <length_km> <freq_hz> [<freq_hz> ...]
"""

def run_from_commandline():
    import sys
    if len(sys.argv) < 3:
        print(usage.strip())
        sys.exit(1)

    length = float(sys.argv[1])
    freqs = [float(arg) for arg in sys.argv[2:]]
    print_table(length, freqs)

if __name__ == "__main__":
    run_from_commandline()
