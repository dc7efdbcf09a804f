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
r"""tunedlinetest.py: Framework for tunedline unittests.

Unittests should just start with
"from tunedline.unittests.tunedlinetest import *", which will provide a
convenient environment for writing tests of tunedline features.

"""
__docformat__ = "restructuredtext en"

import math
import os
import shutil
import sys
import tempfile
import unittest

# Ensure that tunedline is on the path, when run uninstalled.
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '../..'))
import tunedline

from hypothesis import assume, given, settings, strategies as st

# Per-km constants of the default profile.
DEFAULT_L = 1.0e-3
DEFAULT_C = 1.0 / (9.0e10 * DEFAULT_L)

# The source voltage of the bundled experiments, line-to-neutral.
SOURCE_PHASE_V = 220e3 / math.sqrt(3.0)

def rated_capacitor_bank():
    """The 100 MVAr, 220 kV, 50 Hz capacitor bank of the experiments.

    """
    return tunedline.LoadSpec.capacitor_bank(100e6, 220e3, 50.0)

def lossless_params():
    """Strategy giving lossless LineParameters with a realistic velocity.

    """
    return st.builds(
        lambda L, v: tunedline.LineParameters(L=L, C=1.0 / (v * v * L)),
        st.floats(min_value=0.5e-3, max_value=2e-3),
        st.floats(min_value=2.0e5, max_value=3.0e5))

def lossy_params():
    """Strategy giving LineParameters with small losses.

    """
    return st.builds(
        lambda r, L, g, v: tunedline.LineParameters(r=r, L=L, g=g,
                                                    C=1.0 / (v * v * L)),
        st.floats(min_value=0.0, max_value=0.1),
        st.floats(min_value=0.5e-3, max_value=2e-3),
        st.floats(min_value=0.0, max_value=1e-7),
        st.floats(min_value=2.0e5, max_value=3.0e5))

def lengths(max_value=1000.0):
    return st.floats(min_value=1.0, max_value=max_value)

def frequencies(min_value=1.0, max_value=1000.0):
    return st.floats(min_value=min_value, max_value=max_value)

class TestCase(unittest.TestCase):
    """Base class of tunedline unittests.

    """
    def setUp(self):
        """Set up environment for a unittest.

        This should not normally be implemented in subclasses - instead,
        implement the pre_test() method, which is called by this method after
        performing the standard test setup process.

        """
        self.tempdir = tempfile.mkdtemp()
        self.pre_test()

    def tearDown(self):
        """Clean up after a unittest.

        This should not normally be implemented in subclasses - instead,
        implement the post_test() method, which is called by this method before
        performing the standard cleanup process.

        """
        self.post_test()
        shutil.rmtree(self.tempdir)

    def pre_test(self):
        """Prepare for a test.  This is called before a test is started, but
        after the standard setup process.

        """
        pass

    def post_test(self):
        """Cleanup after a test.  This is called after a test finishes, but
        before the standard cleanup process.

        """
        pass

    def assertClose(self, actual, expected, rel=0.0, abs_=0.0, msg=None):
        """Check that `actual` is within `abs_` + `rel` * |expected| of
        `expected`.  Works for real and complex values.

        """
        tol = abs_ + rel * abs(expected)
        if not abs(actual - expected) <= tol:
            self.fail(msg or "%r is not within %r of %r" %
                      (actual, tol, expected))

    def assertTwoPortClose(self, actual, expected, rel=0.0, abs_=0.0):
        for name in ('a', 'b', 'c', 'd'):
            self.assertClose(getattr(actual, name), getattr(expected, name),
                             rel=rel, abs_=abs_,
                             msg="entry %s: %r != %r" % (
                                 name, getattr(actual, name),
                                 getattr(expected, name)))

    def path(self, *parts):
        return os.path.join(self.tempdir, *parts)

main = unittest.main
