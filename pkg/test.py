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
r"""test.py: Run a set of tests with doctest and unittest.

The list of modules to test is specified at the top of the file, in the
MODNAMES variable.

Other files containing documentation to be tested is listed in the OTHER_FILES
variable.

A subset of the modules can be tested by specifying a list of module names on
the command line.  Pass --coverage to get a coverage report as well.

"""
__docformat__ = "restructuredtext en"

#######################
# Begin configuration #
#######################

# List the modules to test with doctest (please keep this list in alphabetical
# order, for ease of maintenance).
MODNAMES = (
    'tunedline',
    'tunedline.cli',
    'tunedline.config',
    'tunedline.errors',
    'tunedline.linemodel',
    'tunedline.powerflow',
    'tunedline.results',
    'tunedline.sweep',
    'tunedline.tuning',
    'tunedline.units',
)

# List the documentation files which should be valid doctest inputs
OTHER_FILES = (
    'docs/introduction.rst',
)

# Lines matching this expression are left out of the coverage report.
EXCLUDE_LINES = (
    r'#pragma[: ]+[nN][oO] [cC][oO][vV][eE][rR]',
    r'if __name__ == .__main__.:',
)

########################
# End of configuration #
########################

import copy
import doctest
import os
import shutil
import sys
import tempfile
import traceback
import unittest

def canonical_path(path):
    return os.path.normcase(os.path.normpath(os.path.realpath(path)))

def create_docfile_suite(mod, moddir, testpath):
    """Create a suite of tests from a text file containing doctests.

    The dictionary of the module is imported into the namespace which the tests
    are run in (excluding any entries which begin with a double underscore), so
    the tests can be written as if they were entries in the modules __test__
    dictionary.

    """
    globs = {
        '__file__': moddir,
    }
    for key in mod.__dict__.keys():
        if not key.startswith('__'):
            globs[key] = mod.__dict__[key]
    return doctest.DocFileSuite(testpath,
                                module_relative=False,
                                globs=globs,
                                setUp=setup_test,
                                tearDown=teardown_test,
                                )

_orig_vals = {}
def setup_test(dtobj):
    """Prepare for running a test.

    Each test runs in a fresh temporary directory, with the top directory on
    the path.

    """
    _orig_vals['wd'] = os.path.abspath(os.getcwd())
    _orig_vals['path'] = sys.path
    sys.path = copy.copy(sys.path)
    sys.path.insert(0, get_topdir())

    testdir = dtobj.globs['__file__']
    sys.path.insert(0, testdir)

    _orig_vals['tmpdir'] = tempfile.mkdtemp(prefix='tunedline_test_')
    os.chdir(_orig_vals['tmpdir'])

def teardown_test(dtobj):
    """Cleanup after running a test.

    """
    dtobj.globs.clear()
    os.chdir(_orig_vals['wd'])
    sys.path = _orig_vals['path']
    shutil.rmtree(_orig_vals['tmpdir'])

def find_unittests(testdir):
    """Find all files containing unit tests under a top directory.

    """
    unittests = []
    for root, dirnames, filenames in os.walk(testdir):
        for filename in filenames:
            filepath = os.path.join(root, filename)
            relpath = filepath[len(testdir)+1:]
            if filename.startswith("test_") and filename.endswith(".py"):
                unittests.append(relpath)
    unittests.sort()
    return unittests

def get_topdir():
    return canonical_path(os.path.dirname(os.path.abspath(__file__)))

def make_suite(modnames, other_files):
    topdir = get_topdir()
    # Make a test suite to put all the tests in.
    suite = unittest.TestSuite()

    # Add all the doctest tests.
    modules = []
    for modname in modnames:
        try:
            # Get the path of the module (to search for associated tests)
            modpath = os.path.join(topdir, *(modname.split('.')))
            modpath = canonical_path(modpath)
            if os.path.isdir(modpath):
                modpath = os.path.join(modpath, '__init__')

            # Import the module
            sys.path.insert(0, topdir)
            mod = __import__(modname, None, None, [''])
            del sys.path[0]

            # Check that the module imported came from the expected path.
            if canonical_path(os.path.splitext(mod.__file__)[0]) != modpath:
                print("Couldn't import module `%s`: got module of same name, "
                      "from wrong path (%r)" % (modname, mod.__file__))
                continue

            # Add module to test suite.
            suite.addTest(doctest.DocTestSuite(mod, setUp=setup_test,
                                               tearDown=teardown_test))
            modules.append(mod)

            # Check for additional doctest files
            moddir, modfilename = os.path.split(modpath)
            modpath = os.path.join(moddir, "doctests",
                                   modfilename + "_doctest%d.txt")
            num = 1
            while os.path.exists(modpath % num):
                suite.addTest(create_docfile_suite(mod, moddir, modpath % num))
                num += 1

        except ImportError as e:
            print("Couldn't import module `%s`: %s" % (modname, e))
            traceback.print_exc()

    # Add any other files with doctests in them.
    for file in other_files:
        fullpath = os.path.join(topdir, file)
        globs = {'__file__': canonical_path(os.path.join(topdir,
                                                         "tunedline")),}
        suite.addTest(doctest.DocFileSuite(fullpath,
                                           module_relative=False,
                                           globs=globs,
                                           setUp=setup_test,
                                           tearDown=teardown_test,
                                          ))

    # Add unittests
    loader = unittest.TestLoader()
    sys.path.insert(0, topdir)
    for testpath in find_unittests(os.path.join(topdir, "tunedline",
                                                "unittests")):
        modpath = "tunedline.unittests." + testpath.replace(os.sep, '.')[:-3]
        try:
            mod = __import__(modpath, None, None, [''])
            test = loader.loadTestsFromModule(mod)
            suite.addTest(test)
        except ImportError as e:
            print("Skipping test module %s (%s)" % (modpath, str(e)))

    return modules, suite

def run_tests(modnames, other_files, specific_mods):
    """Run tests on the specified modules.

    Returns True if all the tests passed.

    """
    # Check command line for overrides to module names
    if specific_mods:
        newnames = []
        for arg in specific_mods:
            if arg in modnames:
                newnames.append(arg)
            else:
                print("Module `%s' not known" % arg)
                sys.exit(1)
        modnames = newnames

    modules, suite = make_suite(modnames, other_files)

    # Now, run everything.
    runner = unittest.TextTestRunner()
    return runner.run(suite).wasSuccessful()

def run(specific_mods, use_coverage=False):
    if use_coverage:
        # Measure everything imported from the package from here on.
        import coverage
        cov = coverage.Coverage(source=['tunedline'],
                                omit=['*/unittests/*'])
        for pattern in EXCLUDE_LINES:
            cov.exclude(pattern)
        cov.erase()
        cov.start()

    passed = run_tests(MODNAMES, OTHER_FILES, specific_mods)

    if use_coverage:
        cov.stop()
        print("Coverage report:")
        cov.report(show_missing=True)
    return passed

def make_all_suite():
    modules, suite = make_suite(MODNAMES, OTHER_FILES)
    return suite

if __name__ == '__main__':
    args = sys.argv[1:]
    use_coverage = '--coverage' in args
    if use_coverage:
        args.remove('--coverage')
    sys.exit(not run(args, use_coverage=use_coverage))
