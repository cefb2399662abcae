#!/usr/bin/env python

import os
import warnings

from setuptools import setup, find_packages

from textwrap import dedent

MAJOR = 0
MINOR = 1
MICRO = 0
VERSION = "{}.{}.{}".format(MAJOR, MINOR, MICRO)
DEV = False

# Correct versioning with git info if DEV
if DEV:
    import subprocess

    pipe = subprocess.Popen(
        ['git', "describe", "--always", "--match", "v[0-9]*"],
        stdout=subprocess.PIPE)
    so, err = pipe.communicate()

    if pipe.returncode != 0:
        # no git or something wrong with git (not in dir?)
        warnings.warn("WARNING: Couldn't identify git revision, using generic version string")
        VERSION += ".dev"
    else:
        git_rev = so.strip()
        git_rev = git_rev.decode('ascii')

        VERSION += ".dev-{}".format(git_rev)

DESCRIPTION = "Optimal quantizers for uniform distributions on polygon boundaries"
LONG_DESCRIPTION = """\
**polyquant** constructs optimal sets of n = m*k means and the exact n-th
quantization error for the uniform distribution on the boundary of a regular
m-sided polygon, together with the quantization coefficient of the polygon.
Every closed form is checked against an independent numerical oracle built
from boundary Voronoi cells, Gauss-Legendre quadrature and Lloyd's algorithm.
"""

DISTNAME = "polyquant"
AUTHOR = "polyquant developers"
LICENSE = "MIT"

CLASSIFIERS = [
    'Development Status :: 4 - Beta',
    'License :: OSI Approved :: MIT License',
    'Operating System :: OS Independent',
    'Intended Audience :: Science/Research',
    'Programming Language :: Python',
    'Programming Language :: Python :: 3',
    'Programming Language :: Python :: 3.8',
    'Programming Language :: Python :: 3.9',
    'Programming Language :: Python :: 3.10',
    'Topic :: Scientific/Engineering :: Mathematics',
]

INSTALL_REQUIRES = [
    'numpy>=1.17',
    'pandas>=1.0',
    'xarray>=0.16',
    'dask>=2.0',
]

TESTS_REQUIRE = ['pytest', 'hypothesis']


def _write_version_file():

    fn = os.path.join(os.path.dirname(__file__), DISTNAME, 'version.py')

    version_str = dedent("""
        __version__ = '{}'
        """)

    # Write version file
    with open(fn, 'w') as version_file:
        version_file.write(version_str.format(VERSION))

# Write version and install
_write_version_file()

setup(
    name = DISTNAME,
    author = AUTHOR,
    maintainer = AUTHOR,
    description = DESCRIPTION,
    long_description = LONG_DESCRIPTION,
    license = LICENSE,
    version = VERSION,

    packages = find_packages(),
    package_data = {},
    python_requires = '>=3.8',
    install_requires = INSTALL_REQUIRES,
    tests_require = TESTS_REQUIRE,
    extras_require = {'test': TESTS_REQUIRE},
    scripts = [
        'scripts/polyquant',
    ],
    entry_points = {
        'console_scripts': ['polyquant = polyquant.cli:main'],
    },

    classifiers = CLASSIFIERS
)
