#!/usr/bin/env python
# -*- coding: utf-8 -*-
'''
pyscott - orbits of generating tuples and Scott sentences of finitely
presented groups

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, Version 3
    (http://www.gnu.org/copyleft/lgpl.html)
'''
# Importing setuptools monkeypatches some of distutils commands so things like
# 'python setup.py develop' work. Wrap in try/except so it is not an actual
# dependency. Inplace installation with pip works also without importing
# setuptools.

import os
import sys
from setuptools import setup
from setuptools import find_packages

try:
    from setuptools.command.test import test as TestCommand
except ImportError:
    TestCommand = None


cmdclass = {}
if TestCommand is not None:
    class PyTest(TestCommand):
        user_options = [('pytest-args=', 'a', "Arguments to pass to py.test")]

        def initialize_options(self):
            TestCommand.initialize_options(self)
            self.pytest_args = []

        def run_tests(self):
            import pytest
            errno = pytest.main(self.pytest_args)
            sys.exit(errno)

    cmdclass['test'] = PyTest


def read(fname):
    try:
        return open(os.path.join(os.path.dirname(__file__), fname)).read()
    except Exception:
        return "Can't open %s" % fname


long_description = read("README.md")

setup(
    name='pyscott',
    version='0.1.0',
    license='GNU Lesser General Public License, Version 3',
    description='weak Whitehead problem, term sets and Scott sentences '
                'of finitely presented groups',
    long_description=long_description,
    long_description_content_type='text/markdown',
    author='pyscott developers',
    packages=find_packages("src"),
    package_dir={"": "src"},
    package_data={"pyscott.tests": ["data/*.txt", "data/golden/*.sexp"]},
    tests_require=['pytest', 'hypothesis', 'flake8'],
    cmdclass=cmdclass,
    include_package_data=True,
    zip_safe=False,
    entry_points={
        'console_scripts': ['pyscott = pyscott.cli:main'],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Intended Audience :: Developers',
        'Operating System :: Unix',
        'Operating System :: POSIX',
        'Topic :: Scientific/Engineering',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: GNU Lesser General Public License v3 '
        '(LGPLv3)',
        'Programming Language :: Python :: 3',
    ],
    keywords=['group theory', 'Whitehead problem', 'Scott sentence',
              'Nielsen reduction', 'coset enumeration', 'Knuth-Bendix'],
    install_requires=[
        "numpy", "sympy"
    ],
    extras_require={
        "docs": ["sphinx"],
        "test": ["pytest", "hypothesis", "flake8"]
    }
)
