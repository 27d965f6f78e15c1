#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
All the constants used in pyscott

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""
from __future__ import absolute_import

# Version of every JSON document written by pyscott. Bump it whenever a
# field is renamed or removed.
SCHEMA_VERSION = 1

# Default budget record (term_length_cap, element_length_cap, step_cap)
DEFAULT_TERM_LENGTH_CAP = 8
DEFAULT_ELEMENT_LENGTH_CAP = 8
DEFAULT_STEP_CAP = 10 ** 6

# Default budget level used by the command line when --budget is omitted
DEFAULT_BUDGET_LEVEL = 64

# Max number of cosets defined during Todd-Coxeter enumeration
DEFAULT_COSET_CAP = 5000
# Max number of Knuth-Bendix completion rounds and of rules kept
DEFAULT_KB_CAP = 50
MAX_KB_RULES = 2000

# Default seed for every sampler
DEFAULT_SEED = 1729

# Exit codes of the command line
EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64

# Backend kinds, in the order the command line lists them
BACKEND_KINDS = ("free", "abelian", "dihedral", "coset", "rewrite")

# Orbit decisions
IN_ORBIT = "InOrbit"
NOT_IN_ORBIT = "NotInOrbit"
UNKNOWN = "Unknown"

# Names of the bound and free variables in emitted formulas
FREE_VARIABLE_PREFIX = "x"
BOUND_VARIABLE_PREFIX = "y"

# Generator names used when a backend builds its own presentation
FREE_GENERATOR_NAMES = ("x", "y", "z")
ABELIAN_GENERATOR_NAMES = ("a", "b", "c", "d", "e", "f")
DIHEDRAL_GENERATOR_NAMES = ("r", "s")
