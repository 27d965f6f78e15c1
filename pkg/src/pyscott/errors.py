#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Exceptions raised by pyscott. Each one derives from the closest built-in
exception, so callers that only know about ValueError and friends keep
working.

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""
from __future__ import absolute_import


class PyscottError(Exception):
    pass


class PresentationSyntaxError(PyscottError, ValueError):
    """
    Raised by the presentation parser. ``line`` and ``column`` are 1-based
    and point at the offending token.
    """
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = "%s (line %d, column %d)" % (message, line, column)
        super(PresentationSyntaxError, self).__init__(message)


class ArityError(PyscottError, ValueError):
    pass


class InconsistentGeneratorsError(PyscottError, ValueError):
    pass


class NotAHomomorphismError(PyscottError, ValueError):
    """
    The candidate images violate a relator; the first failing relator is
    kept in ``relator``.
    """
    def __init__(self, message, relator=None):
        self.relator = relator
        super(NotAHomomorphismError, self).__init__(message)


class NotValidatedError(PyscottError, ValueError):
    pass


class NotCertifiedError(PyscottError, RuntimeError):
    pass


class NoOrbitDeciderError(PyscottError, RuntimeError):
    pass


class CapOverflowError(PyscottError, OverflowError):
    """
    A hard cap (cosets, rewrite rules) was exceeded. This is not a proof
    that the underlying object is infinite.
    """
    def __init__(self, message, cap=None):
        self.cap = cap
        super(CapOverflowError, self).__init__(message)


class ContradictoryCertificatesError(PyscottError, RuntimeError):
    def __init__(self, message, yes=None, no=None):
        self.yes = yes
        self.no = no
        super(ContradictoryCertificatesError, self).__init__(message)


class FormulaError(PyscottError, ValueError):
    pass


class InternalCheckError(PyscottError, AssertionError):
    pass
