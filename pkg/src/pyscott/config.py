#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Config classes for search budgets and command line runs

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""
from __future__ import print_function, division, absolute_import
from .constant import DEFAULT_TERM_LENGTH_CAP, DEFAULT_ELEMENT_LENGTH_CAP, \
    DEFAULT_STEP_CAP, DEFAULT_COSET_CAP, DEFAULT_KB_CAP, DEFAULT_SEED, \
    BACKEND_KINDS


class Budget(object):
    """
    Bounds for every search that would otherwise be unbounded.

    :param term_length_cap: term tuples of larger total length are never
        considered
    :param element_length_cap: witness elements whose normal form is
        longer than this are never considered
    :param step_cap: number of term tuples (in enumeration order) a
        search may scan

    Every semi-procedure searches the finite space these three numbers
    describe exhaustively, so a larger budget (componentwise) never loses
    an answer found by a smaller one.
    """
    def __init__(self, term_length_cap=DEFAULT_TERM_LENGTH_CAP,
                 element_length_cap=DEFAULT_ELEMENT_LENGTH_CAP,
                 step_cap=DEFAULT_STEP_CAP):
        for name, value in (("term_length_cap", term_length_cap),
                            ("element_length_cap", element_length_cap),
                            ("step_cap", step_cap)):
            if int(value) != value:
                raise ValueError("%s(%s) must be an integer" % (name, value))
            if value < 0:
                raise ValueError("%s(%d) must be non-negative"
                                 % (name, value))
        self.term_length_cap = int(term_length_cap)
        self.element_length_cap = int(element_length_cap)
        self.step_cap = int(step_cap)

    @classmethod
    def from_level(cls, level):
        """
        Map the single integer of ``--budget N`` onto a budget record.
        All three fields are non-decreasing in ``level``.
        """
        if level < 0:
            raise ValueError("budget level(%d) must be non-negative"
                             % level)
        level = int(level)
        return cls(term_length_cap=level,
                   element_length_cap=max(1, level.bit_length() // 3),
                   step_cap=level)

    def as_tuple(self):
        return (self.term_length_cap, self.element_length_cap,
                self.step_cap)

    def to_json(self):
        return {"term_length_cap": self.term_length_cap,
                "element_length_cap": self.element_length_cap,
                "step_cap": self.step_cap}

    def __eq__(self, other):
        if not isinstance(other, Budget):
            return NotImplemented
        return self.as_tuple() == other.as_tuple()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __le__(self, other):
        return all(a <= b for a, b in zip(self.as_tuple(),
                                          other.as_tuple()))

    def __hash__(self):
        return hash(self.as_tuple())

    def __repr__(self):
        return "Budget(term_length_cap=%d, element_length_cap=%d, " \
            "step_cap=%d)" % self.as_tuple()


class RunConfig(object):
    """
    Everything a command line run depends on. Two runs with equal
    RunConfig produce identical output bytes.
    """
    _format_options = ["text", "json", "sexp"]

    def __init__(self, backend="free", rank=None, presentation_file=None,
                 rules_file=None, coset_cap=DEFAULT_COSET_CAP,
                 kb_cap=DEFAULT_KB_CAP, assert_hopfian=False, budget=None,
                 output_format="text", seed=DEFAULT_SEED, jobs=1):
        """
        :param backend: backend kind, one of ``BACKEND_KINDS``
        :param rank: number of generators for free/abelian backends
        :param presentation_file: presentation text file, required for
            the coset and rewrite backends
        :param rules_file: optional ``lhs -> rhs`` rule file for the
            rewrite backend; completion starts from these rules
        :param coset_cap: max cosets during enumeration
        :param kb_cap: max Knuth-Bendix rounds
        :param assert_hopfian: user assertion that a rewrite backend
            presents a Hopfian group
        :param budget: :class:`Budget`, or None for the defaults
        :param output_format: text, json or sexp
        :param seed: seed for every sampler
        :param jobs: worker count for batch mode
        """
        if backend not in BACKEND_KINDS:
            raise ValueError("Input backend(%s) must be in: %s"
                             % (backend, list(BACKEND_KINDS)))
        if output_format not in self._format_options:
            raise ValueError("Input format(%s) must be in: %s"
                             % (output_format, self._format_options))
        if backend in ("free", "abelian"):
            if rank is None:
                rank = 2
            if rank < 1:
                raise ValueError("rank(%d) must be at least 1" % rank)
        if backend in ("coset", "rewrite") and presentation_file is None:
            raise ValueError("backend(%s) requires a presentation file"
                             % backend)
        if coset_cap < 1:
            raise ValueError("coset_cap(%d) must be at least 1" % coset_cap)
        if kb_cap < 1:
            raise ValueError("kb_cap(%d) must be at least 1" % kb_cap)
        if jobs < 1:
            raise ValueError("jobs(%d) must be at least 1" % jobs)

        self.backend = backend
        self.rank = rank
        self.presentation_file = presentation_file
        self.rules_file = rules_file
        self.coset_cap = coset_cap
        self.kb_cap = kb_cap
        self.assert_hopfian = assert_hopfian
        self.budget = budget if budget is not None else Budget()
        self.output_format = output_format
        self.seed = seed
        self.jobs = jobs

    def make_backend(self):
        from .backends import make_backend
        from .presentation import load_presentation
        presentation = None
        if self.presentation_file is not None:
            presentation = load_presentation(self.presentation_file)
        return make_backend(
            self.backend, rank=self.rank, presentation=presentation,
            rules_file=self.rules_file, coset_cap=self.coset_cap,
            kb_cap=self.kb_cap, assert_hopfian=self.assert_hopfian)

    def __repr__(self):
        string = "="*10 + "  RunConfig Summary  " + "="*10 + "\n"
        string += "Backend: %s" % self.backend
        if self.rank is not None:
            string += "  rank: %d" % self.rank
        string += "\n"
        if self.presentation_file is not None:
            string += "Presentation file: %s\n" % self.presentation_file
        if self.rules_file is not None:
            string += "Rules file: %s\n" % self.rules_file
        string += "Coset cap: %d  KB cap: %d\n" % (self.coset_cap,
                                                   self.kb_cap)
        string += "Asserted Hopfian: %s\n" % self.assert_hopfian
        string += "%s\n" % self.budget
        string += "Format: %s  Seed: %d  Jobs: %d\n" % (
            self.output_format, self.seed, self.jobs)
        return string
