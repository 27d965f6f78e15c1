#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Tests for shortlex rewriting and Knuth-Bendix completion.

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""
from __future__ import print_function, division
import inspect
import os
import pytest
from pyscott.backends import RewritingSystemBackend
from pyscott.errors import CapOverflowError, NotCertifiedError, \
    PresentationSyntaxError
from pyscott.presentation import Word, parse_presentation, \
    abelian_presentation
from pyscott.rewriting import encode, decode, shortlex_ordered, \
    rules_from_presentation, kb_complete, parse_rewrite_rules, \
    load_rewrite_rules


DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(
    inspect.getfile(inspect.currentframe()))), "data")


def test_encode_decode():
    w = Word([(0, 1), (1, -1), (0, 1)])
    assert decode(encode(w)) == w
    assert encode(Word()) == ""
    short, long_ = encode(Word([(1, 1)])), encode(Word([(0, 1), (0, 1)]))
    assert shortlex_ordered(short, long_) == (long_, short)
    # same length: g0 < g0^-1 < g1
    a, ainv = encode(Word([(0, 1)])), encode(Word([(0, -1)]))
    assert shortlex_ordered(a, ainv) == (ainv, a)


def test_abelian_completion():
    p = abelian_presentation(2)
    rules = kb_complete(rules_from_presentation(p))
    assert rules.certified
    a, b = p.generator_words()
    assert rules.reduce(b * a) == a * b
    assert rules.reduce(~b * a * b * ~a) == Word()
    assert rules.reduce(b * ~a * b) == ~a * b * b
    assert "->" in rules.format()


def test_uncertified_rules_refuse_to_reduce():
    p = abelian_presentation(2)
    rules = rules_from_presentation(p)
    assert not rules.certified
    with pytest.raises(NotCertifiedError):
        rules.reduce(Word([(0, 1)]))


def test_cap_overflow():
    p = parse_presentation("< a, b | a^3, b^2, a*b*a*b >")
    with pytest.raises(CapOverflowError):
        kb_complete(rules_from_presentation(p), cap=1)
    backend = RewritingSystemBackend(p, kb_cap=1)
    assert not backend.capabilities.word_problem_decidable
    assert "uncertified" in backend.describe()
    with pytest.raises(NotCertifiedError):
        backend.normal_form(Word([(0, 1)]))


def test_parse_rewrite_rules():
    rules = parse_rewrite_rules("# comment\na^4 -> a^-2\n\nb -> 1\n",
                                ("a", "b"))
    assert len(rules) == 2
    assert rules[0][0].format() == "a^4"
    assert rules[1][1].is_empty()
    rules = load_rewrite_rules(os.path.join(DATA_DIR, "z6_rules.txt"),
                               ("a",))
    assert [(lhs.format(), rhs.format()) for lhs, rhs in rules] == \
        [("a^4", "a^-2")]


def test_parse_rewrite_rules_errors():
    with pytest.raises(PresentationSyntaxError) as excinfo:
        load_rewrite_rules(os.path.join(DATA_DIR, "bad_rules.txt"), ("a",))
    assert excinfo.value.line == 1
    with pytest.raises(PresentationSyntaxError) as excinfo:
        parse_rewrite_rules("a -> a\nb -> c\n", ("a", "b"))
    assert excinfo.value.line == 2
