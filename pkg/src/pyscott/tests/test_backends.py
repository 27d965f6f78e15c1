#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Tests for the word-problem backends.

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
from hypothesis import given, strategies as st
import numpy.testing as npt
from pyscott.backends import FreeGroupBackend, FreeAbelianBackend, \
    InfiniteDihedralBackend, FiniteCosetTableBackend, \
    RewritingSystemBackend, satisfies_relators, enumerate_elements, \
    iter_element_tuples, make_backend
from pyscott.errors import ArityError
from pyscott.presentation import Word, parse_presentation, \
    cyclic_presentation, load_presentation


DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(
    inspect.getfile(inspect.currentframe()))), "data")

S3 = "< a, b | a^3, b^2, a*b*a*b >"

dihedral_letters = st.lists(
    st.tuples(st.integers(0, 1), st.sampled_from([1, -1])), max_size=10)


@pytest.fixture(scope="module")
def s3():
    return FiniteCosetTableBackend(parse_presentation(S3))


def test_free_backend():
    backend = FreeGroupBackend(2)
    assert backend.describe() == "FreeGroup(2)"
    assert backend.names == ("x", "y")
    assert [len(backend.elements_of_length(n)) for n in range(4)] == \
        [1, 4, 12, 36]
    x, y = backend.generator_words()
    assert backend.is_identity(x * y * ~y * ~x)
    assert not backend.equal(x * y, y * x)
    assert not backend.is_finite
    with pytest.raises(ArityError):
        backend.normal_form(Word([(0, 1)], arena=("a", "b")))
    with pytest.raises(ArityError):
        backend.normal_form(Word([(2, 1)]))


def test_abelian_backend():
    backend = FreeAbelianBackend(2)
    a, b = backend.generator_words()
    assert backend.describe() == "FreeAbelian(2)"
    assert backend.equal(a * b, b * a)
    assert backend.normal_form(b * a * ~b).format() == "a"
    assert backend.word_of_vector([2, -1]).format() == "a^2*b^-1"
    npt.assert_array_equal(backend.exponent_vector(b * ~a * b), [-1, 2])
    # normal forms are prefix closed: a^2, a*b, ... but never b*a
    level = [w.format() for w in backend.elements_of_length(2)]
    assert "a*b" in level and "b*a" not in level
    assert len(level) == 8


def test_dihedral_backend():
    backend = InfiniteDihedralBackend()
    r, s = backend.generator_words()
    assert backend.pair(r * s * r) == (0, 1)
    assert backend.normal_form(s * r * s).format() == "r^-1"
    assert backend.is_identity(s * r * s * r)
    assert backend.multiply_pairs((2, 1), (3, 0)) == (-1, 1)
    assert backend.word_of_pair((-2, 1)).format() == "r^-2*s"
    assert [len(backend.elements_of_length(n)) for n in range(4)] == \
        [1, 3, 4, 4]


@given(dihedral_letters, dihedral_letters)
def test_dihedral_multiplication(u, v):
    backend = InfiniteDihedralBackend()
    u = Word(u, arena=backend.names)
    v = Word(v, arena=backend.names)
    assert backend.pair(u * v) == \
        backend.multiply_pairs(backend.pair(u), backend.pair(v))
    nf = backend.normal_form(u)
    assert backend.normal_form(nf) == nf


def test_coset_backend(s3):
    assert s3.order() == 6
    assert s3.is_finite
    assert s3.describe() == "FiniteCosetTable(order 6)"
    assert [w.format() for w in s3.iter_elements()] == \
        ["1", "a", "a^-1", "b", "a*b", "a^-1*b"]
    a, b = s3.generator_words()
    assert s3.is_identity(a ** 3)
    assert s3.equal(b * a, ~a * b)
    assert s3.multiply(a, a).format() == "a^-1"
    assert s3.inverse(a * b).format() == "a*b"


def test_satisfies_relators(s3):
    a, b = s3.generator_words()
    assert satisfies_relators(s3.presentation, s3, (a, b))
    assert satisfies_relators(s3.presentation, s3, (Word(), Word()))
    assert satisfies_relators(s3.presentation, s3, (Word(), b))
    assert not satisfies_relators(s3.presentation, s3, (a, a))
    with pytest.raises(ArityError):
        satisfies_relators(s3.presentation, s3, (a,))


def test_enumerate_elements():
    backend = FiniteCosetTableBackend(cyclic_presentation(6))
    seen = []
    word, cursor = enumerate_elements(backend)
    while word is not None:
        seen.append(word.format())
        word, cursor = enumerate_elements(backend, cursor)
    assert seen == ["1", "a", "a^-1", "a^2", "a^-2", "a^3"]

    backend = FreeGroupBackend(1)
    word, cursor = enumerate_elements(backend)
    for _ in range(3):
        word, cursor = enumerate_elements(backend, cursor)
    assert word.format() == "a^2"


def test_iter_element_tuples(s3):
    tuples = list(iter_element_tuples(FreeGroupBackend(1), 1, 2))
    assert [t[0].format() for t in tuples] == \
        ["1", "a", "a^-1", "a^2", "a^-2"]
    tuples = list(iter_element_tuples(s3, 2, 2))
    assert len(tuples) == 36
    assert len(set(tuples)) == 36
    assert tuples[0] == (Word(), Word())
    totals = [len(u) + len(v) for u, v in tuples]
    assert totals == sorted(totals)


def test_rewriting_backend_agrees_with_cosets(s3):
    backend = RewritingSystemBackend(parse_presentation(S3))
    assert backend.capabilities.word_problem_decidable
    assert not backend.capabilities.hopfian_certified
    assert backend.capabilities.orbit_decider is None
    for word in FreeGroupBackend(2, ("a", "b")).iter_elements(4):
        assert backend.normal_form(word) == s3.normal_form(word)


def test_rewriting_backend_with_rules_file():
    p = load_presentation(os.path.join(DATA_DIR, "z6.txt"))
    backend = make_backend("rewrite", presentation=p,
                           rules_file=os.path.join(DATA_DIR,
                                                   "z6_rules.txt"),
                           assert_hopfian=True)
    cosets = FiniteCosetTableBackend(p)
    assert backend.capabilities.hopfian_certified
    for word in FreeGroupBackend(1, ("a",)).iter_elements(8):
        assert backend.normal_form(word) == cosets.normal_form(word)


def test_make_backend():
    assert make_backend("free").describe() == "FreeGroup(2)"
    assert make_backend("free", rank=1).names == ("a",)
    assert make_backend("abelian", rank=3).names == ("a", "b", "c")
    assert make_backend("dihedral").describe() == "InfiniteDihedral"
    p = load_presentation(os.path.join(DATA_DIR, "s3.txt"))
    assert make_backend("coset", presentation=p).order() == 6
    q = parse_presentation("< u, v | >")
    assert make_backend("free", presentation=q).names == ("u", "v")
    with pytest.raises(ValueError) as excinfo:
        make_backend("hyperbolic")
    assert "must be in" in str(excinfo.value)
    with pytest.raises(ValueError):
        make_backend("coset")
    with pytest.raises(ValueError):
        make_backend("free", presentation=p)


def test_backend_json(s3):
    content = s3.to_json()
    assert content["kind"] == "FiniteCosetTable"
    assert content["capabilities"]["orbit_decider"] == "finite"
    assert content["presentation"]["generators"] == ["a", "b"]
