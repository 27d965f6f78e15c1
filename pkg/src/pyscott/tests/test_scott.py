#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Tests for the orbit formula, the Scott sentence and bounded evaluation.

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""
from __future__ import print_function, division
import inspect
import json
import os
import pytest
from pyscott.backends import FreeGroupBackend, InfiniteDihedralBackend, \
    FiniteCosetTableBackend, RewritingSystemBackend
from pyscott.config import Budget
from pyscott.errors import FormulaError, NoOrbitDeciderError
from pyscott.formula import PI, D_SIGMA, ComplexityTag, TermEq, Exists, \
    Forall, classify, extend_stream, streams
from pyscott.presentation import Word, TermTuple, parse_presentation, \
    count_term_tuples_upto
from pyscott.scott import HOLDS_SO_FAR, FALSIFIED, build_theta_prefix, \
    emit_scott_sentence, evaluate_bounded, theta_document, \
    sentence_document, theta_conjunct, span_disjunct
from pyscott.tsets import element_diameter


DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(
    inspect.getfile(inspect.currentframe()))), "data")

S3 = "< a, b | a^3, b^2, a*b*a*b >"


def read_golden(name):
    with open(os.path.join(DATA_DIR, "golden", name)) as fh:
        return fh.read()


def theta(backend, budget):
    return build_theta_prefix(backend.presentation, backend, budget)


def theta_stream(f):
    return streams(f)[0]


@pytest.fixture(scope="module")
def s3():
    return FiniteCosetTableBackend(parse_presentation(S3))


@pytest.fixture(scope="module")
def s3_budget(s3):
    d = element_diameter(s3)
    return Budget(2 * d, d, count_term_tuples_upto(2, 2, 2 * d))


def test_golden_documents():
    backend = FreeGroupBackend(1)
    budget = Budget.from_level(16)
    assert theta_document(backend.presentation, backend, budget) == \
        read_golden("z_theta_16.sexp")
    assert sentence_document(backend.presentation, backend, budget) == \
        read_golden("z_sentence_16.sexp")


@pytest.mark.parametrize("prefix,backend", [
    ("z", FreeGroupBackend(1)),
    ("f2", FreeGroupBackend(2)),
    ("dinf", InfiniteDihedralBackend())])
def test_golden_documents_level_64(prefix, backend):
    budget = Budget.from_level(64)
    p = backend.presentation
    text = theta_document(p, backend, budget)
    assert text == read_golden("%s_theta_64.sexp" % prefix)
    assert "; class: computable Pi1" in text.splitlines()
    assert classify(theta(backend, budget)) == ComplexityTag(PI, 1)
    text = sentence_document(p, backend, budget)
    assert text == read_golden("%s_sentence_64.sexp" % prefix)
    assert "; class: computable dSigma2" in text.splitlines()
    assert classify(emit_scott_sentence(p, backend, budget)) == \
        ComplexityTag(D_SIGMA, 2)


def test_golden_stream_sizes():
    # signed permutations are the members for F2, (r^+-1, s^+-1) for D
    sizes = {"z": 62, "f2": 56, "dinf": 60}
    for prefix, kept in sizes.items():
        lines = read_golden("%s_theta_64.sexp" % prefix).splitlines()
        assert "; theta stream: %d formulas from 64 term tuples" % kept \
            in lines


def test_documents_are_deterministic():
    backend = InfiniteDihedralBackend()
    budget = Budget.from_level(32)
    first = sentence_document(backend.presentation, backend, budget)
    again = InfiniteDihedralBackend()
    assert sentence_document(again.presentation, again, budget) == first


def test_json_document():
    backend = FreeGroupBackend(1)
    text = theta_document(backend.presentation, backend,
                          Budget.from_level(16), output_format="json")
    content = json.loads(text)
    assert content["kind"] == "theta"
    assert content["schema_version"] == 1
    assert content["class"] == {"class": "Pi", "level": 1,
                                "computable": True}
    stream = content["formula"]["children"][0]
    assert stream["stream"]["scanned"] == 16
    assert len(stream["children"]) == 14


@pytest.mark.parametrize("backend,expected", [
    (FreeGroupBackend(1), 62),
    (FreeGroupBackend(2), 56),
    (InfiniteDihedralBackend(), 60),
])
def test_conjunct_counts(backend, expected):
    f = theta(backend, Budget.from_level(64))
    handle = theta_stream(f)
    assert len(handle) == expected
    assert handle.scanned == 64
    assert classify(f) == ComplexityTag(PI, 1)


def test_theta_conjunct_shape():
    p = parse_presentation(S3)
    t = FreeGroupBackend(2).generator_words()
    conjunct = theta_conjunct(p, TermTuple(2, [Word(), t[1]]))
    assert conjunct.to_sexp() == \
        "(forall (y1 y2) (not (and (= y1^3 1) (= y2^2 1) " \
        "(= y1*y2*y1*y2 1) (= x1 1) (= x2 y2))))"
    disjunct = span_disjunct(p, TermTuple(2, [t[0], t[0] * t[1]]))
    assert disjunct.to_sexp() == \
        "(exists (x1 x2) (and (= x1^3 1) (= x2^2 1) (= x1*x2*x1*x2 1) " \
        "(= y1 x1) (= y2 x1*x2)))"


def test_prefix_property():
    backend = FreeGroupBackend(2)
    small = theta(backend, Budget.from_level(16))
    large = theta(backend, Budget.from_level(64))
    extended = extend_stream(small, Budget.from_level(64))
    old, new = theta_stream(small), theta_stream(extended)
    assert list(new.keys[:len(old)]) == list(old.keys)
    assert new.keys == theta_stream(large).keys
    assert new.cursor == theta_stream(large).cursor
    with pytest.raises(ValueError):
        extend_stream(large, Budget.from_level(16))


def test_sentence_class():
    backend = InfiniteDihedralBackend()
    f = emit_scott_sentence(backend.presentation, backend,
                            Budget.from_level(16))
    assert classify(f) == ComplexityTag(D_SIGMA, 2)
    kinds = [handle.kind for handle in streams(f)]
    assert kinds == ["theta", "span"]
    assert len(streams(f)[1]) == 16


def test_no_decider():
    backend = RewritingSystemBackend(parse_presentation(S3))
    with pytest.raises(NoOrbitDeciderError):
        theta(backend, Budget.from_level(16))
    with pytest.raises(ValueError):
        build_theta_prefix(parse_presentation(S3), FreeGroupBackend(2),
                           Budget.from_level(16))


def test_evaluate_theta_integers():
    backend = FreeGroupBackend(1)
    budget = Budget.from_level(16)
    f = theta(backend, budget)
    a = backend.generator_words()[0]
    result = evaluate_bounded(f, (a,), backend, budget)
    assert result.status == HOLDS_SO_FAR
    assert not result.exact
    assert evaluate_bounded(f, (~a,), backend, budget).status == \
        HOLDS_SO_FAR

    result = evaluate_bounded(f, (a * a,), backend, budget)
    assert result.status == FALSIFIED
    assert result.certificate["inner_index"] == 1
    assert result.certificate["term"].format() == "(x1^2)"
    result = evaluate_bounded(f, {"x1": Word()}, backend, budget)
    assert result.falsified
    assert result.certificate["inner_index"] == 0

    with pytest.raises(FormulaError):
        evaluate_bounded(f, {}, backend, budget)


def first_falsifying_level(backend, b_bar, max_level=2 ** 12):
    level = 16
    while level <= max_level:
        budget = Budget.from_level(level)
        result = evaluate_bounded(theta(backend, budget), b_bar, backend,
                                  budget)
        if result.falsified:
            return level, result
        assert result.status == HOLDS_SO_FAR
        level *= 2
    return None, None


@pytest.mark.parametrize("backend", [FreeGroupBackend(2),
                                     InfiniteDihedralBackend()])
def test_theta_falsified_by_doubling(backend):
    a, b = backend.generator_words()
    # the conjunct (x1^2, x2) sits at position 135 of the enumeration
    level, result = first_falsifying_level(backend, (a * a, b))
    assert level == 256
    assert result.certificate["term"].format() == "(x1^2, x2)"
    assert result.certificate["witness"] == (a, b)
    for level in (16, 64, 256):
        budget = Budget.from_level(level)
        f = theta(backend, budget)
        for orbit_tuple in [(~a, b), (a, a * b)]:
            result = evaluate_bounded(f, orbit_tuple, backend, budget)
            assert result.status == HOLDS_SO_FAR


def test_evaluate_theta_finite(s3, s3_budget):
    f = theta(s3, s3_budget)
    a, b = s3.generator_words()
    for t in [(a, b), (~a, b), (a, a * b)]:
        assert evaluate_bounded(f, t, s3, s3_budget).holds
    for t in [(Word(), b), (a, Word())]:
        assert evaluate_bounded(f, t, s3, s3_budget).falsified
    # violated relator: a finite conjunct fails before the stream
    result = evaluate_bounded(f, (b, a), s3, s3_budget)
    assert result.falsified
    assert result.index == 0


def test_evaluate_quantifiers(s3, s3_budget):
    x1 = Word.generator(0)
    square = TermEq(x1 * x1, Word(), ("x1",))
    sixth = TermEq(x1 ** 6, Word(), ("x1",))
    assert evaluate_bounded(Exists(("x1",), square), {}, s3,
                            s3_budget).holds
    assert evaluate_bounded(Forall(("x1",), sixth), {}, s3,
                            s3_budget).holds
    result = evaluate_bounded(Forall(("x1",), square), {}, s3, s3_budget)
    assert result.falsified
    assert result.certificate["witness"][0].format() == "a"

    free = FreeGroupBackend(1)
    result = evaluate_bounded(Forall(("x1",), sixth), {}, free,
                              Budget(4, 2, 10))
    assert result.falsified
    result = evaluate_bounded(Forall(("x1",), TermEq(x1, x1, ("x1",))), {},
                              free, Budget(4, 2, 10))
    assert result.status == HOLDS_SO_FAR
    assert not result.exact


def test_evaluate_sentence_integers():
    backend = FreeGroupBackend(1)
    budget = Budget.from_level(16)
    f = emit_scott_sentence(backend.presentation, backend, budget)
    assert not evaluate_bounded(f, {}, backend, budget).falsified
