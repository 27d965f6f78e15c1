#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Tests for the orbit deciders, their certificates and the two
semi-deciders.

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""
from __future__ import print_function, division
import pytest
from pyscott.backends import FreeGroupBackend, FreeAbelianBackend, \
    InfiniteDihedralBackend, FiniteCosetTableBackend, \
    RewritingSystemBackend, iter_element_tuples
from pyscott.config import Budget
from pyscott.constant import IN_ORBIT, NOT_IN_ORBIT, UNKNOWN
from pyscott.errors import ArityError, NoOrbitDeciderError
from pyscott.intmatrix import IntMatrix
from pyscott.orbit import OrbitVerdict, orbit_decide, verify_verdict, \
    orbit_semi_yes, orbit_semi_no, orbit_dovetail, semi_certificate_holds, \
    finite_automorphisms, register_orbit_decider, has_orbit_decider, \
    exponent_matrix, is_basis_free, dihedral_orbit_decide
from pyscott.presentation import Word, TermTuple, parse_presentation


S3 = "< a, b | a^3, b^2, a*b*a*b >"


@pytest.fixture(scope="module")
def s3():
    return FiniteCosetTableBackend(parse_presentation(S3))


@pytest.fixture
def free2():
    return FreeGroupBackend(2)


def check(backend, words, decision, method):
    verdict = orbit_decide(backend, None, words)
    assert verdict.decision == decision
    assert verdict.method == method
    assert verify_verdict(backend, words, verdict)
    return verdict


def test_free_group(free2):
    x, y = free2.generator_words()
    verdict = check(free2, (y, x), IN_ORBIT, "nielsen")
    assert verdict.format() == "InOrbit"
    assert verdict.certificate["alpha"].images == (y, x)
    check(free2, (x * y * x, x * y), IN_ORBIT, "nielsen")
    check(free2, (~y, x * ~y), IN_ORBIT, "nielsen")

    verdict = check(free2, (x * x, y), NOT_IN_ORBIT, "nielsen")
    assert verdict.format() == "NotInOrbit stuck at (x^2, y)"
    assert verdict.certificate["det"] == 2
    # unimodular exponent matrix, still not a basis
    verdict = check(free2, (x * y * ~x * ~y * x, y), NOT_IN_ORBIT,
                    "nielsen")
    assert abs(verdict.certificate["det"]) == 1


def test_free_abelian():
    backend = FreeAbelianBackend(2)
    m = IntMatrix.from_text("2 0; 0 1")
    words = [backend.word_of_vector(row) for row in m.tolist()]
    verdict = check(backend, words, NOT_IN_ORBIT, "hnf")
    assert verdict.format() == "NotInOrbit det=2"
    assert exponent_matrix(backend, words) == m

    words = [backend.word_of_vector(row) for row in [[3, 1], [5, 2]]]
    verdict = check(backend, words, IN_ORBIT, "hnf")
    assert verdict.certificate["det"] == 1
    assert verdict.format() == "InOrbit det=1"

    backend = FreeAbelianBackend(3)
    rows = [[1, 0, 0], [0, 0, 1], [0, -1, 0]]
    check(backend, [backend.word_of_vector(r) for r in rows], IN_ORBIT,
          "hnf")


def test_dihedral():
    backend = InfiniteDihedralBackend()
    r, s = backend.generator_words()
    check(backend, (~r, r ** 3 * s), IN_ORBIT, "dihedral")
    check(backend, (r, r * s), IN_ORBIT, "dihedral")
    verdict = check(backend, (r * r, s), NOT_IN_ORBIT, "dihedral")
    assert verdict.format() == "NotInOrbit normal form (r^2, s)"
    verdict = check(backend, (s, r), NOT_IN_ORBIT, "relator")
    assert "fails" in verdict.format()


def test_deciders_called_directly(free2):
    x, y = free2.generator_words()
    verdict = is_basis_free(free2, (x * y, y))
    assert verdict.in_orbit
    assert verdict.certificate["log"] == [("mul", 0, 1, 0, -1)]
    assert verdict.certificate["terms"].format() == "(x1*x2^-1, x2)"
    with pytest.raises(ArityError):
        is_basis_free(free2, (x,))

    backend = InfiniteDihedralBackend()
    r, s = backend.generator_words()
    verdict = dihedral_orbit_decide(backend, (~r, r * r * s))
    assert verdict.in_orbit
    assert verdict.certificate["terms"].format() == "(x1^-1, x1^2*x2)"
    assert verdict.certificate["pairs"] == [[-1, 0], [2, 1]]
    verdict = dihedral_orbit_decide(backend, (r * r, s))
    assert not verdict.in_orbit
    assert verdict.certificate["pairs"] == [[2, 0], [0, 1]]


def test_finite(s3):
    a, b = s3.generator_words()
    assert len(finite_automorphisms(s3)) == 6
    check(s3, (a, b), IN_ORBIT, "finite")
    check(s3, (~a, b), IN_ORBIT, "finite")
    check(s3, (a, a * b), IN_ORBIT, "finite")
    verdict = check(s3, (Word(), b), NOT_IN_ORBIT, "finite")
    assert verdict.format() == "NotInOrbit |Aut|=6"
    check(s3, (a, a), NOT_IN_ORBIT, "relator")
    decisions = [orbit_decide(s3, None, t).in_orbit
                 for t in iter_element_tuples(s3, 2, 2)]
    assert sum(decisions) == 6


def test_verdict_cache(s3):
    a, b = s3.generator_words()
    first = orbit_decide(s3, None, (b * a * b, b))
    assert orbit_decide(s3, None, (~a, b)) is first


def test_bad_arguments(free2):
    x, y = free2.generator_words()
    with pytest.raises(ArityError):
        orbit_decide(free2, None, (x,))
    with pytest.raises(ValueError):
        orbit_decide(free2, (y, x), (x, y))
    assert orbit_decide(free2, (x, y), (y, x)).in_orbit


def test_no_decider():
    backend = RewritingSystemBackend(parse_presentation(S3))
    a, b = backend.generator_words()
    assert not has_orbit_decider(backend)
    verdict = orbit_decide(backend, None, (a, b))
    assert verdict.decision == UNKNOWN
    assert verify_verdict(backend, (a, b), verdict)
    with pytest.raises(NoOrbitDeciderError):
        orbit_semi_no(backend.presentation, backend, None, (a, b),
                      Budget(4, 1, 100))

    register_orbit_decider(
        backend, lambda backend, words: OrbitVerdict(IN_ORBIT, "plugin"))
    assert has_orbit_decider(backend)
    assert orbit_decide(backend, None, (a, b)).method == "plugin"
    # a bare plug-in verdict carries nothing to check
    assert not verify_verdict(backend, (a, b),
                              orbit_decide(backend, None, (a, b)))
    # relators are checked before any plug-in runs
    assert orbit_decide(backend, None, (a, a)).method == "relator"


def test_plugin_verdicts_are_checked():
    backend = RewritingSystemBackend(parse_presentation(S3))
    a, b = backend.generator_words()
    one = a * ~a
    identity_terms = TermTuple.identity(2)
    inverse_terms = TermTuple(2, [Word([(0, -1)]), Word([(1, 1)])])

    def lying(backend, words):
        return OrbitVerdict(IN_ORBIT, "plugin", {"terms": identity_terms})

    register_orbit_decider(backend, lying)
    # (1, b) satisfies every relator but does not generate S3
    verdict = orbit_decide(backend, None, (one, b))
    assert verdict.method == "plugin"
    assert not verify_verdict(backend, (one, b), verdict)
    # the same certificate is honest at the generators themselves
    assert verify_verdict(backend, (a, b),
                          orbit_decide(backend, None, (a, b)))

    register_orbit_decider(
        backend, lambda backend, words: OrbitVerdict(
            IN_ORBIT, "plugin", {"terms": inverse_terms}))
    assert verify_verdict(backend, (~a, b),
                          orbit_decide(backend, None, (~a, b)))
    assert not verify_verdict(backend, (a, b),
                              orbit_decide(backend, None, (a, b)))

    register_orbit_decider(
        backend, lambda backend, words: OrbitVerdict(NOT_IN_ORBIT, "plugin"))
    assert not verify_verdict(backend, (one, b),
                              orbit_decide(backend, None, (one, b)))
    verdict = OrbitVerdict(NOT_IN_ORBIT, "plugin",
                           {"relator": backend.presentation.relators[1]})
    assert verify_verdict(backend, (a, a), verdict)
    assert not verify_verdict(backend, (a, b), verdict)


def test_semi_yes(free2):
    x, y = free2.generator_words()
    p = free2.presentation
    result = orbit_semi_yes(p, free2, None, (y, x), Budget())
    assert result.landed
    assert result.detail is None
    assert semi_certificate_holds(free2, (y, x), result)
    assert not orbit_semi_yes(p, free2, None, (x * x, y),
                              Budget(4, 1, 200)).landed
    with pytest.raises(ValueError):
        orbit_semi_yes(parse_presentation(S3), free2, None, (x, y),
                       Budget())

    backend = RewritingSystemBackend(parse_presentation(S3))
    a, b = backend.generator_words()
    result = orbit_semi_yes(backend.presentation, backend, None, (~a, b),
                            Budget(4, 1, 100))
    assert result.landed
    assert result.detail == "conditional on Hopfianity"
    # a tuple violating a relator never lands
    assert not orbit_semi_yes(backend.presentation, backend, None, (a, a),
                              Budget(4, 1, 100)).landed


def test_semi_no(free2):
    x, y = free2.generator_words()
    p = free2.presentation
    result = orbit_semi_no(p, free2, None, (x * x, y), Budget(8, 1, 1000))
    assert result.landed
    assert result.certificate["kind"] == "conjunct"
    assert result.certificate["term"].format() == "(x1^2, x2)"
    assert semi_certificate_holds(free2, (x * x, y), result)
    assert not orbit_semi_no(p, free2, None, (y, x),
                             Budget(4, 1, 100)).landed


def test_semi_no_relator(s3):
    a, b = s3.generator_words()
    result = orbit_semi_no(s3.presentation, s3, None, (b, a),
                           Budget(4, 1, 100))
    assert result.landed
    assert result.certificate["kind"] == "relator"
    assert semi_certificate_holds(s3, (b, a), result)


def test_dovetail(free2):
    x, y = free2.generator_words()
    result = orbit_dovetail(free2, (y, x), Budget.from_level(64))
    assert result.status == "yes"
    assert result.decision is True
    result = orbit_dovetail(free2, (x * x, y), Budget(8, 1, 1000))
    assert result.status == "no"
    assert result.decision is False
    result = orbit_dovetail(free2, (x * x, y), Budget(8, 1, 1000),
                            max_rounds=1)
    assert result.status == "exhausted"
    assert result.decision is None
