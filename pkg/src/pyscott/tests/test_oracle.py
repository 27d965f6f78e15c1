#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Tests for the acceptance oracles, run with small corpora.

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""
from __future__ import print_function, division
import pytest
from pyscott.oracle import OracleResult, symmetric_group_backend, \
    cyclic_group_backend, all_tuples, homomorphism_tuples, brute_T_sets, \
    brute_automorphisms, finite_brute_force_check, free_corpus, \
    free_group_check, random_unimodular, random_non_unimodular, \
    abelian_check, dihedral_corpus, dihedral_check, formula_check, \
    matrix_corpus, semi_corpus
from pyscott.backends import FreeAbelianBackend, FreeGroupBackend, \
    InfiniteDihedralBackend
from pyscott.orbit import orbit_decide
from pyscott.log_util import oracle_table
from pyscott.util import make_rng


def test_oracle_result():
    result = OracleResult("free group decider", True, 12, "3 in orbit")
    assert repr(result) == "OracleResult(free group decider: PASS, " \
        "12 cases)"
    assert result.to_json() == {"name": "free group decider",
                                "passed": True, "checked": 12,
                                "detail": "3 in orbit"}
    assert "FAIL" in repr(OracleResult("x", False, 0))


def test_brute_force_helpers():
    s3 = symmetric_group_backend()
    assert len(all_tuples(s3)) == 36
    assert len(homomorphism_tuples(s3)) == 10
    assert len(brute_automorphisms(s3)) == 6

    z6 = cyclic_group_backend(6)
    table = brute_T_sets(z6, 3)
    assert len(table) == 6
    gens = z6.generator_words()
    # only (x1) and (x1^-1): a is never a square or a cube in Z/6
    assert len(table[gens]) == 2


@pytest.mark.parametrize("backend,name", [
    (cyclic_group_backend(6), "Z/6"),
    (cyclic_group_backend(5), "Z/5"),
    (symmetric_group_backend(), "S3"),
])
def test_finite_brute_force_check(backend, name):
    result = finite_brute_force_check(backend, name)
    assert result.passed, result.detail
    assert result.name == "finite brute force %s" % name


def test_finite_brute_force_check_counts():
    # 36 inclusions, 6 equalities, 7 term tuples, 6 orbit formula checks
    result = finite_brute_force_check(cyclic_group_backend(6), "Z/6")
    assert result.checked == 55


def test_free_corpus():
    _, corpus = free_corpus(1)
    assert len(corpus) == 9
    _, corpus = free_corpus(2)
    assert len(corpus) == 49


def test_free_group_check():
    result = free_group_check(max_total=3, semi_level=2 ** 8)
    assert result.passed, result.detail
    assert result.checked == 217


def test_random_matrices():
    rng = make_rng(11)
    for n in range(1, 5):
        for _ in range(10):
            assert abs(random_unimodular(rng, n).det_bareiss()) == 1
            assert abs(random_non_unimodular(rng, n).det_bareiss()) != 1


def test_matrix_corpus():
    backend, corpus = matrix_corpus(5, seed=3)
    assert len(corpus) == 10
    for index, pair in enumerate(corpus):
        assert len(pair) == 2
        assert sum(len(w) for w in pair) <= 5
        assert orbit_decide(backend, None, pair).in_orbit == (index < 5)
    assert matrix_corpus(5, seed=3)[1] == corpus


def test_semi_corpus_uses_decider_corpora():
    def sizes(corpus):
        counts = {}
        for backend, _ in corpus:
            kind = type(backend)
            counts[kind] = counts.get(kind, 0) + 1
        return counts

    full = sizes(semi_corpus(samples=10))
    # Z words up to length 6 and F2 pairs up to total length 5 share
    # the free backend type
    assert full[FreeGroupBackend] == 13 + 3241
    assert full[FreeAbelianBackend] == 20
    assert full[InfiniteDihedralBackend] == 256
    quick = sizes(semi_corpus(quick=True))
    assert quick[FreeGroupBackend] == 7 + 49
    assert quick[InfiniteDihedralBackend] == 16


def test_abelian_check():
    result = abelian_check(samples=20, max_rank=3)
    assert result.passed, result.detail
    assert result.checked == 40


def test_dihedral_check():
    backend, corpus = dihedral_corpus(1)
    assert len(corpus) == 16
    result = dihedral_check(max_length=2)
    assert result.passed, result.detail


def test_formula_check():
    result = formula_check()
    assert result.passed, result.detail
    assert result.checked == 6
    # only Z is frozen at level 16
    result = formula_check(level=16)
    assert not result.passed
    assert "no golden" in result.detail
    assert "z_theta_16" not in result.detail
    assert "f2_theta_16" in result.detail


def test_oracle_table():
    results = [OracleResult("finite brute force S3", True, 1379),
               OracleResult("formula documents", False, 3, "theta tag")]
    lines = oracle_table(results).splitlines()
    assert lines[1].split() == ["CHECK", "RESULT", "CASES", "DETAIL"]
    assert lines[3].split() == ["finite", "brute", "force", "S3", "PASS",
                                "1379"]
    assert lines[4].split()[-4:] == ["FAIL", "3", "theta", "tag"]
    assert lines[-1] == "1 of 2 checks passed"
