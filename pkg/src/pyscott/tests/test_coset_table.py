#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Tests for coset enumeration; sympy's finitely presented groups serve as
the independent oracle.

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""
from __future__ import print_function, division
import pytest
from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import free_group
from pyscott.coset_table import CosetTable, coset_enumerate
from pyscott.errors import CapOverflowError
from pyscott.presentation import parse_presentation, free_presentation


CASES = [
    ("< a, b | a^3, b^2, a*b*a*b >",
     lambda a, b: [a**3, b**2, a*b*a*b]),
    ("< a, b | a^4, a^2*b^-2, b^-1*a*b*a >",
     lambda a, b: [a**4, a**2*b**-2, b**-1*a*b*a]),
    ("< a, b | a^2, b^3, a*b*a*b*a*b*a*b*a*b >",
     lambda a, b: [a**2, b**3, (a*b)**5]),
    ("< a, b | a^2, b^2, a*b*a*b*a*b >",
     lambda a, b: [a**2, b**2, (a*b)**3]),
]


@pytest.mark.parametrize("text,relators", CASES)
def test_order_matches_sympy(text, relators):
    F, a, b = free_group("a b")
    expected = FpGroup(F, relators(a, b)).order()
    table = coset_enumerate(parse_presentation(text))
    assert table.n_cosets == expected
    assert table.is_complete()


def test_symmetric_group_table():
    p = parse_presentation("< a, b | a^3, b^2, a*b*a*b >")
    table = coset_enumerate(p)
    assert [w.format() for w in table.representatives()] == \
        ["1", "a", "a^-1", "b", "a*b", "a^-1*b"]
    perm_a = table.permutation(0)
    assert sorted(perm_a) == list(range(6))
    # a has order 3 on cosets
    for alpha in range(6):
        assert perm_a[perm_a[perm_a[alpha]]] == alpha
    assert table.generator_images() == [1, 3]
    for alpha, rep in enumerate(table.representatives()):
        assert table.act(0, rep) == alpha
    assert "CosetTable(6 cosets)" in repr(table)
    table.check_relators()


def test_subgroup_cosets():
    p = parse_presentation("< a, b | a^3, b^2, a*b*a*b >")
    b = p.generator_words()[1]
    assert coset_enumerate(p, subgroup_gens=[b]).n_cosets == 3
    a = p.generator_words()[0]
    assert coset_enumerate(p, subgroup_gens=[a]).n_cosets == 2


def test_cap_overflow():
    with pytest.raises(CapOverflowError) as excinfo:
        coset_enumerate(free_presentation(1), cap=20)
    assert excinfo.value.cap == 20
    with pytest.raises(ValueError):
        CosetTable(free_presentation(1), max_cosets=0)
