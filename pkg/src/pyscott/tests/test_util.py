#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Tests for json, digest and random helpers.

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""
from __future__ import print_function, division
import json
import numpy as np
import pytest
from pyscott.config import Budget
from pyscott.util import dumps_json, dumps_json_line, versioned, digest, \
    RunningDigest, make_rng, random_select, jsonable


def test_dumps_json_is_canonical():
    assert dumps_json({"b": 1, "a": [1, 2]}) == \
        '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'
    assert dumps_json_line({"b": 1, "a": 2}) == '{"a": 2, "b": 1}\n'


def test_versioned():
    content = {"kind": "theta"}
    tagged = versioned(content)
    assert tagged == {"kind": "theta", "schema_version": 1}
    assert "schema_version" not in content


def test_digest():
    items = ["(and", "  (= x1 1))", 3]
    running = RunningDigest()
    for item in items[:2]:
        running.update(item)
    copied = running.copy()
    running.update(items[2])
    assert running.hexdigest() == digest(items)
    assert running.count == 3
    assert copied.count == 2
    assert copied.hexdigest() == digest(items[:2])
    assert digest([]) != digest([""])


def test_make_rng():
    with pytest.raises(ValueError):
        make_rng(None)
    first = make_rng(7).randint(0, 1000, size=5)
    np.testing.assert_array_equal(first, make_rng(7).randint(0, 1000,
                                                             size=5))


def test_random_select():
    rng = make_rng(3)
    picks = random_select(rng, 10, 4, replace=False)
    assert len(set(picks)) == 4
    assert all(isinstance(i, int) and 0 <= i < 10 for i in picks)
    assert random_select(rng, 1) == [0]
    with pytest.raises(ValueError):
        random_select(rng, 0)


def test_jsonable():
    content = jsonable({1: (np.int64(3), Budget(2, 1, 9)), "x": None})
    assert content == {"1": [3, {"term_length_cap": 2,
                                 "element_length_cap": 1,
                                 "step_cap": 9}],
                       "x": None}
    json.dumps(content)
