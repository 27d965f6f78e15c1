#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
General util functions

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""
from __future__ import print_function, division, absolute_import
import hashlib
import json
import numpy as np
from .constant import SCHEMA_VERSION


def dumps_json(content):
    """
    Canonical JSON text: sorted keys, two-space indent, trailing newline.
    """
    return json.dumps(content, indent=2, sort_keys=True) + "\n"


def dumps_json_line(content):
    return json.dumps(content, sort_keys=True) + "\n"


def versioned(content):
    """
    Attach the schema version to a top-level JSON document.
    """
    content = dict(content)
    content["schema_version"] = SCHEMA_VERSION
    return content


def digest(items):
    """
    SHA-256 over the canonical text of a sequence of items. Items are
    joined by newlines; ``str`` is used for non-string items.
    """
    sha = hashlib.sha256()
    for item in items:
        sha.update(str(item).encode("utf-8"))
        sha.update(b"\n")
    return sha.hexdigest()


class RunningDigest(object):
    """
    Incremental form of :func:`digest`; ``hexdigest()`` after feeding the
    same items equals ``digest(items)``.
    """
    def __init__(self):
        self._sha = hashlib.sha256()
        self.count = 0

    def update(self, item):
        self._sha.update(str(item).encode("utf-8"))
        self._sha.update(b"\n")
        self.count += 1

    def hexdigest(self):
        return self._sha.hexdigest()

    def copy(self):
        new = RunningDigest()
        new._sha = self._sha.copy()
        new.count = self.count
        return new


def make_rng(seed):
    """
    All randomness in pyscott goes through a seeded RandomState.
    """
    if seed is None:
        raise ValueError("seed must be given explicitly")
    return np.random.RandomState(seed)


def random_select(rng, nsamples, nselected=1, replace=True):
    """
    Draw ``nselected`` indices out of ``range(nsamples)``
    """
    if nsamples <= 0:
        raise ValueError("nsamples(%d) must be positive" % nsamples)
    return [int(i) for i in rng.choice(nsamples, nselected,
                                       replace=replace)]


def jsonable(value):
    """
    Convert results (objects with ``to_json``, tuples, numpy integers)
    into plain JSON content.
    """
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, dict):
        return dict((str(k), jsonable(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, np.integer):
        return int(value)
    return value
