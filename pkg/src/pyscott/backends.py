#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Word-problem backends. A backend realises one finitely presented group:
it maps words to canonical normal forms and enumerates the group's
elements in shortlex order of their normal forms.

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""
from __future__ import print_function, division, absolute_import
from collections import namedtuple
import numpy as np
from . import logger
from .constant import DEFAULT_COSET_CAP, DEFAULT_KB_CAP, BACKEND_KINDS
from .coset_table import coset_enumerate
from .errors import ArityError, CapOverflowError
from .presentation import Word, free_presentation, abelian_presentation, \
    dihedral_presentation
from .rewriting import rules_from_presentation, kb_complete, \
    load_rewrite_rules

# Position in the element enumeration: normal-form length and index among
# the normal forms of that length.
ElementCursor = namedtuple("ElementCursor", ["length", "index"])


class Capabilities(object):
    """
    What a backend can certify.

    :param word_problem_decidable: normal forms are exact
    :param hopfian_certified: the group is known to be Hopfian (built in
        kinds) or the user asserted it
    :param orbit_decider: name of a built-in orbit decider, a callable
        ``fn(backend, tuple)`` registered for this backend, or None
    """
    def __init__(self, word_problem_decidable, hopfian_certified,
                 orbit_decider=None):
        self.word_problem_decidable = word_problem_decidable
        self.hopfian_certified = hopfian_certified
        self.orbit_decider = orbit_decider

    def to_json(self):
        decider = self.orbit_decider
        if decider is not None and not isinstance(decider, str):
            decider = getattr(decider, "__name__", "plugin")
        return {"word_problem_decidable": self.word_problem_decidable,
                "hopfian_certified": self.hopfian_certified,
                "orbit_decider": decider}

    def __repr__(self):
        return "Capabilities(word_problem_decidable=%s, " \
            "hopfian_certified=%s, orbit_decider=%s)" % (
                self.word_problem_decidable, self.hopfian_certified,
                self.to_json()["orbit_decider"])


class Backend(object):
    """
    Base class. Subclasses implement :meth:`normal_form`; everything else
    is derived from it.

    ``cache`` is a memo owned by this instance and filled lazily by the
    orbit deciders and the witness searches. Every entry is a function of
    the backend and its key alone, so dropping it never changes a result.
    It is not shared between processes: each batch query builds its own
    backend, and a pickled backend carries a snapshot only.
    """
    kind = None

    def __init__(self, presentation, capabilities):
        self.presentation = presentation
        self.capabilities = capabilities
        self._levels = [[Word((), arena=presentation.names)]]
        self.cache = {}

    @property
    def names(self):
        return self.presentation.names

    @property
    def rank(self):
        return self.presentation.rank

    def generator_words(self):
        return self.presentation.generator_words()

    def check_word(self, word):
        if word.arena is not None and word.arena != self.names:
            raise ArityError("word %s lives over %s, backend over %s"
                             % (word, word.arena, self.names))
        if word.max_index() >= self.rank:
            raise ArityError("word %s uses a generator beyond rank %d"
                             % (word, self.rank))

    def normal_form(self, word):
        raise NotImplementedError

    def is_identity(self, word):
        return len(self.normal_form(word)) == 0

    def equal(self, u, v):
        return self.is_identity(u * ~v)

    def multiply(self, u, v):
        return self.normal_form(u * v)

    def inverse(self, u):
        return self.normal_form(~u)

    def order(self):
        """
        Group order, or None for an infinite (or unknown) group.
        """
        return None

    @property
    def is_finite(self):
        return self.order() is not None

    def elements_of_length(self, length):
        """
        Normal forms of the given length, in shortlex order. Normal forms
        are prefix closed, so each level extends the previous one.
        """
        while len(self._levels) <= length:
            previous = self._levels[-1]
            level = []
            for word in previous:
                last = word.codes()[-1] if word.letters else None
                for code in range(2 * self.rank):
                    if last is not None and code == last ^ 1:
                        continue
                    ext = word * Word.from_codes([code], arena=self.names)
                    if self.normal_form(ext) == ext:
                        level.append(ext)
            self._levels.append(level)
        return self._levels[length]

    def iter_elements(self, max_length=None):
        length = 0
        while max_length is None or length <= max_length:
            level = self.elements_of_length(length)
            if not level:
                return
            for word in level:
                yield word
            length += 1

    def satisfies_relators(self, presentation, images):
        return satisfies_relators(presentation, self, images)

    def describe(self):
        return self.kind

    def to_json(self):
        return {"kind": self.kind, "description": self.describe(),
                "presentation": self.presentation.to_json(),
                "capabilities": self.capabilities.to_json()}

    def __repr__(self):
        return "%s %s" % (self.describe(), self.presentation)


class FreeGroupBackend(Backend):
    kind = "FreeGroup"

    def __init__(self, rank, names=None):
        super(FreeGroupBackend, self).__init__(
            free_presentation(rank, names),
            Capabilities(True, True, "nielsen"))

    def normal_form(self, word):
        self.check_word(word)
        return word.with_arena(self.names)

    def elements_of_length(self, length):
        # every reduced word is a normal form
        while len(self._levels) <= length:
            level = []
            for word in self._levels[-1]:
                last = word.codes()[-1] if word.letters else None
                for code in range(2 * self.rank):
                    if last is None or code != last ^ 1:
                        level.append(
                            word * Word.from_codes([code], arena=self.names))
            self._levels.append(level)
        return self._levels[length]

    def describe(self):
        return "FreeGroup(%d)" % self.rank


class FreeAbelianBackend(Backend):
    kind = "FreeAbelian"

    def __init__(self, rank, names=None):
        super(FreeAbelianBackend, self).__init__(
            abelian_presentation(rank, names),
            Capabilities(True, True, "hnf"))

    def exponent_vector(self, word):
        self.check_word(word)
        return np.array(word.exponent_vector(self.rank), dtype=object)

    def word_of_vector(self, vector):
        letters = []
        for index, exponent in enumerate(vector):
            sign = 1 if exponent > 0 else -1
            letters.extend([(index, sign)] * abs(int(exponent)))
        return Word(letters, arena=self.names)

    def normal_form(self, word):
        return self.word_of_vector(self.exponent_vector(word))

    def describe(self):
        return "FreeAbelian(%d)" % self.rank


class InfiniteDihedralBackend(Backend):
    """
    ``< r, s | s^2, s*r*s*r >``. Elements are pairs ``(k, e)`` standing
    for ``r^k s^e`` with ``(k, e)(m, f) = (k + (-1)^e m, e + f mod 2)``.
    """
    kind = "InfiniteDihedral"

    def __init__(self):
        super(InfiniteDihedralBackend, self).__init__(
            dihedral_presentation(), Capabilities(True, True, "dihedral"))

    @staticmethod
    def multiply_pairs(x, y):
        k, e = x
        m, f = y
        return (k + (-m if e else m), (e + f) % 2)

    def pair(self, word):
        self.check_word(word)
        k, e = 0, 0
        for index, sign in word.letters:
            if index == 0:
                k, e = k + (-sign if e else sign), e
            else:
                e = 1 - e
        return (k, e)

    def word_of_pair(self, pair):
        k, e = pair
        letters = [(0, 1 if k > 0 else -1)] * abs(k)
        if e:
            letters.append((1, 1))
        return Word(letters, arena=self.names)

    def normal_form(self, word):
        return self.word_of_pair(self.pair(word))

    def describe(self):
        return "InfiniteDihedral"


class FiniteCosetTableBackend(Backend):
    """
    A finite group given by its regular coset table. Elements are coset
    ids; coset 0 is the identity and the normal form of a coset is its
    shortlex-least representative.
    """
    kind = "FiniteCosetTable"

    def __init__(self, presentation, coset_cap=DEFAULT_COSET_CAP):
        super(FiniteCosetTableBackend, self).__init__(
            presentation, Capabilities(True, True, "finite"))
        self.table = coset_enumerate(presentation, cap=coset_cap)
        self.reps = self.table.representatives()

    def coset(self, word):
        self.check_word(word)
        return self.table.act(0, word)

    def normal_form(self, word):
        return self.reps[self.coset(word)]

    def order(self):
        return self.table.n_cosets

    def elements_of_length(self, length):
        return [w for w in self.reps if len(w) == length]

    def describe(self):
        return "FiniteCosetTable(order %d)" % self.order()


class RewritingSystemBackend(Backend):
    """
    Normal forms from a shortlex rewriting system. Completion failure is
    not fatal: the backend then refuses to compute normal forms.
    """
    kind = "RewritingSystem"

    def __init__(self, presentation, extra_rules=(), kb_cap=DEFAULT_KB_CAP,
                 assert_hopfian=False):
        initial = rules_from_presentation(presentation, extra_rules)
        try:
            rules = kb_complete(initial, cap=kb_cap)
        except CapOverflowError as err:
            logger.warning("rewriting system not certified: %s" % err)
            rules = initial
        super(RewritingSystemBackend, self).__init__(
            presentation,
            Capabilities(rules.certified, bool(assert_hopfian), None))
        self.rules = rules

    def normal_form(self, word):
        self.check_word(word)
        return self.rules.reduce(word)

    def describe(self):
        return "RewritingSystem(%d rules%s)" % (
            len(self.rules.rules),
            "" if self.rules.certified else ", uncertified")


def satisfies_relators(presentation, backend, images):
    """
    True iff every relator of ``presentation`` evaluated at ``images`` is
    the identity of ``backend``.
    """
    images = tuple(images)
    if len(images) != presentation.rank:
        raise ArityError("expected %d images, got %d"
                         % (presentation.rank, len(images)))
    for word in images:
        backend.check_word(word)
    for relator in presentation.relators:
        if not backend.is_identity(relator.substitute(images,
                                                      arena=backend.names)):
            return False
    return True


def normal_form(backend, word):
    return backend.normal_form(word)


def is_identity(backend, word):
    return backend.is_identity(word)


def enumerate_elements(backend, cursor=None):
    """
    Next normal form in shortlex order.

    :return: ``(word, next_cursor)``, or ``(None, None)`` once a finite
        group is exhausted
    """
    if cursor is None:
        cursor = ElementCursor(0, 0)
    length, index = cursor
    level = backend.elements_of_length(length)
    while index >= len(level):
        if not level:
            return None, None
        length, index = length + 1, 0
        level = backend.elements_of_length(length)
    return level[index], ElementCursor(length, index + 1)


def iter_element_tuples(backend, n, cap):
    """
    All n-tuples of normal forms with every component of length at most
    ``cap``; ordered by total length, then shortlex on the first
    component, then the second, ...
    """
    levels = []
    for length in range(cap + 1):
        level = backend.elements_of_length(length)
        if not level:
            break
        levels.append(level)
    max_len = len(levels) - 1

    def tuples(k, total):
        if k == 0:
            if total == 0:
                yield ()
            return
        for length in range(min(max_len, total) + 1):
            if total - length > (k - 1) * max_len:
                continue
            for word in levels[length]:
                for rest in tuples(k - 1, total - length):
                    yield (word,) + rest

    for total in range(n * max_len + 1):
        for item in tuples(n, total):
            yield item


def make_backend(kind, rank=None, presentation=None, rules_file=None,
                 coset_cap=DEFAULT_COSET_CAP, kb_cap=DEFAULT_KB_CAP,
                 assert_hopfian=False, extra_rules=()):
    """
    Build a backend from its command line kind.

    :param kind: one of ``free``, ``abelian``, ``dihedral``, ``coset``,
        ``rewrite``
    """
    if kind not in BACKEND_KINDS:
        raise ValueError("Input backend(%s) must be in: %s"
                         % (kind, list(BACKEND_KINDS)))
    if kind in ("free", "abelian"):
        names = None
        if presentation is not None:
            names = presentation.names
            rank = presentation.rank
        if rank is None:
            rank = 2
        if kind == "free":
            if presentation is not None and presentation.relators:
                raise ValueError("a free backend takes no relators")
            return FreeGroupBackend(rank, names)
        return FreeAbelianBackend(rank, names)
    if kind == "dihedral":
        return InfiniteDihedralBackend()
    if presentation is None:
        raise ValueError("backend(%s) requires a presentation" % kind)
    if kind == "coset":
        return FiniteCosetTableBackend(presentation, coset_cap=coset_cap)
    extra_rules = list(extra_rules)
    if rules_file is not None:
        extra_rules.extend(load_rewrite_rules(rules_file,
                                              presentation.names))
    return RewritingSystemBackend(presentation, extra_rules, kb_cap=kb_cap,
                                  assert_hopfian=assert_hopfian)
