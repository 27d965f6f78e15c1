#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Relator based (HLT) coset enumeration.

The table is indexed by letter code (see :mod:`pyscott.presentation`):
``table[alpha][code]`` is the coset ``alpha`` is sent to by that letter,
or None while undefined.

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""
from __future__ import print_function, division, absolute_import
from collections import deque
from . import logger
from .constant import DEFAULT_COSET_CAP
from .errors import CapOverflowError, InternalCheckError
from .presentation import Word, code_letter


class CosetTable(object):
    """
    Coset table of a subgroup of a finitely presented group.

    :param presentation: :class:`pyscott.presentation.Presentation`
    :param subgroup_gens: words generating the subgroup; empty for the
        regular representation
    :param max_cosets: hard cap on the number of cosets ever defined
    """
    def __init__(self, presentation, subgroup_gens=(),
                 max_cosets=DEFAULT_COSET_CAP):
        if max_cosets < 1:
            raise ValueError("max_cosets(%d) must be at least 1"
                             % max_cosets)
        self.presentation = presentation
        self.max_cosets = max_cosets
        self.n_letters = 2 * presentation.rank
        self.relators = [r.codes() for r in presentation.relators]
        self.subgroup_gens = [w.codes() for w in subgroup_gens]
        self.table = [[None] * self.n_letters]
        self.p = [0]
        self.n_defined = 1
        self._reps = None

    @property
    def n_cosets(self):
        return len(self.table)

    def is_complete(self):
        return all(x is not None for row in self.table for x in row)

    def define(self, alpha, x):
        if len(self.table) >= self.max_cosets:
            raise CapOverflowError(
                "coset enumeration exceeded %d cosets" % self.max_cosets,
                cap=self.max_cosets)
        beta = len(self.table)
        self.table.append([None] * self.n_letters)
        self.p.append(beta)
        self.table[alpha][x] = beta
        self.table[beta][x ^ 1] = alpha
        self.n_defined += 1

    def rep(self, k):
        p = self.p
        lam = k
        while p[lam] != lam:
            lam = p[lam]
        mu = k
        while p[mu] != lam:
            p[mu], mu = lam, p[mu]
        return lam

    def merge(self, k, lam, q):
        phi = self.rep(k)
        psi = self.rep(lam)
        if phi != psi:
            mu, v = min(phi, psi), max(phi, psi)
            self.p[v] = mu
            q.append(v)

    def coincidence(self, alpha, beta):
        table = self.table
        q = deque()
        self.merge(alpha, beta, q)
        while q:
            gamma = q.popleft()
            for x in range(self.n_letters):
                delta = table[gamma][x]
                if delta is None:
                    continue
                table[delta][x ^ 1] = None
                mu = self.rep(gamma)
                nu = self.rep(delta)
                if table[mu][x] is not None:
                    self.merge(nu, table[mu][x], q)
                elif table[nu][x ^ 1] is not None:
                    self.merge(mu, table[nu][x ^ 1], q)
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu

    def scan_and_fill(self, alpha, word):
        """
        Trace ``word`` from ``alpha`` forwards and backwards, defining new
        cosets until the scan closes. Returns after a coincidence or a
        deduction.
        """
        table = self.table
        f, i = alpha, 0
        b, j = alpha, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][word[j] ^ 1] is not None:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            elif j == i:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            else:
                self.define(f, word[i])

    def enumerate(self):
        for word in self.subgroup_gens:
            self.scan_and_fill(0, word)
        alpha = 0
        while alpha < len(self.table):
            if self.p[alpha] == alpha:
                for word in self.relators:
                    self.scan_and_fill(alpha, word)
                    if self.p[alpha] < alpha:
                        break
                if self.p[alpha] == alpha:
                    for x in range(self.n_letters):
                        if self.table[alpha][x] is None:
                            self.define(alpha, x)
            alpha += 1
        self.compress()
        self.check_relators()
        logger.info("coset enumeration: %d cosets defined, %d live"
                    % (self.n_defined, self.n_cosets))
        return self

    def compress(self):
        """
        Drop dead cosets and renumber the live ones in breadth-first order
        from coset 0, visiting letters in code order. Afterwards coset ids
        follow the shortlex order of their least representatives.
        """
        live = [a for a in range(len(self.table)) if self.p[a] == a]
        order = [0]
        index = {0: 0}
        reps = [()]
        pos = 0
        while pos < len(order):
            alpha = order[pos]
            for x in range(self.n_letters):
                beta = self.table[alpha][x]
                if beta is None:
                    continue
                beta = self.rep(beta)
                if beta not in index:
                    index[beta] = len(order)
                    order.append(beta)
                    reps.append(reps[pos] + (x,))
            pos += 1
        if len(order) != len(live):
            raise InternalCheckError(
                "%d live cosets but %d reachable from coset 0"
                % (len(live), len(order)))
        self.table = [[index[self.rep(self.table[alpha][x])]
                       for x in range(self.n_letters)]
                      for alpha in order]
        self.p = list(range(len(self.table)))
        names = self.presentation.names
        self._reps = [Word.from_codes(codes, arena=names) for codes in reps]

    def check_relators(self):
        """
        Every relator (and subgroup generator, at coset 0) must act
        trivially; raises :class:`InternalCheckError` otherwise.
        """
        if not self.is_complete():
            raise InternalCheckError("coset table is not closed")
        for alpha in range(self.n_cosets):
            for word in self.relators:
                if self.act_codes(alpha, word) != alpha:
                    raise InternalCheckError(
                        "relator %s does not fix coset %d"
                        % (Word.from_codes(word), alpha))
        for word in self.subgroup_gens:
            if self.act_codes(0, word) != 0:
                raise InternalCheckError(
                    "subgroup generator %s moves coset 0"
                    % Word.from_codes(word))

    def act_codes(self, alpha, codes):
        table = self.table
        for x in codes:
            alpha = table[alpha][x]
        return alpha

    def act(self, coset, word):
        """
        Image of ``coset`` under ``word`` (right action).
        """
        table = self.table
        for index, sign in word.letters:
            coset = table[coset][2 * index + (0 if sign > 0 else 1)]
        return coset

    def representatives(self):
        """
        Shortlex-least word reaching each coset from coset 0.
        """
        return list(self._reps)

    def permutation(self, index):
        """
        Action of generator ``index`` as a list ``coset -> coset``.
        """
        return [row[2 * index] for row in self.table]

    def generator_images(self):
        return [self.table[0][2 * i]
                for i in range(self.presentation.rank)]

    def __repr__(self):
        lines = ["CosetTable(%d cosets)" % self.n_cosets]
        for alpha, row in enumerate(self.table):
            letters = ["%s:%d" % (_letter_label(x, self.presentation), y)
                       for x, y in enumerate(row)]
            lines.append("  %d  %s" % (alpha, " ".join(letters)))
        return "\n".join(lines)


def _letter_label(code, presentation):
    index, sign = code_letter(code)
    name = presentation.names[index]
    return name if sign > 0 else name + "^-1"


def coset_enumerate(presentation, subgroup_gens=(),
                    cap=DEFAULT_COSET_CAP):
    """
    Enumerate the cosets of ``<subgroup_gens>``. With no subgroup
    generators the result is the regular representation of the group.

    :raises CapOverflowError: when more than ``cap`` cosets are needed;
        this says nothing about whether the group is infinite
    """
    return CosetTable(presentation, subgroup_gens, max_cosets=cap) \
        .enumerate()
