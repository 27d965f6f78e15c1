#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Nielsen reduction of tuples in a free group, and Stallings folding as an
independent check of whether a tuple generates the whole free group.

A Nielsen move is one of

* ``("mul", i, j, side, sign)``: replace ``w_i`` by ``w_i * w_j^sign``
  (side 0) or ``w_j^sign * w_i`` (side 1);
* ``("inv", i)``: replace ``w_i`` by its inverse;
* ``("swap", i, j)``: exchange ``w_i`` and ``w_j``.

Moves act on anything with ``*``, ``~`` and ``**``; replaying a log on
the identity term tuple gives terms expressing the final tuple in the
first one.

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""
from __future__ import print_function, division, absolute_import
from collections import deque
from . import logger
from .errors import InternalCheckError


def apply_move(words, move):
    words = list(words)
    if move[0] == "mul":
        _, i, j, side, sign = move
        factor = words[j] if sign > 0 else ~words[j]
        words[i] = words[i] * factor if side == 0 else factor * words[i]
    elif move[0] == "inv":
        words[move[1]] = ~words[move[1]]
    elif move[0] == "swap":
        _, i, j = move
        words[i], words[j] = words[j], words[i]
    else:
        raise ValueError("unknown Nielsen move %r" % (move,))
    return tuple(words)


def replay(words, log):
    for move in log:
        words = apply_move(words, move)
    return words


def _mul_moves(n):
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for side in (0, 1):
                for sign in (1, -1):
                    yield ("mul", i, j, side, sign)


def _greedy(words, log):
    n = len(words)
    while True:
        for move in _mul_moves(n):
            _, i, j, side, sign = move
            if not words[j].letters:
                continue
            candidate = apply_move(words, move)
            if len(candidate[i]) < len(words[i]):
                logger.debug("Nielsen move %s: %s -> %s"
                             % (move, words[i], candidate[i]))
                words = candidate
                log.append(move)
                break
        else:
            return words


def _total(words):
    return sum(len(w) for w in words)


def _fallback(words):
    """
    Breadth-first search over moves that never increase the total length,
    until a strictly shorter tuple shows up. Only finitely many tuples
    share a total length, so the search ends.
    """
    start = tuple(w.letters for w in words)
    bound = _total(words)
    seen = {start: None}
    queue = deque([(words, [])])
    while queue:
        current, path = queue.popleft()
        for move in _mul_moves(len(current)):
            candidate = apply_move(current, move)
            total = _total(candidate)
            if total > bound:
                continue
            if total < bound:
                return candidate, path + [move]
            key = tuple(w.letters for w in candidate)
            if key in seen:
                continue
            seen[key] = None
            queue.append((candidate, path + [move]))
    return None, None


def is_signed_permutation(words):
    indices = []
    for word in words:
        if len(word) != 1:
            return False
        indices.append(word.letters[0][0])
    return sorted(indices) == list(range(len(words)))


def _normalize(words, log):
    for i, word in enumerate(words):
        if word.letters[0][1] < 0:
            words = apply_move(words, ("inv", i))
            log.append(("inv", i))
    for i in range(len(words)):
        j = [w.letters[0][0] for w in words].index(i)
        if j != i:
            words = apply_move(words, ("swap", i, j))
            log.append(("swap", i, j))
    return words


def nielsen_reduce(words, generates=None):
    """
    Apply length-reducing Nielsen moves until none is left. Among the
    available moves the lexicographically least ``(i, j, side, sign)`` is
    taken, with side right before left and sign ``+1`` before ``-1``.

    If the result is a signed permutation of the generators it is
    normalised to the generators themselves with ``inv``/``swap`` moves.

    :param words: tuple of free group words
    :param generates: optional callable ``words -> bool``; when the greedy
        phase gets stuck and it reports True, a search over non-increasing
        moves continues the reduction
    :return: ``(reduced tuple, log)``
    """
    words = tuple(words)
    log = []
    while True:
        words = _greedy(words, log)
        if is_signed_permutation(words) or generates is None or \
                not generates(words):
            break
        shorter, path = _fallback(words)
        if shorter is None:
            raise InternalCheckError(
                "tuple %s generates but Nielsen reduction is stuck"
                % (words,))
        logger.debug("Nielsen fallback: %d non-increasing moves"
                     % len(path))
        log.extend(path)
        words = shorter
    if is_signed_permutation(words):
        words = _normalize(words, log)
    return words, log


def stallings_generates(words, rank):
    """
    Fold the bouquet of loops spelling ``words`` at a base vertex. The
    subgroup they generate is the whole free group of ``rank`` iff every
    generator labels a loop at the base vertex of the folded graph.
    """
    parent = [0]
    edges = [{}]
    pending = []

    def find(v):
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    def new_vertex():
        parent.append(len(parent))
        edges.append({})
        return len(parent) - 1

    def merge(a, b):
        a, b = find(a), find(b)
        if a == b:
            return
        if b < a:
            a, b = b, a
        parent[b] = a
        moved, edges[b] = edges[b], {}
        for code, target in moved.items():
            pending.append((a, code, target))

    for word in words:
        codes = word.codes()
        v = 0
        for pos, code in enumerate(codes):
            u = 0 if pos == len(codes) - 1 else new_vertex()
            pending.append((v, code, u))
            pending.append((u, code ^ 1, v))
            v = u

    while pending:
        u, code, v = pending.pop()
        u, v = find(u), find(v)
        target = edges[u].get(code)
        if target is None:
            edges[u][code] = v
        elif find(target) != v:
            merge(target, v)

    base = find(0)
    for index in range(rank):
        target = edges[base].get(2 * index)
        if target is None or find(target) != base:
            return False
    return True
