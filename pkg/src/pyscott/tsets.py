#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Term sets. For a tuple ``b`` of group elements, ``T(b)`` is the set of
term tuples ``t`` for which some relator-satisfying tuple ``c`` has
``t(c) = b``. ``T^(a)`` is the complement of ``T(a)`` for the fixed
generating tuple ``a``; a term tuple is outside ``T(a)`` exactly when
``t(a)`` is not automorphic to ``a``.

All searches run over the finite space a :class:`pyscott.config.Budget`
describes:

* term tuples: the first ``step_cap`` tuples in enumeration order whose
  total length is at most ``term_length_cap``;
* witnesses: the generating tuple first, then every relator-satisfying
  tuple of normal forms no longer than ``element_length_cap``.

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""
from __future__ import print_function, division, absolute_import
from collections import namedtuple
from itertools import product
from . import logger
from .backends import satisfies_relators, iter_element_tuples
from .config import Budget
from .constant import IN_ORBIT, UNKNOWN
from .errors import ArityError, NoOrbitDeciderError, \
    ContradictoryCertificatesError
from .morphisms import SemiResult, Endomorphism, run_semi
from .orbit import orbit_decide, has_orbit_decider
from .presentation import TermTuple, TermCursor, Word, evaluate_terms, \
    iter_terms, term_position, term_cursor_at, count_term_tuples_upto
from .util import RunningDigest, jsonable

TSetEntry = namedtuple("TSetEntry", ["term", "witness", "position"])


class TSetCursor(object):
    """
    Resumable state of :func:`enumerate_T`.

    :param target: the tuple ``b`` whose term set is enumerated
    :param term_cursor: next term tuple to look at
    :param witness_index: witness to resume from for that term tuple
    :param digest: running digest of everything emitted so far
    """
    def __init__(self, target, term_cursor=None, witness_index=0,
                 digest=None):
        self.target = tuple(target)
        self.term_cursor = term_cursor or TermCursor(0, 0)
        self.witness_index = witness_index
        self.digest = digest if digest is not None else RunningDigest()

    @property
    def emitted(self):
        return self.digest.count

    def to_json(self):
        return {"target": [w.to_json() for w in self.target],
                "term_cursor": list(self.term_cursor),
                "witness_index": self.witness_index,
                "digest": self.digest.hexdigest(),
                "emitted": self.emitted}


def cursor_position(n, cursor):
    total, rank = cursor
    return count_term_tuples_upto(n, n, total - 1) + rank


def prefix_terms(n, budget, cursor=None):
    """
    The budget's term tuples, as ``(term, next_cursor)`` pairs.
    """
    start = 0 if cursor is None else cursor_position(n, cursor)
    remaining = budget.step_cap - start
    if remaining <= 0:
        return iter(())
    return iter_terms(n, n, cursor, limit=remaining,
                      max_total=budget.term_length_cap)


def in_prefix(term, budget):
    return term.total_length <= budget.term_length_cap and \
        term_position(term) < budget.step_cap


def prefix_max_length(n, budget):
    """
    Largest total length among the budget's term tuples, -1 if none.
    """
    if budget.step_cap == 0:
        return -1
    cursor = term_cursor_at(n, n, budget.step_cap - 1)
    total = cursor.total if cursor is not None else budget.term_length_cap
    return min(total, budget.term_length_cap)


def witness_tuples(backend, budget):
    """
    The generating tuple, then all relator-satisfying tuples of normal
    forms with components no longer than ``budget.element_length_cap``.
    """
    key = ("witnesses", budget.element_length_cap)
    if key in backend.cache:
        return backend.cache[key]
    gens = backend.generator_words()
    witnesses = [gens]
    for images in iter_element_tuples(backend, backend.rank,
                                      budget.element_length_cap):
        if images != gens and \
                satisfies_relators(backend.presentation, backend, images):
            witnesses.append(images)
    backend.cache[key] = witnesses
    return witnesses


def element_diameter(backend):
    """
    Length of the longest normal form of a finite backend.
    """
    if "diameter" not in backend.cache:
        backend.cache["diameter"] = max(len(w)
                                        for w in backend.iter_elements())
    return backend.cache["diameter"]


def _check_tuple(backend, words):
    words = tuple(words)
    if len(words) != backend.rank:
        raise ArityError("expected %d words, got %d"
                         % (backend.rank, len(words)))
    return tuple(backend.normal_form(w) for w in words)


def maps_onto(backend, term, witness, target):
    values = evaluate_terms(term, witness)
    return all(backend.equal(v, b) for v, b in zip(values, target))


def member_T_steps(term, b_bar, backend, budget):
    b_bar = _check_tuple(backend, b_bar)
    if term.arity_in != backend.rank or len(term) != len(b_bar):
        raise ArityError("term tuple %s does not fit %d generators"
                         % (term.format(), backend.rank))
    return _member_T_steps(term, b_bar, backend, budget)


def _member_T_steps(term, b_bar, backend, budget):
    for witness in witness_tuples(backend, budget):
        if maps_onto(backend, term, witness, b_bar):
            yield SemiResult(True, {"witness": witness})
            return
        yield None


def member_T_semi(term, b_bar, backend, budget):
    """
    Search for a relator-satisfying witness ``c`` with ``term(c) = b_bar``.

    :return: :class:`pyscott.morphisms.SemiResult`; the certificate holds
        the witness
    """
    return run_semi(member_T_steps(term, b_bar, backend, budget))


def member_T_decide(term, backend, a_bar=None):
    """
    ``term`` is in ``T(a)`` iff ``term(a)`` satisfies the relators and is
    automorphic to ``a``.

    :raises NoOrbitDeciderError: for backends without an orbit decider
    """
    if not has_orbit_decider(backend):
        raise NoOrbitDeciderError("%s has no orbit decider"
                                  % backend.describe())
    gens = backend.generator_words()
    if term.arity_in != len(gens) or len(term) != len(gens):
        raise ArityError("term tuple %s does not fit %d generators"
                         % (term.format(), len(gens)))
    cache = backend.cache.setdefault("T", {})
    key = term.key()
    if key not in cache:
        values = evaluate_terms(term, gens)
        verdict = orbit_decide(backend, a_bar, values)
        if verdict.decision == UNKNOWN:
            raise NoOrbitDeciderError("orbit decider of %s returned Unknown"
                                      % backend.describe())
        cache[key] = verdict.decision == IN_ORBIT
    return cache[key]


def enumerate_That(backend, budget, cursor=None):
    """
    Stream the budget's term tuples that lie outside ``T(a)``, in
    enumeration order.

    :return: generator of ``(term, position, next_cursor)``
    """
    if not has_orbit_decider(backend):
        raise NoOrbitDeciderError("%s has no orbit decider"
                                  % backend.describe())
    return _enumerate_That(backend, budget, cursor)


def _enumerate_That(backend, budget, cursor):
    n = backend.rank
    position = 0 if cursor is None else cursor_position(n, cursor)
    for term, nxt in prefix_terms(n, budget, cursor):
        if not member_T_decide(term, backend):
            yield term, position, nxt
        position += 1


def enumerate_T(backend, b_bar, budget, cursor=None):
    """
    Computably enumerate ``T(b_bar)`` within the budget: for each term
    tuple, look for a witness; emit the term tuple on the first hit.
    ``cursor`` is advanced in place, so a later call resumes.

    :return: generator of :class:`TSetEntry`
    """
    b_bar = _check_tuple(backend, b_bar)
    if cursor is None:
        cursor = TSetCursor(b_bar)
    return _enumerate_T(backend, b_bar, budget, cursor)


def _enumerate_T(backend, b_bar, budget, cursor):
    n = backend.rank
    witnesses = witness_tuples(backend, budget)
    for term, nxt in prefix_terms(n, budget, cursor.term_cursor):
        position = cursor_position(n, cursor.term_cursor)
        start = cursor.witness_index
        hit = None
        for index in range(start, len(witnesses)):
            if maps_onto(backend, term, witnesses[index], b_bar):
                hit = witnesses[index]
                break
        cursor.term_cursor = nxt
        cursor.witness_index = 0
        if hit is not None:
            cursor.digest.update(term.format())
            yield TSetEntry(term, hit, position)


class InclusionReport(object):
    """
    Outcome of :func:`inclusion_probe`: an endomorphism mapping ``b`` to
    ``c`` (so ``T(b)`` is inside ``T(c)``), a term tuple in ``T(b)`` but
    not in ``T(c)``, or neither within the budget.
    """
    def __init__(self, endo_found=None, counterexample=None, rounds=0):
        self.endo_found = endo_found
        self.counterexample = counterexample
        self.rounds = rounds

    @property
    def status(self):
        if self.endo_found is not None:
            return "endo_found"
        if self.counterexample is not None:
            return "counterexample"
        return "unknown"

    def to_json(self):
        return {"status": self.status, "rounds": self.rounds,
                "endo_found": jsonable(self.endo_found),
                "counterexample": jsonable(self.counterexample)}

    def __repr__(self):
        return "InclusionReport(%s)" % self.status


def _endo_steps(backend, b_bar, c_bar, budget):
    for images in witness_tuples(backend, budget):
        alpha = Endomorphism(backend.presentation, backend, images,
                             validated=True)
        if all(backend.equal(alpha.apply(b), c)
               for b, c in zip(b_bar, c_bar)):
            yield SemiResult(True, alpha)
            return
        yield None


def _separating_steps(backend, b_bar, c_bar, budget):
    if not backend.is_finite:
        return
    cap = element_diameter(backend)
    full = witness_tuples(backend, Budget(budget.term_length_cap, cap,
                                          budget.step_cap))
    for term, _ in prefix_terms(backend.rank, budget):
        yield None
        witness = None
        for c in full:
            if maps_onto(backend, term, c, b_bar):
                witness = c
                break
        if witness is None:
            continue
        if not any(maps_onto(backend, term, c, c_bar) for c in full):
            yield SemiResult(True, {"term": term, "witness": witness})
            return


def inclusion_probe(b_bar, c_bar, backend, budget):
    """
    Dovetail a search for an endomorphism taking ``b_bar`` to ``c_bar``
    against a search for a term tuple separating ``T(b_bar)`` from
    ``T(c_bar)``. The second search needs exhaustive witnesses, so it only
    runs on finite backends.
    """
    b_bar = _check_tuple(backend, b_bar)
    c_bar = _check_tuple(backend, c_bar)
    result = dovetail_decide(_endo_steps(backend, b_bar, c_bar, budget),
                             _separating_steps(backend, b_bar, c_bar,
                                               budget))
    if result.status == "yes":
        return InclusionReport(endo_found=result.result.certificate,
                               rounds=result.rounds)
    if result.status == "no":
        cert = result.result.certificate
        return InclusionReport(counterexample=(cert["term"],
                                               cert["witness"]),
                               rounds=result.rounds)
    return InclusionReport(rounds=result.rounds)


class DovetailResult(object):
    """
    :param status: ``yes``, ``no`` or ``exhausted``
    :param result: the landed :class:`pyscott.morphisms.SemiResult`
    :param rounds: number of scheduling rounds run
    """
    def __init__(self, status, result=None, rounds=0):
        self.status = status
        self.result = result
        self.rounds = rounds

    @property
    def decision(self):
        return {"yes": True, "no": False}.get(self.status)

    def to_json(self):
        return {"status": self.status, "rounds": self.rounds,
                "result": jsonable(self.result)}

    def __repr__(self):
        return "DovetailResult(%s, rounds=%d)" % (self.status, self.rounds)


def dovetail_decide(semi_yes, semi_no, schedule=(1, 1), max_rounds=None):
    """
    Round-robin two step generators. Each round advances ``semi_yes`` by
    ``schedule[0]`` steps, then ``semi_no`` by ``schedule[1]`` steps.

    :raises ContradictoryCertificatesError: if both land in the same round
    :return: :class:`DovetailResult`
    """
    gens = [iter(semi_yes), iter(semi_no)]
    alive = [True, True]
    steps = [0, 0]
    rounds = 0
    while any(alive):
        if max_rounds is not None and rounds >= max_rounds:
            break
        rounds += 1
        landed = [None, None]
        for side in (0, 1):
            for _ in range(schedule[side]):
                if not alive[side]:
                    break
                try:
                    item = next(gens[side])
                except StopIteration:
                    alive[side] = False
                    break
                if item is not None:
                    item.steps = steps[side]
                    landed[side] = item
                    alive[side] = False
                    break
                steps[side] += 1
        if landed[0] is not None and landed[1] is not None:
            raise ContradictoryCertificatesError(
                "both semi-procedures landed in round %d" % rounds,
                yes=landed[0], no=landed[1])
        if landed[0] is not None:
            logger.debug("dovetail: yes after %d rounds" % rounds)
            return DovetailResult("yes", landed[0], rounds)
        if landed[1] is not None:
            logger.debug("dovetail: no after %d rounds" % rounds)
            return DovetailResult("no", landed[1], rounds)
    return DovetailResult("exhausted", None, rounds)


def word_values(backend, witness, max_length):
    """
    Value of every reduced word of length at most ``max_length`` in
    ``len(witness)`` variables at ``witness``.

    :return: dict normal form -> list of words, each list in shortlex
        order
    """
    key = ("values", tuple(w.letters for w in witness))
    cached = backend.cache.get(key)
    if cached is not None and cached[0] >= max_length:
        if cached[0] == max_length:
            return cached[1]
        return dict((value, [w for w in words if len(w) <= max_length])
                    for value, words in cached[1].items())
    k = len(witness)
    steps = []
    for code in range(2 * k):
        word = witness[code >> 1]
        steps.append(backend.normal_form(word if code % 2 == 0 else ~word))
    identity = backend.normal_form(Word((), arena=backend.names))
    values = {identity: [Word(())]}
    level = [((), identity)]
    for _ in range(max_length):
        nxt = []
        for codes, value in level:
            for code in range(2 * k):
                if codes and code == codes[-1] ^ 1:
                    continue
                new = backend.multiply(value, steps[code])
                ext = codes + (code,)
                nxt.append((ext, new))
                values.setdefault(new, []).append(Word.from_codes(ext))
        level = nxt
    backend.cache[key] = (max_length, values)
    return values


def _candidates(backend, witness, b_bar, budget, max_length):
    """
    Term tuples in the budget mapping ``witness`` onto ``b_bar``, in
    enumeration order.
    """
    n = backend.rank
    values = word_values(backend, witness, max_length)
    choices = [values.get(b, []) for b in b_bar]
    size = 1
    for choice in choices:
        size *= len(choice)
    if size == 0:
        return []
    if size > budget.step_cap:
        return [term for term, _ in prefix_terms(n, budget)
                if maps_onto(backend, term, witness, b_bar)]
    found = []
    for comps in product(*choices):
        if sum(len(c) for c in comps) > budget.term_length_cap:
            continue
        term = TermTuple(n, comps)
        position = term_position(term)
        if position < budget.step_cap:
            found.append((position, term))
    found.sort(key=lambda item: item[0])
    return [term for _, term in found]


def hat_witness_steps(backend, b_bar, budget, conjuncts=None):
    """
    Step generator behind the orbit semi-decider for non-membership and
    the evaluation of orbit formula prefixes.

    Lands on a violated relator of ``b_bar``, or on the first witness (in
    witness order) and the least term tuple (in enumeration order) with
    ``term(witness) = b_bar`` and ``term`` outside ``T(a)``. With
    ``conjuncts`` (a dict ``term key -> conjunct index``) the term tuple
    must be one of those conjuncts instead.
    """
    b_bar = _check_tuple(backend, b_bar)
    if conjuncts is None and not has_orbit_decider(backend):
        raise NoOrbitDeciderError("%s has no orbit decider"
                                  % backend.describe())
    return _hat_witness_steps(backend, b_bar, budget, conjuncts)


def _hat_witness_steps(backend, b_bar, budget, conjuncts):
    for relator in backend.presentation.relators:
        if not backend.is_identity(relator.substitute(b_bar,
                                                      arena=backend.names)):
            yield SemiResult(True, {"kind": "relator", "relator": relator})
            return
    max_length = prefix_max_length(backend.rank, budget)
    if max_length < 0:
        return
    for witness in witness_tuples(backend, budget):
        yield None
        for term in _candidates(backend, witness, b_bar, budget, max_length):
            if conjuncts is not None:
                index = conjuncts.get(term.key())
                if index is None:
                    continue
            elif member_T_decide(term, backend):
                continue
            else:
                index = None
            yield SemiResult(True, {"kind": "conjunct", "term": term,
                                    "witness": witness, "index": index,
                                    "position": term_position(term)})
            return


def hat_witness_search(backend, b_bar, budget, conjuncts=None):
    return run_semi(hat_witness_steps(backend, b_bar, budget, conjuncts))
