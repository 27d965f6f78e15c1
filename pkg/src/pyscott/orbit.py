#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Orbit deciders: is a tuple the image of the fixed generating tuple under
an automorphism?

Every backend kind with a decider answers exactly and attaches a
certificate that :func:`verify_verdict` re-checks without the decider:

* InOrbit: the automorphism ``alpha`` (generators to the tuple), its
  inverse ``beta`` and the terms expressing the generators in the tuple;
* NotInOrbit: a violated relator, a determinant, a stuck Nielsen tuple,
  a dihedral normal form or the exhausted automorphism list.

The two semi-deciders search for expressing terms (landing proves orbit
membership in a Hopfian group) and for a falsified orbit formula
conjunct (landing proves non-membership).

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""
from __future__ import print_function, division, absolute_import
from . import logger
from .backends import satisfies_relators, iter_element_tuples
from .constant import IN_ORBIT, NOT_IN_ORBIT, UNKNOWN
from .errors import ArityError, InternalCheckError, NotAHomomorphismError
from .intmatrix import IntMatrix, hnf_and_det
from .morphisms import endo_from_tuple, compose, run_semi, express_steps
from .nielsen import nielsen_reduce, stallings_generates, replay
from .presentation import TermTuple, Word, evaluate_terms
from .util import jsonable


class OrbitVerdict(object):
    """
    :param decision: ``InOrbit``, ``NotInOrbit`` or ``Unknown``
    :param method: which decider produced it
    :param certificate: dict of re-checkable evidence
    """
    def __init__(self, decision, method, certificate=None):
        self.decision = decision
        self.method = method
        self.certificate = certificate or {}

    @property
    def in_orbit(self):
        return self.decision == IN_ORBIT

    def summary(self):
        cert = self.certificate
        if "det" in cert and self.method == "hnf":
            return "det=%d" % cert["det"]
        if "relator" in cert:
            return "relator %s fails" % cert["relator"].format()
        if self.decision == NOT_IN_ORBIT and "stuck" in cert:
            return "stuck at (%s)" % ", ".join(
                w.format() for w in cert["stuck"])
        if "pairs" in cert and self.decision == NOT_IN_ORBIT:
            return "normal form (%s)" % ", ".join(
                w.format() for w in cert["normal_forms"])
        if "automorphisms" in cert:
            return "|Aut|=%d" % cert["automorphisms"]
        return ""

    def format(self):
        summary = self.summary()
        return self.decision + (" " + summary if summary else "")

    def to_json(self):
        return {"decision": self.decision, "method": self.method,
                "certificate": jsonable(self.certificate)}

    def __repr__(self):
        return "OrbitVerdict(%s, method=%s)" % (self.format(), self.method)


def exponent_matrix(backend, words):
    """
    Rows are the exponent-sum vectors of ``words``.
    """
    return IntMatrix([w.exponent_vector(backend.rank) for w in words])


def automorphism_certificate(backend, b_bar, terms):
    """
    Build and check ``alpha: a -> b`` and ``beta: a -> terms(a)``; both
    compositions must be the identity.
    """
    p = backend.presentation
    alpha = endo_from_tuple(p, backend, b_bar)
    beta = endo_from_tuple(p, backend,
                           evaluate_terms(terms, backend.generator_words()))
    if not (compose(alpha, beta).is_identity_map() and
            compose(beta, alpha).is_identity_map()):
        raise InternalCheckError(
            "terms %s do not invert %s" % (terms.format(), alpha.format()))
    return {"alpha": alpha, "beta": beta, "terms": terms}


def is_basis_free(backend, words):
    """
    Orbit decider for free groups: a tuple is automorphic to the standard
    basis iff it is a basis, iff Nielsen reduction ends at the basis.
    """
    n = backend.rank
    if len(words) != n:
        raise ArityError("expected %d words, got %d" % (n, len(words)))
    words = tuple(backend.normal_form(w) for w in words)
    reduced, log = nielsen_reduce(
        words, generates=lambda ws: stallings_generates(ws, n))
    if reduced == backend.generator_words():
        ident = TermTuple.identity(n)
        terms = TermTuple(n, replay(ident.components, log))
        cert = automorphism_certificate(backend, words, terms)
        cert["log"] = log
        return OrbitVerdict(IN_ORBIT, "nielsen", cert)
    det = hnf_and_det(exponent_matrix(backend, words))[1]
    return OrbitVerdict(NOT_IN_ORBIT, "nielsen",
                        {"stuck": reduced, "log": log, "det": det})


def abelian_orbit_decide(backend, words):
    """
    Orbit decider for free abelian groups: InOrbit iff the exponent
    matrix is unimodular.
    """
    matrix = exponent_matrix(backend, words)
    hnf, det = hnf_and_det(matrix)
    if abs(det) != 1:
        return OrbitVerdict(NOT_IN_ORBIT, "hnf", {"det": det, "hnf": hnf})
    inv = matrix.inverse()
    n = backend.rank
    comps = []
    for row in inv.tolist():
        letters = []
        for j, e in enumerate(row):
            letters.extend([(j, 1 if e > 0 else -1)] * abs(e))
        comps.append(Word(letters))
    cert = automorphism_certificate(backend, words, TermTuple(n, comps))
    cert["det"] = det
    cert["hnf"] = hnf
    return OrbitVerdict(IN_ORBIT, "hnf", cert)


def dihedral_orbit_decide(backend, pair):
    """
    Orbit decider for ``< r, s | s^2, srsr >``: InOrbit iff the pair
    normalises to ``(r^e, r^k s)`` with ``e = +-1``. The inverse
    automorphism is ``r -> r^e, s -> r^(-e k) s``.
    """
    if len(pair) != 2:
        raise ArityError("expected a pair, got %d words" % len(pair))
    (k1, e1), (k2, e2) = [backend.pair(w) for w in pair]
    normal_forms = [backend.normal_form(w) for w in pair]
    if e1 == 0 and abs(k1) == 1 and e2 == 1:
        eps = k1
        terms = TermTuple(2, [Word([(0, eps)]),
                              Word([(0, -1 if eps * k2 > 0 else 1)] *
                                   abs(k2) + [(1, 1)])])
        cert = automorphism_certificate(backend, normal_forms, terms)
        cert["pairs"] = [[k1, e1], [k2, e2]]
        return OrbitVerdict(IN_ORBIT, "dihedral", cert)
    return OrbitVerdict(NOT_IN_ORBIT, "dihedral",
                        {"pairs": [[k1, e1], [k2, e2]],
                         "normal_forms": normal_forms})


def generated_terms(backend, words):
    """
    Breadth-first closure of ``<words>`` in a finite group; maps each
    reached normal form to the shortlex-first term in the words reaching
    it.
    """
    k = len(words)
    found = {backend.normal_form(Word((), arena=backend.names)): Word(())}
    frontier = list(found.items())
    while frontier:
        nxt = []
        for element, term in frontier:
            for code in range(2 * k):
                j, sign = code >> 1, (1 if code % 2 == 0 else -1)
                step = words[j] if sign > 0 else ~words[j]
                value = backend.multiply(element, step)
                if value not in found:
                    found[value] = term * Word([(j, sign)])
                    nxt.append((value, found[value]))
        frontier = nxt
    return found


def finite_automorphisms(backend):
    """
    Every automorphism of a finite backend, as the tuple of generator
    images. Computed once per backend.
    """
    if "automorphisms" in backend.cache:
        return backend.cache["automorphisms"]
    order = backend.order()
    cap = max(len(w) for w in backend.iter_elements())
    auts = []
    for images in iter_element_tuples(backend, backend.rank, cap):
        if not satisfies_relators(backend.presentation, backend, images):
            continue
        if len(generated_terms(backend, images)) == order:
            auts.append(images)
    logger.info("%s has %d automorphisms" % (backend.describe(), len(auts)))
    backend.cache["automorphisms"] = auts
    return auts


def finite_orbit_decide(backend, words):
    words = tuple(backend.normal_form(w) for w in words)
    auts = finite_automorphisms(backend)
    if words not in set(auts):
        return OrbitVerdict(NOT_IN_ORBIT, "finite",
                            {"automorphisms": len(auts)})
    closure = generated_terms(backend, words)
    comps = [closure[g] for g in backend.generator_words()]
    cert = automorphism_certificate(backend, words,
                                    TermTuple(len(words), comps))
    cert["automorphisms"] = len(auts)
    return OrbitVerdict(IN_ORBIT, "finite", cert)


_BUILTIN_DECIDERS = {
    "nielsen": is_basis_free,
    "hnf": abelian_orbit_decide,
    "dihedral": dihedral_orbit_decide,
    "finite": finite_orbit_decide,
}


def register_orbit_decider(backend, fn):
    """
    Attach ``fn(backend, words) -> OrbitVerdict`` as the orbit decider of
    a backend without a built-in one.
    """
    backend.capabilities.orbit_decider = fn
    backend.cache.pop("orbit", None)


def has_orbit_decider(backend):
    return backend.capabilities.orbit_decider is not None


def _check_fixed_tuple(backend, a_bar):
    if a_bar is None:
        return
    gens = backend.generator_words()
    if len(a_bar) != len(gens) or not all(
            backend.equal(a, g) for a, g in zip(a_bar, gens)):
        raise ValueError("orbit deciders work relative to the generating "
                         "tuple %s" % (gens,))


def orbit_decide(backend, a_bar, b_bar):
    """
    Decide whether ``b_bar`` is automorphic to the fixed generating tuple
    ``a_bar`` (None means the backend's generators).

    :return: :class:`OrbitVerdict`; Unknown only for backends without a
        decider
    """
    _check_fixed_tuple(backend, a_bar)
    b_bar = tuple(b_bar)
    if len(b_bar) != backend.rank:
        raise ArityError("expected %d words, got %d"
                         % (backend.rank, len(b_bar)))
    decider = backend.capabilities.orbit_decider
    if decider is None:
        return OrbitVerdict(UNKNOWN, "none")
    b_bar = tuple(backend.normal_form(w) for w in b_bar)
    cache = backend.cache.setdefault("orbit", {})
    key = tuple(w.letters for w in b_bar)
    if key in cache:
        return cache[key]
    for relator in backend.presentation.relators:
        if not backend.is_identity(relator.substitute(b_bar,
                                                      arena=backend.names)):
            verdict = OrbitVerdict(NOT_IN_ORBIT, "relator",
                                   {"relator": relator})
            break
    else:
        if isinstance(decider, str):
            verdict = _BUILTIN_DECIDERS[decider](backend, b_bar)
        else:
            verdict = decider(backend, b_bar)
    cache[key] = verdict
    return verdict


def _terms_certificate_holds(backend, b_bar, cert):
    if "terms" not in cert:
        return False
    try:
        rebuilt = automorphism_certificate(backend, b_bar, cert["terms"])
    except (InternalCheckError, NotAHomomorphismError):
        return False
    if "alpha" in cert and cert["alpha"].images != rebuilt["alpha"].images:
        return False
    values = evaluate_terms(cert["terms"], b_bar)
    return all(backend.equal(v, g) for v, g in
               zip(values, backend.generator_words()))


def verify_verdict(backend, b_bar, verdict):
    """
    Re-check a verdict's certificate without running the decider again.
    Plug-in verdicts get the same generic checks: InOrbit needs
    expressing terms, NotInOrbit a violated relator. A verdict without
    such a certificate is rejected.
    """
    b_bar = tuple(backend.normal_form(w) for w in b_bar)
    cert = verdict.certificate
    if verdict.decision == IN_ORBIT:
        return _terms_certificate_holds(backend, b_bar, cert)
    if verdict.decision != NOT_IN_ORBIT:
        return verdict.decision == UNKNOWN
    if "relator" in cert:
        return not backend.is_identity(
            cert["relator"].substitute(b_bar, arena=backend.names))
    if verdict.method == "hnf":
        return abs(exponent_matrix(backend, b_bar).det_bareiss()) != 1
    if verdict.method == "nielsen":
        if replay(b_bar, cert["log"]) != tuple(cert["stuck"]):
            return False
        return not stallings_generates(b_bar, backend.rank)
    if verdict.method == "dihedral":
        (k1, e1), (k2, e2) = [backend.pair(w) for w in b_bar]
        return not (e1 == 0 and abs(k1) == 1 and e2 == 1)
    if verdict.method == "finite":
        return len(generated_terms(backend, b_bar)) < backend.order()
    return False


def orbit_semi_yes_steps(backend, a_bar, b_bar, budget):
    _check_fixed_tuple(backend, a_bar)
    b_bar = tuple(backend.normal_form(w) for w in b_bar)
    if not satisfies_relators(backend.presentation, backend, b_bar):
        return
    yield None
    for item in express_steps(backend, backend.generator_words(), b_bar,
                              budget):
        if item is not None and not backend.capabilities.hopfian_certified:
            item.detail = "conditional on Hopfianity"
        yield item


def orbit_semi_yes(presentation, backend, a_bar, b_bar, budget):
    """
    Search for terms ``t`` with ``a_i = t_i(b_bar)``. In a Hopfian group a
    relator-satisfying tuple that expresses the generators is automorphic
    to them.

    :return: :class:`SemiResult` with a :class:`TermTuple` certificate
    """
    if presentation != backend.presentation:
        raise ValueError("presentation does not match the backend")
    return run_semi(orbit_semi_yes_steps(backend, a_bar, b_bar, budget))


def orbit_semi_no_steps(backend, a_bar, b_bar, budget):
    from .tsets import hat_witness_steps
    _check_fixed_tuple(backend, a_bar)
    return hat_witness_steps(backend, b_bar, budget)


def orbit_semi_no(presentation, backend, a_bar, b_bar, budget):
    """
    Search for a falsified conjunct of the orbit formula at ``b_bar``:
    a violated relator, or a term tuple outside ``T(a_bar)`` together with
    a relator-satisfying witness it maps onto ``b_bar``.

    :raises NoOrbitDeciderError: when the backend has no orbit decider
    """
    if presentation != backend.presentation:
        raise ValueError("presentation does not match the backend")
    return run_semi(orbit_semi_no_steps(backend, a_bar, b_bar, budget))


def orbit_dovetail(backend, b_bar, budget, max_rounds=None):
    """
    Combine both semi-deciders fairly.
    """
    from .tsets import dovetail_decide
    return dovetail_decide(
        orbit_semi_yes_steps(backend, None, b_bar, budget),
        orbit_semi_no_steps(backend, None, b_bar, budget),
        max_rounds=max_rounds)


def semi_certificate_holds(backend, b_bar, result):
    """
    Independent check of a landed semi-decider certificate.
    """
    if not result.landed:
        return False
    cert = result.certificate
    if isinstance(cert, TermTuple):
        values = evaluate_terms(cert, b_bar)
        return all(backend.equal(v, g) for v, g in
                   zip(values, backend.generator_words()))
    if "relator" in cert:
        return not backend.is_identity(
            cert["relator"].substitute(tuple(b_bar), arena=backend.names))
    values = evaluate_terms(cert["term"], cert["witness"])
    return satisfies_relators(backend.presentation, backend,
                              cert["witness"]) and \
        all(backend.equal(v, b) for v, b in zip(values, b_bar))
