#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Brute-force oracles and the acceptance suite.

Everything here is deliberately naive: term sets of finite groups are
computed by evaluating every term tuple at every relator-satisfying
tuple, automorphisms by checking bijectivity on the whole group, and the
deciders are compared against these tables.

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""
from __future__ import print_function, division, absolute_import
import os
from . import logger
from .backends import FreeGroupBackend, FreeAbelianBackend, \
    InfiniteDihedralBackend, FiniteCosetTableBackend, iter_element_tuples, \
    satisfies_relators
from .config import Budget
from .constant import DEFAULT_SEED, IN_ORBIT, NOT_IN_ORBIT
from .errors import ContradictoryCertificatesError, InternalCheckError
from .etypes import strongly_defined_probe
from .formula import D_SIGMA, PI, classify
from .intmatrix import IntMatrix, hnf_and_det
from .morphisms import Endomorphism, run_semi
from .orbit import orbit_decide, verify_verdict, exponent_matrix, \
    orbit_semi_yes_steps, orbit_semi_no_steps, orbit_dovetail, \
    semi_certificate_holds
from .presentation import evaluate_terms, iter_terms, \
    parse_presentation, cyclic_presentation, count_term_tuples_upto
from .scott import build_theta_prefix, emit_scott_sentence, \
    evaluate_bounded, theta_document, sentence_document
from .tsets import hat_witness_search, member_T_decide, element_diameter
from .util import make_rng, random_select

SYMMETRIC_3 = "< a, b | a^3, b^2, a*b*a*b >"
GOLDEN_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                          "tests", "data", "golden")
GOLDEN_LEVEL = 64


class OracleResult(object):

    def __init__(self, name, passed, checked, detail=""):
        self.name = name
        self.passed = passed
        self.checked = checked
        self.detail = detail

    def to_json(self):
        return {"name": self.name, "passed": self.passed,
                "checked": self.checked, "detail": self.detail}

    def __repr__(self):
        return "OracleResult(%s: %s, %d cases)" % (
            self.name, "PASS" if self.passed else "FAIL", self.checked)


def symmetric_group_backend():
    return FiniteCosetTableBackend(parse_presentation(SYMMETRIC_3))


def cyclic_group_backend(order=6):
    return FiniteCosetTableBackend(cyclic_presentation(order))


def all_tuples(backend):
    return list(iter_element_tuples(backend, backend.rank,
                                    element_diameter(backend)))


def homomorphism_tuples(backend):
    return [c for c in all_tuples(backend)
            if satisfies_relators(backend.presentation, backend, c)]


def brute_T_sets(backend, max_total):
    """
    ``T(b)`` restricted to term tuples of total length at most
    ``max_total``, for every tuple ``b`` of a finite backend.

    :return: dict from tuple of normal forms to a set of term keys
    """
    n = backend.rank
    terms = [t for t, _ in iter_terms(n, n, max_total=max_total)]
    table = dict((b, set()) for b in all_tuples(backend))
    for c in homomorphism_tuples(backend):
        for t in terms:
            b = tuple(backend.normal_form(w) for w in evaluate_terms(t, c))
            table[b].add(t.key())
    return table


def _endomorphisms(backend):
    return [Endomorphism(backend.presentation, backend, c, validated=True)
            for c in homomorphism_tuples(backend)]


def brute_automorphisms(backend):
    """
    Endomorphisms that are bijective on the whole (finite) group.
    """
    elements = list(backend.iter_elements())
    found = []
    for e in _endomorphisms(backend):
        if len(set(e.apply(w) for w in elements)) == len(elements):
            found.append(e)
    return found


def _apply_tuple(e, words):
    return tuple(e.apply(w) for w in words)


def finite_brute_force_check(backend, name):
    """
    On a finite backend, compare brute-force term sets with endomorphism
    and automorphism searches, and the orbit formula with the brute-force
    orbit.
    """
    n = backend.rank
    max_total = n * element_diameter(backend)
    table = brute_T_sets(backend, max_total)
    endos = _endomorphisms(backend)
    auts = brute_automorphisms(backend)
    gens = backend.generator_words()
    orbit = set(_apply_tuple(a, gens) for a in auts)
    tuples = sorted(table, key=lambda b: [w.shortlex_key() for w in b])
    failures = []
    checked = 0

    # inclusion of term sets iff some endomorphism maps b onto c
    images = dict((b, set(_apply_tuple(e, b) for e in endos))
                  for b in tuples)
    for b in tuples:
        for c in tuples:
            checked += 1
            if (table[b] <= table[c]) != (c in images[b]):
                failures.append("inclusion %s %s" % (b, c))

    # equal term sets iff automorphic
    for b in tuples:
        checked += 1
        if (table[b] == table[gens]) != (b in orbit):
            failures.append("equality %s" % (b,))

    # T(a) is exactly the term tuples inducing automorphisms
    for t, _ in iter_terms(n, n, max_total=max_total):
        checked += 1
        values = tuple(backend.normal_form(w)
                       for w in evaluate_terms(t, gens))
        brute = values in orbit
        if (t.key() in table[gens]) != brute or \
                member_T_decide(t, backend) != brute:
            failures.append("term set %s" % t.format())

    # the orbit formula holds exactly on the orbit
    budget = Budget(max_total, element_diameter(backend),
                    count_term_tuples_upto(n, n, max_total))
    theta = build_theta_prefix(backend.presentation, backend, budget)
    for b in tuples:
        checked += 1
        result = evaluate_bounded(theta, b, backend, budget)
        if not (result.holds or result.falsified) or \
                result.holds != (b in orbit):
            failures.append("orbit formula %s" % (b,))

    return OracleResult("finite brute force %s" % name, not failures, checked,
                        "; ".join(failures[:3]))


def free_corpus(max_total):
    backend = FreeGroupBackend(2)
    corpus = []
    for pair in iter_element_tuples(backend, 2, max_total):
        if sum(len(w) for w in pair) > max_total:
            break
        corpus.append(pair)
    return backend, corpus


def free_group_check(max_total=5, semi_level=2 ** 12):
    """
    Nielsen decider against the determinant necessity condition, the
    expressing-terms semi-decider and certificate replay.
    """
    backend, corpus = free_corpus(max_total)
    budget = Budget.from_level(semi_level)
    failures = []
    in_orbit = 0
    for pair in corpus:
        verdict = orbit_decide(backend, None, pair)
        if not verify_verdict(backend, pair, verdict):
            failures.append("certificate %s" % (pair,))
        det = hnf_and_det(exponent_matrix(backend, pair))[1]
        if verdict.in_orbit:
            in_orbit += 1
            if abs(det) != 1:
                failures.append("determinant %s" % (pair,))
            result = run_semi(orbit_semi_yes_steps(backend, None, pair,
                                                   budget))
            if not result.landed or \
                    not semi_certificate_holds(backend, pair, result):
                failures.append("semi-yes %s" % (pair,))
    return OracleResult("free group decider", not failures, len(corpus),
                        "%d in orbit; %s" % (in_orbit,
                                             "; ".join(failures[:3])))


def random_unimodular(rng, n, max_factors=10, max_factor=3):
    m = IntMatrix.identity(n)
    if n == 1:
        return IntMatrix([[-1 if rng.randint(2) else 1]])
    for _ in range(rng.randint(max_factors + 1)):
        i, j = random_select(rng, n, 2, replace=False)
        factor = int(rng.randint(-max_factor, max_factor + 1))
        m = m @ IntMatrix.elementary(n, i, j, factor)
    return m


def random_non_unimodular(rng, n, max_entry=3):
    while True:
        m = IntMatrix(rng.randint(-max_entry, max_entry + 1,
                                  size=(n, n)).tolist())
        if abs(m.det_bareiss()) != 1:
            return m


def abelian_check(samples=1000, seed=DEFAULT_SEED, max_rank=4):
    """
    Random unimodular matrices are InOrbit, random others NotInOrbit, and
    the two determinant computations never disagree.
    """
    rng = make_rng(seed)
    failures = []
    checked = 0
    backends = dict((n, FreeAbelianBackend(n))
                    for n in range(1, max_rank + 1))
    for index in range(2 * samples):
        n = int(rng.randint(1, max_rank + 1))
        backend = backends[n]
        if index < samples:
            matrix, expected = random_unimodular(rng, n), IN_ORBIT
        else:
            matrix, expected = random_non_unimodular(rng, n), NOT_IN_ORBIT
        words = [backend.word_of_vector(row) for row in matrix.tolist()]
        checked += 1
        try:
            verdict = orbit_decide(backend, None, words)
        except InternalCheckError as err:
            failures.append(str(err))
            continue
        if verdict.decision != expected or \
                not verify_verdict(backend, words, verdict):
            failures.append(matrix.format())
    return OracleResult("free abelian decider", not failures, checked,
                        "; ".join(failures[:3]))


def dihedral_corpus(max_length):
    backend = InfiniteDihedralBackend()
    words = []
    seen = set()
    free = FreeGroupBackend(2, backend.names)
    for word in free.iter_elements(max_length):
        nf = backend.normal_form(word)
        if nf not in seen:
            seen.add(nf)
            words.append(nf)
    corpus = [(u, v) for u in words for v in words]
    return backend, corpus


def dihedral_check(max_length=4, max_shift=8):
    """
    Closed form against a search over ``r -> r^e, s -> r^k s`` with
    ``|k| <= max_shift``.
    """
    backend, corpus = dihedral_corpus(max_length)
    r, s = backend.generator_words()
    orbit = set()
    for eps in (1, -1):
        for k in range(-max_shift, max_shift + 1):
            orbit.add((backend.normal_form(r ** eps),
                       backend.normal_form(r ** k * s)))
    failures = []
    for pair in corpus:
        verdict = orbit_decide(backend, None, pair)
        if verdict.in_orbit != (pair in orbit) or \
                not verify_verdict(backend, pair, verdict):
            failures.append("%s" % (pair,))
    return OracleResult("infinite dihedral decider", not failures,
                        len(corpus), "; ".join(failures[:3]))


def matrix_corpus(samples, seed=DEFAULT_SEED, rank=2):
    """
    Rows of random elementary products and of random |det| != 1 matrices
    as tuples over Z^rank. Factors and entries stay at +-1 so the
    expressing terms fit a 2^12 budget.
    """
    rng = make_rng(seed)
    backend = FreeAbelianBackend(rank)
    corpus = []
    for index in range(2 * samples):
        if index < samples:
            matrix = random_unimodular(rng, rank, max_factors=2,
                                       max_factor=1)
        else:
            matrix = random_non_unimodular(rng, rank, max_entry=1)
        corpus.append(tuple(backend.word_of_vector(row)
                            for row in matrix.tolist()))
    return backend, corpus


def semi_corpus(quick=False, seed=DEFAULT_SEED, samples=25):
    """
    Tuple corpora over Z, F2, Z^2 and the infinite dihedral group: the
    free, matrix and dihedral corpora of the decider checks, or small
    exhaustive ones with ``quick``.
    """
    corpus = []
    z = FreeGroupBackend(1)
    for word in z.iter_elements(3 if quick else 6):
        corpus.append((z, (word,)))
    free, pairs = free_corpus(2 if quick else 5)
    corpus.extend((free, pair) for pair in pairs)
    if quick:
        abelian = FreeAbelianBackend(2)
        pairs = list(iter_element_tuples(abelian, 2, 1))
    else:
        abelian, pairs = matrix_corpus(samples, seed)
    corpus.extend((abelian, pair) for pair in pairs)
    dihedral, pairs = dihedral_corpus(1 if quick else 4)
    corpus.extend((dihedral, pair) for pair in pairs)
    return corpus


def doubling_dovetail(backend, b_bar, max_level, level=16):
    """
    Dovetail at levels 16, 32, ... until a side lands or ``max_level``
    is exhausted.
    """
    while True:
        decision = orbit_dovetail(backend, b_bar, Budget.from_level(level))
        if decision.decision is not None or level >= max_level:
            return decision
        level *= 2


def semi_decider_check(quick=False, level=2 ** 12, small_level=64,
                       seed=DEFAULT_SEED):
    """
    Exactly one semi-decider lands, in agreement with the decider, and
    the dovetail reproduces the decision.
    """
    if quick:
        level = 2 ** 8
    small = Budget.from_level(small_level)
    failures = []
    corpus = semi_corpus(quick, seed)
    for backend, b_bar in corpus:
        verdict = orbit_decide(backend, None, b_bar)
        try:
            decision = doubling_dovetail(backend, b_bar, level)
        except ContradictoryCertificatesError as err:
            failures.append(str(err))
            continue
        if decision.decision != verdict.in_orbit:
            failures.append("dovetail %s %s" % (decision.status, b_bar))
            continue
        if verdict.in_orbit:
            wrong = run_semi(orbit_semi_no_steps(backend, None, b_bar,
                                                 small))
        else:
            wrong = run_semi(orbit_semi_yes_steps(backend, None, b_bar,
                                                  small))
        if wrong.landed:
            failures.append("both landed %s" % (b_bar,))
        if not semi_certificate_holds(backend, b_bar, decision.result):
            failures.append("certificate %s" % (b_bar,))
    return OracleResult("semi-decider coherence", not failures, len(corpus),
                        "; ".join(failures[:3]))


def theta_check(quick=False, max_level=2 ** 12, sound_level=64,
                seed=DEFAULT_SEED):
    """
    The orbit formula never falsifies an orbit tuple, and falsifies every
    other tuple of the corpus once the budget is doubled far enough.
    """
    if quick:
        max_level = 2 ** 8
    failures = []
    corpus = semi_corpus(quick, seed)
    sound = Budget.from_level(sound_level)
    for backend, b_bar in corpus:
        verdict = orbit_decide(backend, None, b_bar)
        if verdict.in_orbit:
            if hat_witness_search(backend, b_bar, sound).landed:
                failures.append("falsified orbit tuple %s" % (b_bar,))
            continue
        level = 16
        while level <= max_level:
            if hat_witness_search(backend, b_bar,
                                  Budget.from_level(level)).landed:
                break
            level *= 2
        else:
            failures.append("never falsified %s" % (b_bar,))
    return OracleResult("orbit formula soundness", not failures,
                        len(corpus), "; ".join(failures[:3]))


def integers_endomorphisms(backend, max_power=16):
    a = backend.generator_words()[0]
    return [Endomorphism(backend.presentation, backend,
                         (backend.normal_form(a ** k),), validated=True)
            for k in range(-max_power, max_power + 1)]


def dichotomy_check(quick=False, seed=DEFAULT_SEED):
    """
    Every checked endomorphism is refuted by the orbit formula or is an
    automorphism, never neither, never both.
    """
    results = []
    s3 = symmetric_group_backend()
    diameter = element_diameter(s3)
    s3_budget = Budget(2 * diameter, diameter,
                       count_term_tuples_upto(2, 2, 2 * diameter))
    results.append(strongly_defined_probe(s3, s3_budget))

    free = FreeGroupBackend(2)
    length_cap = 2 if quick else 4
    results.append(strongly_defined_probe(
        free, Budget(2 * length_cap, 1, 10 ** 6),
        samples=50 if quick else 1000, seed=seed, length_cap=length_cap))

    z = FreeGroupBackend(1)
    endos = integers_endomorphisms(z)
    report = strongly_defined_probe(z, Budget.from_level(64),
                                    endomorphisms=endos)
    results.append(report)
    failures = []
    for report in results:
        failures.extend(report.failures)
    checked = sum(report.checked for report in results)
    if results[-1].automorphisms != 2:
        failures.append("integers: %d automorphisms"
                        % results[-1].automorphisms)
    return OracleResult("refuted or automorphic", not failures, checked,
                        "; ".join(str(f) for f in failures[:3]))


def golden_backends():
    """
    The groups with frozen documents, keyed by their file prefix.
    """
    return [("z", FreeGroupBackend(1)), ("f2", FreeGroupBackend(2)),
            ("dinf", InfiniteDihedralBackend())]


def golden_path(prefix, kind, level=GOLDEN_LEVEL):
    return os.path.join(GOLDEN_DIR, "%s_%s_%d.sexp" % (prefix, kind, level))


def read_golden(prefix, kind, level=GOLDEN_LEVEL):
    with open(golden_path(prefix, kind, level)) as fh:
        return fh.read()


DOCUMENT_KINDS = [("theta", theta_document, "; class: computable Pi1"),
                  ("sentence", sentence_document,
                   "; class: computable dSigma2")]


def formula_check(level=GOLDEN_LEVEL):
    """
    Documents match the frozen golden files, are reproducible and carry
    the expected tags.
    """
    budget = Budget.from_level(level)
    failures = []
    cases = golden_backends()
    for prefix, backend in cases:
        p = backend.presentation
        theta = build_theta_prefix(p, backend, budget)
        sentence = emit_scott_sentence(p, backend, budget)
        if classify(theta).klass != PI or classify(theta).level != 1:
            failures.append("theta tag %s" % backend.describe())
        if classify(sentence).klass != D_SIGMA or \
                classify(sentence).level != 2:
            failures.append("sentence tag %s" % backend.describe())
        for kind, document, tag in DOCUMENT_KINDS:
            path = golden_path(prefix, kind, level)
            text = document(p, backend, budget)
            if text != document(p, backend, budget):
                failures.append("nondeterministic %s %s"
                                % (kind, backend.describe()))
            if tag not in text.splitlines():
                failures.append("%s class line %s"
                                % (kind, backend.describe()))
            try:
                golden = read_golden(prefix, kind, level)
            except IOError:
                failures.append("no golden %s" % path)
                continue
            if text != golden:
                failures.append("%s differs from %s" % (kind, path))
    return OracleResult("formula documents", not failures,
                        2 * len(cases), "; ".join(failures))


def acceptance_suite(quick=False, seed=DEFAULT_SEED):
    """
    Run every acceptance check. ``quick`` shrinks the corpora and the
    largest budgets.

    :return: list of :class:`OracleResult`
    """
    checks = [
        lambda: finite_brute_force_check(symmetric_group_backend(), "S3"),
        lambda: finite_brute_force_check(cyclic_group_backend(6), "Z/6"),
        lambda: free_group_check(max_total=3 if quick else 5,
                                 semi_level=2 ** 8 if quick else 2 ** 12),
        lambda: abelian_check(samples=50 if quick else 1000, seed=seed),
        lambda: dihedral_check(max_length=2 if quick else 4),
        lambda: semi_decider_check(quick, seed=seed),
        lambda: theta_check(quick, seed=seed),
        lambda: dichotomy_check(quick, seed),
        formula_check,
    ]
    results = []
    for check in checks:
        result = check()
        logger.info("oracle: %r" % result)
        results.append(result)
    return results
