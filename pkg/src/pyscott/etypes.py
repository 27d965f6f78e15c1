#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Positive existential types. A positive existential formula over the
group signature is, up to disjunction, a system of word equations with
some variables quantified existentially. An endomorphism ``e`` is an
existential-positive embedding when every such system solvable at
``e(a)`` is already solvable at ``a``.

The probes here look for systems that separate ``e(a)`` from ``a``,
either by solving equations directly or by evaluating the orbit
formula at ``e(a)``: a falsified conjunct is a separating system.

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""
from __future__ import print_function, division, absolute_import
from itertools import product
import numpy as np
from . import logger
from .backends import FreeGroupBackend, FreeAbelianBackend, \
    InfiniteDihedralBackend, FiniteCosetTableBackend, iter_element_tuples, \
    satisfies_relators
from .constant import DEFAULT_SEED, IN_ORBIT, UNKNOWN
from .errors import NotValidatedError, NoOrbitDeciderError
from .intmatrix import in_row_lattice
from .morphisms import Endomorphism
from .orbit import orbit_decide, has_orbit_decider
from .presentation import Word, variable_names, format_word
from .tsets import hat_witness_search, member_T_decide, member_T_semi, \
    prefix_terms, element_diameter
from .util import jsonable, make_rng, random_select

SOLVABLE = "solvable"
UNSOLVABLE = "unsolvable"


class EquationSystem(object):
    """
    Equations ``lhs = rhs`` in the free variables ``x1 ... xn`` and the
    existential variables ``z1 ... zm``. Letter index ``i < n`` is
    ``x(i+1)``, index ``n + j`` is ``z(j+1)``.
    """
    def __init__(self, equations, n, m):
        self.n = n
        self.m = m
        self.variables = variable_names(n, "x") + variable_names(m, "z")
        self.equations = tuple((lhs.with_arena(self.variables),
                                rhs.with_arena(self.variables))
                               for lhs, rhs in equations)

    @classmethod
    def from_term(cls, presentation, term):
        """
        ``psi(z) and x_i = t_i(z)``: solvable at ``b`` iff ``term`` is in
        ``T(b)``.
        """
        n = presentation.rank
        equations = []
        for relator in presentation.relators:
            equations.append((_shift(relator, n), Word(())))
        for i, comp in enumerate(term.components):
            equations.append((Word.generator(i), _shift(comp, n)))
        return cls(equations, n, n)

    def differences(self):
        return [lhs * ~rhs for lhs, rhs in self.equations]

    def holds_at(self, backend, x_values, z_values):
        images = tuple(x_values) + tuple(z_values)
        return all(backend.equal(lhs.substitute(images, arena=backend.names),
                                 rhs.substitute(images, arena=backend.names))
                   for lhs, rhs in self.equations)

    def format(self):
        body = " and ".join("%s = %s" % (format_word(lhs), format_word(rhs))
                            for lhs, rhs in self.equations)
        if self.m:
            return "exists %s: %s" % (
                " ".join(self.variables[self.n:]), body)
        return body

    def to_json(self):
        return {"n": self.n, "m": self.m,
                "equations": [[lhs.to_json(), rhs.to_json()]
                              for lhs, rhs in self.equations]}

    def __repr__(self):
        return "EquationSystem(%s)" % self.format()


def _shift(word, offset):
    return Word([(i + offset, s) for i, s in word.letters])


class Solution(object):
    """
    Three-valued answer of :func:`solve_at`. ``exact`` marks answers that
    do not depend on the budget.
    """
    def __init__(self, status, witness=None, exact=False, method=None):
        self.status = status
        self.witness = witness
        self.exact = exact
        self.method = method

    def to_json(self):
        return {"status": self.status, "exact": self.exact,
                "method": self.method, "witness": jsonable(self.witness)}

    def __repr__(self):
        return "Solution(%s by %s)" % (self.status, self.method)


def _bounded_search(backend, system, x_values, cap):
    for z_values in iter_element_tuples(backend, system.m, cap):
        if system.holds_at(backend, x_values, z_values):
            return z_values
    return None


def _exponent_sums(word, count):
    sums = [0] * count
    for index, sign in word.letters:
        sums[index] += sign
    return sums


def _abelian_solvable(system, x_vectors, rank):
    """
    Exact solvability in Z^rank: each equation is linear in the exponent
    vectors, and coordinates separate.
    """
    n, m = system.n, system.m
    coefficients = []
    constants = []
    for diff in system.differences():
        sums = _exponent_sums(diff, n + m)
        coefficients.append(sums[n:])
        const = np.zeros(rank, dtype=object)
        for i in range(n):
            const = const - sums[i] * x_vectors[i]
        constants.append(const)
    columns = [[row[j] for row in coefficients] for j in range(m)]
    for coord in range(rank):
        target = [int(c[coord]) for c in constants]
        if not in_row_lattice(columns, target):
            return False
    return True


def _dihedral_element(backend, index, sign, x_pairs, parities, n, m):
    if index < n:
        k, e = x_pairs[index]
        affine = np.zeros(m + 1, dtype=object)
        affine[m] = k
    else:
        j = index - n
        e = parities[j]
        affine = np.zeros(m + 1, dtype=object)
        affine[j] = 1
    if sign < 0 and e == 0:
        affine = -affine
    return affine, e


def _dihedral_solvable(backend, system, x_pairs):
    """
    Case analysis over the reflection parity of each unknown. With the
    parities fixed, ``r^k s^e`` words multiply to affine forms in the
    unknown exponents, and each equation becomes a parity check plus a
    linear Diophantine equation.
    """
    n, m = system.n, system.m
    for parities in product((0, 1), repeat=m):
        rows = []
        rhs = []
        consistent = True
        for diff in system.differences():
            value = (np.zeros(m + 1, dtype=object), 0)
            for index, sign in diff.letters:
                factor = _dihedral_element(backend, index, sign, x_pairs,
                                           parities, n, m)
                value = backend.multiply_pairs(value, factor)
            affine, parity = value
            if parity != 0:
                consistent = False
                break
            rows.append([int(c) for c in affine[:m]])
            rhs.append(-int(affine[m]))
        if not consistent:
            continue
        columns = [[row[j] for row in rows] for j in range(m)]
        if in_row_lattice(columns, rhs):
            return True
    return False


def solve_at(backend, system, x_values, budget):
    """
    Decide whether ``system`` has a solution with ``x = x_values``.

    * finite backends: exhaustive search, exact;
    * free abelian: integer lattice membership, exact;
    * infinite dihedral: parity case analysis, exact;
    * free groups: the abelianised system refutes exactly, otherwise a
      bounded search may find a solution;
    * anything else: bounded search only.

    :return: :class:`Solution` with status ``solvable``, ``unsolvable``
        or ``Unknown``
    """
    x_values = tuple(backend.normal_form(w) for w in x_values)
    cap = budget.element_length_cap
    if isinstance(backend, FiniteCosetTableBackend):
        witness = _bounded_search(backend, system, x_values,
                                  element_diameter(backend))
        if witness is None:
            return Solution(UNSOLVABLE, exact=True, method="exhaustive")
        return Solution(SOLVABLE, witness, True, "exhaustive")
    if isinstance(backend, FreeAbelianBackend):
        vectors = [backend.exponent_vector(w) for w in x_values]
        if _abelian_solvable(system, vectors, backend.rank):
            return Solution(SOLVABLE, _bounded_search(
                backend, system, x_values, cap), True, "lattice")
        return Solution(UNSOLVABLE, exact=True, method="lattice")
    if isinstance(backend, InfiniteDihedralBackend):
        pairs = [backend.pair(w) for w in x_values]
        if _dihedral_solvable(backend, system, pairs):
            return Solution(SOLVABLE, _bounded_search(
                backend, system, x_values, cap), True, "parity")
        return Solution(UNSOLVABLE, exact=True, method="parity")
    if isinstance(backend, FreeGroupBackend):
        vectors = [np.array(w.exponent_vector(backend.rank), dtype=object)
                   for w in x_values]
        if not _abelian_solvable(system, vectors, backend.rank):
            return Solution(UNSOLVABLE, exact=True, method="abelianised")
    witness = _bounded_search(backend, system, x_values, cap)
    if witness is not None:
        return Solution(SOLVABLE, witness, True, "search")
    return Solution(UNKNOWN, method="search")


class ExistsPlusViolation(object):
    """
    A system solvable at ``e(a)`` (with ``image_witness``) but not at
    ``a``.

    :param refutation: ``solver`` when :func:`solve_at` refuted it at
        ``a``, ``theta`` when the system came from an orbit formula
        conjunct whose term tuple lies outside ``T(a)``
    """
    def __init__(self, system, image_witness, refutation, term=None):
        self.system = system
        self.image_witness = tuple(image_witness)
        self.refutation = refutation
        self.term = term

    @property
    def arity(self):
        return self.system.m

    def recheck(self, e, budget):
        backend = e.backend
        if not self.system.holds_at(backend, e.images, self.image_witness):
            return False
        if self.refutation == "theta":
            return not member_T_decide(self.term, backend)
        solution = solve_at(backend, self.system,
                            backend.generator_words(), budget)
        return solution.status == UNSOLVABLE

    def to_json(self):
        return {"system": self.system.to_json(),
                "arity": self.arity,
                "image_witness": jsonable(self.image_witness),
                "refutation": self.refutation,
                "term": jsonable(self.term)}

    def __repr__(self):
        return "ExistsPlusViolation(%s, %s)" % (self.system.format(),
                                                self.refutation)


class ProbeResult(object):
    """
    Outcome of a single probe: ``status`` is one of ``NoViolation``,
    ``Violation``, ``ConsistentWithAut`` or ``RefutedByTheta``.
    """
    def __init__(self, status, depth=0, violation=None, index=None):
        self.status = status
        self.depth = depth
        self.violation = violation
        self.index = index

    def to_json(self):
        return {"status": self.status, "depth": self.depth,
                "index": self.index,
                "violation": jsonable(self.violation)}

    def __repr__(self):
        return "ProbeResult(%s, depth=%d)" % (self.status, self.depth)


def _check_validated(e):
    if not e.validated:
        raise NotValidatedError("endomorphism %s was not validated"
                                % e.format())


def exists_plus_probe(e, budget):
    """
    Scan the systems ``psi(z) and x = t(z)`` for the budget's term tuples
    t: find one solvable at ``e(a)`` that :func:`solve_at` refutes at
    ``a``. NoViolation only covers the scanned systems.

    :return: :class:`ProbeResult`
    """
    _check_validated(e)
    backend = e.backend
    gens = backend.generator_words()
    depth = 0
    for term, _ in prefix_terms(backend.rank, budget):
        depth += 1
        found = member_T_semi(term, e.images, backend, budget)
        if not found.landed:
            continue
        system = EquationSystem.from_term(backend.presentation, term)
        solution = solve_at(backend, system, gens, budget)
        if solution.status == UNSOLVABLE:
            violation = ExistsPlusViolation(
                system, found.certificate["witness"], "solver", term)
            logger.debug("positive existential violation: %s"
                         % system.format())
            return ProbeResult("Violation", depth, violation)
    return ProbeResult("NoViolation", depth)


def theta_check_embedding(e, budget):
    """
    Evaluate the orbit formula prefix of the budget at ``e(a)``; the
    search runs the conjunct test directly instead of materialising the
    prefix. A falsified conjunct with term tuple t and witness c is
    converted into the system ``psi(z) and x = t(z)``, solved at
    ``e(a)`` by c and unsolvable at ``a`` because t is outside ``T(a)``.

    :raises NoOrbitDeciderError: when the backend has no orbit decider
    """
    _check_validated(e)
    backend = e.backend
    if not has_orbit_decider(backend):
        raise NoOrbitDeciderError("%s has no orbit decider"
                                  % backend.describe())
    result = hat_witness_search(backend, e.images, budget)
    if not result.landed:
        return ProbeResult("ConsistentWithAut", result.steps)
    cert = result.certificate
    term = cert["term"]
    system = EquationSystem.from_term(backend.presentation, term)
    violation = ExistsPlusViolation(system, cert["witness"], "theta", term)
    return ProbeResult("RefutedByTheta", result.steps, violation,
                       index=cert["position"])


class ProbeReport(object):
    """
    Summary of :func:`strongly_defined_probe`. Every endomorphism checked
    is either refuted by the orbit formula or automorphic; anything else
    is a failure.
    """
    def __init__(self, backend_name, budget):
        self.backend_name = backend_name
        self.budget = budget
        self.refuted = 0
        self.automorphisms = 0
        self.failures = []

    @property
    def checked(self):
        return self.refuted + self.automorphisms + len(self.failures)

    @property
    def passed(self):
        return not self.failures

    def to_json(self):
        return {"backend": self.backend_name,
                "budget": self.budget.to_json(),
                "checked": self.checked, "refuted": self.refuted,
                "automorphisms": self.automorphisms,
                "failures": jsonable(self.failures),
                "passed": self.passed}

    def __repr__(self):
        return "ProbeReport(%s: %d refuted, %d automorphisms, " \
            "%d failures)" % (self.backend_name, self.refuted,
                              self.automorphisms, len(self.failures))


def sample_endomorphisms(backend, samples, length_cap, seed=DEFAULT_SEED,
                         max_attempts=None):
    """
    Draw image tuples of normal forms no longer than ``length_cap`` and
    keep the ones satisfying every relator.
    """
    rng = make_rng(seed)
    pool = list(backend.iter_elements(length_cap))
    if max_attempts is None:
        max_attempts = 50 * samples
    found = []
    attempts = 0
    while len(found) < samples and attempts < max_attempts:
        attempts += 1
        indices = random_select(rng, len(pool), backend.rank)
        images = tuple(pool[i] for i in indices)
        if satisfies_relators(backend.presentation, backend, images):
            found.append(Endomorphism(backend.presentation, backend,
                                      images, validated=True))
    if len(found) < samples:
        logger.warning("only %d of %d sampled tuples satisfy the relators"
                       % (len(found), samples))
    return found


def all_endomorphisms(backend):
    """
    Every endomorphism of a finite backend.
    """
    found = []
    for images in iter_element_tuples(backend, backend.rank,
                                      element_diameter(backend)):
        if satisfies_relators(backend.presentation, backend, images):
            found.append(Endomorphism(backend.presentation, backend,
                                      images, validated=True))
    return found


def strongly_defined_probe(backend, budget, samples=100, seed=DEFAULT_SEED,
                           length_cap=None, endomorphisms=None):
    """
    Check, endomorphism by endomorphism, that the orbit formula refutes
    exactly the non-automorphisms.

    :param endomorphisms: explicit list to check; by default all of them
        on finite backends, ``samples`` random ones otherwise
    :param length_cap: sampled image length, defaults to
        ``budget.element_length_cap``
    :return: :class:`ProbeReport`
    """
    if endomorphisms is None:
        if backend.is_finite:
            endomorphisms = all_endomorphisms(backend)
        else:
            if length_cap is None:
                length_cap = budget.element_length_cap
            endomorphisms = sample_endomorphisms(backend, samples,
                                                 length_cap, seed)
    report = ProbeReport(backend.describe(), budget)
    for e in endomorphisms:
        check = theta_check_embedding(e, budget)
        verdict = orbit_decide(backend, None, e.images)
        refuted = check.status == "RefutedByTheta"
        automorphic = verdict.decision == IN_ORBIT
        if refuted and not automorphic:
            report.refuted += 1
        elif automorphic and not refuted:
            report.automorphisms += 1
        else:
            report.failures.append({"images": e.images,
                                    "theta": check.status,
                                    "orbit": verdict.decision})
    logger.info("strongly defined probe on %s: %d refuted, "
                "%d automorphisms, %d failures"
                % (report.backend_name, report.refuted,
                   report.automorphisms, len(report.failures)))
    return report
