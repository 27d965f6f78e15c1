#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
The orbit formula and the Scott sentence.

For a presentation with generating tuple ``a`` of length n and defining
relators ``psi``, the orbit formula is

    psi(x) and, for every term tuple t outside T(a),
    forall y: not (psi(y) and x_1 = t_1(y) and ... and x_n = t_n(y))

It is a computable Pi_1 formula, true of ``b`` iff ``b`` is automorphic
to ``a``. The Scott sentence is the d-Sigma_2 sentence

    (exists x: orbit formula) and
    (forall y: OR over all t of exists x: psi(x) and y = t(x))

Both infinitary connectives are streamed: a formula holds the prefix up
to a budget and can be extended to a larger budget.

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""
from __future__ import print_function, division, absolute_import
from . import logger
from .backends import iter_element_tuples
from .config import Budget
from .constant import BOUND_VARIABLE_PREFIX, FREE_VARIABLE_PREFIX, \
    UNKNOWN
from .errors import FormulaError, NoOrbitDeciderError
from .formula import And, Or, Not, Exists, Forall, TermEq, StreamHandle, \
    ComplexityTag, PI, SIGMA, classify, pretty_sexp, shift_word, streams, \
    to_json as formula_json, Connective, Quantifier
from .orbit import has_orbit_decider
from .presentation import Word, TermCursor, variable_names, \
    format_presentation, term_cursor_at
from .tsets import prefix_terms, member_T_decide, cursor_position, \
    hat_witness_search, element_diameter
from .util import digest, dumps_json, jsonable, versioned

HOLDS_SO_FAR = "HoldsSoFar"
FALSIFIED = "Falsified"


def psi_equations(presentation, variables, offset=0):
    """
    One equation ``r = 1`` per relator, with generator i renamed to
    ``variables[offset + i]``.
    """
    return [TermEq(shift_word(r, offset), Word(()), variables)
            for r in presentation.relators]


def theta_conjunct(presentation, term):
    n = presentation.rank
    xs = variable_names(n, FREE_VARIABLE_PREFIX)
    ys = variable_names(n, BOUND_VARIABLE_PREFIX)
    variables = xs + ys
    parts = psi_equations(presentation, variables, offset=n)
    for i, comp in enumerate(term.components):
        parts.append(TermEq(Word.generator(i), shift_word(comp, n),
                            variables))
    return Forall(ys, Not(And(parts)))


def span_disjunct(presentation, term):
    n = presentation.rank
    ys = variable_names(n, BOUND_VARIABLE_PREFIX)
    xs = variable_names(n, FREE_VARIABLE_PREFIX)
    variables = ys + xs
    parts = psi_equations(presentation, variables, offset=n)
    for j, comp in enumerate(term.components):
        parts.append(TermEq(Word.generator(j), shift_word(comp, n),
                            variables))
    return Exists(xs, And(parts))


class _TermSource(object):
    """
    Extends a stream by scanning term tuples in enumeration order from
    the stream's cursor.
    """
    kind = None

    def __init__(self, backend):
        self.backend = backend

    def keep(self, term):
        return True

    def child(self, term):
        raise NotImplementedError()

    def extend(self, handle, budget):
        n = self.backend.rank
        keys = list(handle.keys)
        children = list(handle.stored_children)
        cursor = handle.cursor
        for term, nxt in prefix_terms(n, budget, cursor):
            if self.keep(term):
                keys.append(term)
                children.append(self.child(term))
            cursor = nxt
        scanned = cursor_position(n, cursor)
        cursor = term_cursor_at(n, n, scanned) or cursor
        return StreamHandle(self.kind, keys, children, cursor, scanned,
                            budget, handle.child_tag, source=self)


class ThetaSource(_TermSource):
    kind = "theta"

    def keep(self, term):
        return not member_T_decide(term, self.backend)

    def child(self, term):
        return theta_conjunct(self.backend.presentation, term)


class SpanSource(_TermSource):
    kind = "span"

    def child(self, term):
        return span_disjunct(self.backend.presentation, term)


def _empty_stream(source, child_tag):
    return StreamHandle(source.kind, (), (), TermCursor(0, 0), 0,
                        Budget(0, 0, 0), child_tag, source=source)


def _check_presentation(presentation, backend):
    if presentation != backend.presentation:
        raise ValueError("presentation %s does not match the backend %s"
                         % (format_presentation(presentation),
                            format_presentation(backend.presentation)))


def build_theta_prefix(presentation, backend, budget):
    """
    The orbit formula with one conjunct per term tuple outside ``T(a)``
    among the budget's term tuples, in enumeration order.

    :raises NoOrbitDeciderError: when the backend has no orbit decider
    """
    _check_presentation(presentation, backend)
    if not has_orbit_decider(backend):
        raise NoOrbitDeciderError("%s has no orbit decider"
                                  % backend.describe())
    n = presentation.rank
    source = ThetaSource(backend)
    stream = _empty_stream(source, ComplexityTag(PI, 1)).extend(budget)
    xs = variable_names(n, FREE_VARIABLE_PREFIX)
    theta = And(psi_equations(presentation, xs) + [And(stream)])
    logger.info("orbit formula: %d conjuncts out of %d term tuples"
                % (len(stream), stream.scanned))
    return theta


def emit_scott_sentence(presentation, backend, budget):
    """
    The d-Sigma_2 Scott sentence with both streams built to ``budget``.
    """
    theta = build_theta_prefix(presentation, backend, budget)
    n = presentation.rank
    span = _empty_stream(SpanSource(backend),
                         ComplexityTag(SIGMA, 1)).extend(budget)
    xs = variable_names(n, FREE_VARIABLE_PREFIX)
    ys = variable_names(n, BOUND_VARIABLE_PREFIX)
    return And([Exists(xs, theta), Forall(ys, Or(span))])


class Evaluation(object):
    """
    Result of :func:`evaluate_bounded`.

    :param status: ``HoldsSoFar``, ``Falsified`` or ``Unknown``
    :param exact: HoldsSoFar was established without any budget cut
    :param index: index of the falsified (or satisfied) child, if any
    :param certificate: dict with the witness found
    """
    def __init__(self, status, exact=False, index=None, certificate=None):
        self.status = status
        self.exact = exact
        self.index = index
        self.certificate = certificate

    @property
    def holds(self):
        return self.status == HOLDS_SO_FAR and self.exact

    @property
    def falsified(self):
        return self.status == FALSIFIED

    def to_json(self):
        return {"status": self.status, "exact": self.exact,
                "index": self.index,
                "certificate": jsonable(self.certificate)}

    def __repr__(self):
        if self.status == FALSIFIED:
            return "Evaluation(Falsified at %s)" % self.index
        return "Evaluation(%s%s)" % (self.status,
                                     ", exact" if self.exact else "")


def _exhaustive(backend, budget):
    return backend.is_finite and \
        budget.element_length_cap >= element_diameter(backend)


def _bind(assignment, f):
    if isinstance(assignment, dict):
        env = dict(assignment)
    else:
        values = tuple(assignment)
        env = dict(zip(variable_names(len(values), FREE_VARIABLE_PREFIX),
                       values))
    missing = [name for name in f.free_variables() if name not in env]
    if missing:
        raise FormulaError("unbound variables: %s" % ", ".join(missing))
    return env


def evaluate_bounded(f, assignment, backend, budget):
    """
    Evaluate ``f`` with the word oracle of ``backend``. Equations and
    finite connectives are exact; quantifiers range over element tuples
    with normal forms no longer than ``budget.element_length_cap``.

    Falsified always comes with a certificate that re-checks. HoldsSoFar
    only means nothing false was found, unless ``exact`` is set, which
    happens on finite backends once the element cap covers the group.

    :param assignment: dict from variable name to word, or a tuple giving
        ``x1, x2, ...``
    :raises FormulaError: when a free variable of ``f`` is unbound
    """
    env = _bind(assignment, f)
    env = dict((k, backend.normal_form(v)) for k, v in env.items())
    return _evaluate(f, env, backend, budget)


def _evaluate(f, env, backend, budget):
    if isinstance(f, TermEq):
        identity = Word((), arena=backend.names)
        images = [env.get(name, identity) for name in f.variables]
        lhs = f.lhs.substitute(images, arena=backend.names)
        rhs = f.rhs.substitute(images, arena=backend.names)
        if backend.equal(lhs, rhs):
            return Evaluation(HOLDS_SO_FAR, exact=True)
        return Evaluation(FALSIFIED, certificate={"equation": f.to_sexp()})
    if isinstance(f, Not):
        inner = _evaluate(f.body, env, backend, budget)
        if inner.falsified:
            return Evaluation(HOLDS_SO_FAR, exact=True)
        if inner.holds:
            return Evaluation(FALSIFIED, certificate=inner.certificate)
        return Evaluation(UNKNOWN)
    if isinstance(f, Connective):
        if isinstance(f, And) and f.is_stream and \
                f.stream.kind == "theta" and not f.stream.negated:
            return _evaluate_theta(f.stream, env, backend, budget)
        if isinstance(f, And):
            return _evaluate_and(f.children(), env, backend, budget)
        return _evaluate_or(f.children(), env, backend, budget)
    if isinstance(f, Quantifier):
        return _evaluate_quantifier(f, env, backend, budget)
    raise FormulaError("not a formula node: %r" % (f,))


def _evaluate_and(children, env, backend, budget):
    exact = True
    unknown = False
    for index, child in enumerate(children):
        result = _evaluate(child, env, backend, budget)
        if result.falsified:
            cert = result.certificate
            if result.index is not None:
                cert = dict(cert or {}, inner_index=result.index)
            return Evaluation(FALSIFIED, index=index, certificate=cert)
        if result.status == UNKNOWN:
            unknown = True
        exact = exact and result.exact
    if unknown:
        return Evaluation(UNKNOWN)
    return Evaluation(HOLDS_SO_FAR, exact=exact)


def _evaluate_or(children, env, backend, budget):
    all_false = True
    for index, child in enumerate(children):
        result = _evaluate(child, env, backend, budget)
        if result.holds:
            return Evaluation(HOLDS_SO_FAR, exact=True, index=index,
                              certificate=result.certificate)
        all_false = all_false and result.falsified
    if all_false:
        return Evaluation(FALSIFIED, certificate={"disjuncts": "all"})
    return Evaluation(UNKNOWN)


def _evaluate_theta(stream, env, backend, budget):
    n = backend.rank
    b_bar = [env[name] for name in
             variable_names(n, FREE_VARIABLE_PREFIX)]
    result = hat_witness_search(backend, b_bar, budget,
                                conjuncts=stream.index_of())
    if result.landed:
        cert = result.certificate
        return Evaluation(FALSIFIED, index=cert.get("index"),
                          certificate=cert)
    exact = stream.budget <= budget and _exhaustive(backend, budget)
    return Evaluation(HOLDS_SO_FAR, exact=exact)


def _evaluate_quantifier(f, env, backend, budget):
    universal = isinstance(f, Forall)
    exhaustive = _exhaustive(backend, budget)
    exact = True
    for values in iter_element_tuples(backend, len(f.variables),
                                      budget.element_length_cap):
        inner_env = dict(env)
        inner_env.update(zip(f.variables, values))
        result = _evaluate(f.body, inner_env, backend, budget)
        if universal and result.falsified:
            return Evaluation(FALSIFIED, certificate={
                "witness": values, "inner": result.certificate})
        if not universal and result.holds:
            return Evaluation(HOLDS_SO_FAR, exact=True,
                              certificate={"witness": values})
        if universal:
            exact = exact and result.exact
        else:
            exact = exact and result.falsified
    if universal:
        return Evaluation(HOLDS_SO_FAR, exact=exact and exhaustive)
    if exact and exhaustive:
        return Evaluation(FALSIFIED, certificate={"witnesses": "all"})
    return Evaluation(UNKNOWN)


def _header(kind, presentation, backend, budget, f):
    tag = classify(f)
    lines = ["; pyscott %s" % kind,
             "; presentation: %s" % format_presentation(presentation),
             "; backend: %s" % backend.describe(),
             "; budget: term_length_cap=%d element_length_cap=%d "
             "step_cap=%d" % budget.as_tuple(),
             "; class: %s" % tag.format()]
    for stream in streams(f):
        lines.append("; %s stream: %d formulas from %d term tuples"
                     % (stream.kind, len(stream), stream.scanned))
    return lines


def formula_document(kind, presentation, backend, budget, f,
                     output_format="sexp"):
    """
    Text of a formula for the command line and the golden files.

    :param output_format: ``sexp`` and ``text`` give a commented
        S-expression, ``json`` a versioned JSON document
    """
    if output_format == "json":
        tag = classify(f)
        lines = pretty_sexp(f)
        return dumps_json(versioned({
            "kind": kind, "presentation": presentation.to_json(),
            "backend": backend.describe(), "budget": budget.to_json(),
            "class": tag.to_json(), "formula": formula_json(f),
            "digest": digest(lines)}))
    lines = _header(kind, presentation, backend, budget, f) + pretty_sexp(f)
    return "\n".join(lines) + "\n"


def theta_document(presentation, backend, budget, output_format="sexp"):
    f = build_theta_prefix(presentation, backend, budget)
    return formula_document("theta", presentation, backend, budget, f,
                            output_format)


def sentence_document(presentation, backend, budget, output_format="sexp"):
    f = emit_scott_sentence(presentation, backend, budget)
    return formula_document("sentence", presentation, backend, budget, f,
                            output_format)
