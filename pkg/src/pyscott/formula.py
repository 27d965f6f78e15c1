#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Formulas over the group signature: equations between words, finite and
computably enumerable conjunctions and disjunctions, negation and
quantifiers, together with their place in the computable Sigma/Pi
hierarchy.

Infinitary connectives hold a :class:`StreamHandle`: the children found
so far, plus the cursor where the enumeration of further children
resumes.

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""
from __future__ import print_function, division, absolute_import
from .errors import FormulaError
from .presentation import Word, format_word

SIGMA = "Sigma"
PI = "Pi"
D_SIGMA = "dSigma"


class ComplexityTag(object):
    """
    Place of a formula in the hierarchy. Level 0 means quantifier-free
    and finitary, where Sigma and Pi coincide.
    """
    _klass_options = [SIGMA, PI, D_SIGMA]

    def __init__(self, klass, level, computable=True):
        if klass not in self._klass_options:
            raise ValueError("Input klass(%s) must be in: %s"
                             % (klass, self._klass_options))
        if level < 0:
            raise ValueError("level(%d) must be non-negative" % level)
        if klass == D_SIGMA and level == 0:
            raise ValueError("d-Sigma needs level at least 1")
        self.klass = klass
        self.level = level
        self.computable = computable

    @property
    def sigma_level(self):
        """
        Least n with the formula in Sigma_n.
        """
        if self.level == 0 or self.klass == SIGMA:
            return self.level
        return self.level + 1

    @property
    def pi_level(self):
        if self.level == 0 or self.klass == PI:
            return self.level
        return self.level + 1

    def format(self):
        prefix = "computable " if self.computable else ""
        return "%s%s%d" % (prefix, self.klass, self.level)

    def to_json(self):
        return {"class": self.klass, "level": self.level,
                "computable": self.computable}

    def __eq__(self, other):
        if not isinstance(other, ComplexityTag):
            return NotImplemented
        if self.level == 0 and other.level == 0:
            return self.computable == other.computable
        return (self.klass, self.level, self.computable) == \
            (other.klass, other.level, other.computable)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self.level == 0:
            return hash((0, self.computable))
        return hash((self.klass, self.level, self.computable))

    def __repr__(self):
        return "ComplexityTag(%s)" % self.format()


class Formula(object):
    """
    Base class of the formula nodes.
    """
    def children(self):
        return ()

    def free_variables(self):
        seen = []
        for child in self.children():
            for name in child.free_variables():
                if name not in seen:
                    seen.append(name)
        return tuple(seen)

    def to_sexp(self):
        return to_sexp(self)

    def to_json(self):
        return to_json(self)

    def __repr__(self):
        return to_sexp(self)


class TermEq(Formula):
    """
    ``lhs = rhs``; both words index into ``variables``.
    """
    def __init__(self, lhs, rhs, variables):
        self.variables = tuple(variables)
        for word in (lhs, rhs):
            if word.max_index() >= len(self.variables):
                raise FormulaError("word %s uses a variable outside %s"
                                   % (word, self.variables))
        self.lhs = lhs.with_arena(self.variables)
        self.rhs = rhs.with_arena(self.variables)

    def free_variables(self):
        used = set(i for word in (self.lhs, self.rhs)
                   for i, _ in word.letters)
        return tuple(name for i, name in enumerate(self.variables)
                     if i in used)

    def __eq__(self, other):
        if not isinstance(other, TermEq):
            return NotImplemented
        return (self.lhs.format(), self.rhs.format()) == \
            (other.lhs.format(), other.rhs.format())

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.lhs.format(), self.rhs.format()))


class Not(Formula):

    def __init__(self, body):
        self.body = body

    def children(self):
        return (self.body,)


class Connective(Formula):
    """
    Finite list of children, or a :class:`StreamHandle`.
    """
    def __init__(self, items):
        if isinstance(items, StreamHandle):
            self.stream = items
            self.items = None
        else:
            self.stream = None
            self.items = tuple(items)

    @property
    def is_stream(self):
        return self.stream is not None

    def children(self):
        if self.stream is not None:
            return self.stream.children
        return self.items


class And(Connective):
    pass


class Or(Connective):
    pass


class Quantifier(Formula):

    def __init__(self, variables, body):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise FormulaError("repeated bound variable in %s"
                               % (self.variables,))
        self.body = body

    def children(self):
        return (self.body,)

    def free_variables(self):
        return tuple(name for name in self.body.free_variables()
                     if name not in self.variables)


class Exists(Quantifier):
    pass


class Forall(Quantifier):
    pass


class StreamHandle(object):
    """
    Prefix of a computably enumerable list of formulas.

    :param kind: what the stream enumerates (``theta`` or ``span``)
    :param keys: one term tuple per child, in enumeration order
    :param children: the formulas found so far
    :param cursor: term cursor where the enumeration resumes
    :param scanned: number of term tuples looked at
    :param budget: the budget the prefix was built to
    :param child_tag: tag every child has, also when none exist yet
    :param source: object with ``extend(handle, budget)``; None for a
        frozen stream
    :param negated: children are negated on access
    """
    def __init__(self, kind, keys, children, cursor, scanned, budget,
                 child_tag, source=None, negated=False):
        self.kind = kind
        self.keys = tuple(keys)
        self._children = tuple(children)
        self.cursor = cursor
        self.scanned = scanned
        self.budget = budget
        self.child_tag = child_tag
        self.source = source
        self.negated = negated

    @property
    def stored_children(self):
        """
        Children as built, ignoring ``negated``.
        """
        return self._children

    @property
    def children(self):
        if self.negated:
            return tuple(negate(child) for child in self._children)
        return self._children

    def __len__(self):
        return len(self._children)

    def index_of(self):
        """
        Dict from term tuple key to child index.
        """
        return dict((key.key(), i) for i, key in enumerate(self.keys))

    def with_negation(self):
        return StreamHandle(self.kind, self.keys, self._children,
                            self.cursor, self.scanned, self.budget,
                            self.child_tag, self.source,
                            not self.negated)

    def extend(self, budget):
        if self.source is None:
            raise FormulaError("stream %s cannot be extended" % self.kind)
        if not self.budget <= budget:
            raise ValueError("budget %s is smaller than %s"
                             % (budget, self.budget))
        handle = self.source.extend(self, budget)
        if self.negated:
            handle = handle.with_negation()
        return handle


def _dual_tag(tag):
    if tag.level == 0:
        return tag
    if tag.klass == D_SIGMA:
        return ComplexityTag(SIGMA, tag.level + 1, tag.computable)
    return ComplexityTag(PI if tag.klass == SIGMA else SIGMA, tag.level,
                         tag.computable)


def _finite(tags, conjunction):
    if not tags:
        return ComplexityTag(PI, 0)
    computable = all(t.computable for t in tags)
    s = max(t.sigma_level for t in tags)
    p = max(t.pi_level for t in tags)
    if s < p:
        return ComplexityTag(SIGMA, s, computable)
    if p < s:
        return ComplexityTag(PI, p, computable)
    if s == 0:
        return ComplexityTag(PI, 0, computable)
    n = s - 1
    if conjunction and n >= 1 and all(
            t.level <= n and t.klass != D_SIGMA for t in tags):
        return ComplexityTag(D_SIGMA, n, computable)
    return ComplexityTag(PI if conjunction else SIGMA, s, computable)


def classify(f):
    """
    Least complexity tag of ``f``:

    * equations and finite Boolean combinations of them are level 0;
    * a c.e. conjunction of Pi_n (or Sigma_(n-1)) formulas is Pi_n,
      dually for disjunctions;
    * quantifiers of the matching kind do not raise the level;
    * a finite conjunction of a Sigma_n and a Pi_n formula is d-Sigma_n.

    :raises FormulaError: for anything that is not a formula node
    """
    if isinstance(f, TermEq):
        return ComplexityTag(PI, 0)
    if isinstance(f, Not):
        return _dual_tag(classify(f.body))
    if isinstance(f, Connective):
        conjunction = isinstance(f, And)
        if f.is_stream:
            tag = f.stream.child_tag
            if f.stream.negated:
                tag = _dual_tag(tag)
            if conjunction:
                return ComplexityTag(PI, max(tag.pi_level, 1),
                                     tag.computable)
            return ComplexityTag(SIGMA, max(tag.sigma_level, 1),
                                 tag.computable)
        return _finite([classify(c) for c in f.items], conjunction)
    if isinstance(f, Exists):
        tag = classify(f.body)
        return ComplexityTag(SIGMA, max(tag.sigma_level, 1), tag.computable)
    if isinstance(f, Forall):
        tag = classify(f.body)
        return ComplexityTag(PI, max(tag.pi_level, 1), tag.computable)
    raise FormulaError("not a formula node: %r" % (f,))


def negate(f):
    """
    Push a negation through ``f`` until it meets another negation or an
    equation; connectives and quantifiers are dualised on the way.
    """
    if isinstance(f, TermEq):
        return Not(f)
    if isinstance(f, Not):
        return f.body
    if isinstance(f, And):
        if f.is_stream:
            return Or(f.stream.with_negation())
        return Or([negate(c) for c in f.items])
    if isinstance(f, Or):
        if f.is_stream:
            return And(f.stream.with_negation())
        return And([negate(c) for c in f.items])
    if isinstance(f, Exists):
        return Forall(f.variables, negate(f.body))
    if isinstance(f, Forall):
        return Exists(f.variables, negate(f.body))
    raise FormulaError("not a formula node: %r" % (f,))


def extend_stream(f, budget):
    """
    Copy of ``f`` with every stream extended to ``budget``. The children
    of each old stream are a prefix of the new ones.
    """
    if isinstance(f, TermEq):
        return f
    if isinstance(f, Not):
        return Not(extend_stream(f.body, budget))
    if isinstance(f, Connective):
        if f.is_stream:
            return type(f)(f.stream.extend(budget))
        return type(f)([extend_stream(c, budget) for c in f.items])
    if isinstance(f, Quantifier):
        return type(f)(f.variables, extend_stream(f.body, budget))
    raise FormulaError("not a formula node: %r" % (f,))


def streams(f):
    """
    All stream handles in ``f``, outermost first.
    """
    if isinstance(f, Connective) and f.is_stream:
        return [f.stream]
    found = []
    for child in f.children():
        found.extend(streams(child))
    return found


def shift_word(word, offset):
    return Word._reduced(tuple((i + offset, s) for i, s in word.letters),
                         None)


def _sexp_head(f):
    if isinstance(f, And):
        return "and-stream" if f.is_stream else "and"
    if isinstance(f, Or):
        return "or-stream" if f.is_stream else "or"
    if isinstance(f, Exists):
        return "exists"
    if isinstance(f, Forall):
        return "forall"
    return "not"


def _sexp_parts(f):
    if isinstance(f, Quantifier):
        return ["(%s)" % " ".join(f.variables)]
    if isinstance(f, Connective) and f.is_stream:
        cursor = f.stream.cursor
        return ["(cursor %d %d)" % (cursor[0], cursor[1]),
                "(scanned %d)" % f.stream.scanned]
    return []


def to_sexp(f):
    """
    One-line S-expression.
    """
    if isinstance(f, TermEq):
        return "(= %s %s)" % (format_word(f.lhs), format_word(f.rhs))
    if not isinstance(f, Formula):
        raise FormulaError("not a formula node: %r" % (f,))
    parts = [_sexp_head(f)] + _sexp_parts(f) + \
        [to_sexp(c) for c in f.children()]
    return "(%s)" % " ".join(parts)


def has_stream(f):
    return bool(streams(f))


def pretty_sexp(f, indent=0):
    """
    Multi-line S-expression: nodes containing a stream put each child on
    its own line, everything else prints on one line.

    :return: list of lines
    """
    pad = " " * indent
    if not has_stream(f):
        return [pad + to_sexp(f)]
    head = " ".join([_sexp_head(f)] + _sexp_parts(f))
    children = list(f.children())
    if not children:
        return [pad + "(%s)" % head]
    lines = [pad + "(" + head]
    for child in children:
        lines.extend(pretty_sexp(child, indent + 2))
    lines[-1] += ")"
    return lines


def to_json(f):
    if isinstance(f, TermEq):
        return {"node": "eq", "lhs": f.lhs.to_json(),
                "rhs": f.rhs.to_json(), "variables": list(f.variables)}
    if isinstance(f, Not):
        return {"node": "not", "body": to_json(f.body)}
    if isinstance(f, Connective):
        node = "and" if isinstance(f, And) else "or"
        content = {"node": node,
                   "children": [to_json(c) for c in f.children()]}
        if f.is_stream:
            content["stream"] = {"kind": f.stream.kind,
                                 "cursor": list(f.stream.cursor),
                                 "scanned": f.stream.scanned,
                                 "negated": f.stream.negated,
                                 "keys": [k.to_json()
                                          for k in f.stream.keys]}
        return content
    if isinstance(f, Quantifier):
        node = "exists" if isinstance(f, Exists) else "forall"
        return {"node": node, "variables": list(f.variables),
                "body": to_json(f.body)}
    raise FormulaError("not a formula node: %r" % (f,))
