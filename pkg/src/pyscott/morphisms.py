#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Endomorphisms given by relator-satisfying tuples, and the two
semi-procedures behind the Hopfian arguments: surjectivity (find terms
expressing the generators) and left inverses.

Semi-procedures come in two forms. ``*_steps`` functions are generators
that yield None once per search step and a landed :class:`SemiResult`
when they succeed; they stop without landing once the budget's search
space is exhausted. The plain functions run them with :func:`run_semi`.

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""
from __future__ import print_function, division, absolute_import
from . import logger
from .backends import satisfies_relators, iter_element_tuples
from .errors import ArityError, NotAHomomorphismError, NotValidatedError
from .presentation import TermTuple, evaluate_terms, iter_terms


class SemiResult(object):
    """
    Outcome of a semi-procedure: ``landed`` with a certificate, or not
    landed (Unknown) after ``steps`` search steps.
    """
    def __init__(self, landed, certificate=None, steps=0, detail=None):
        self.landed = landed
        self.certificate = certificate
        self.steps = steps
        self.detail = detail

    @property
    def status(self):
        return "Yes" if self.landed else "Unknown"

    def __bool__(self):
        return self.landed

    __nonzero__ = __bool__

    def to_json(self):
        cert = self.certificate
        if hasattr(cert, "to_json"):
            cert = cert.to_json()
        return {"status": self.status, "steps": self.steps,
                "certificate": cert, "detail": self.detail}

    def __repr__(self):
        return "SemiResult(%s, steps=%d, certificate=%r)" % (
            self.status, self.steps, self.certificate)


def run_semi(steps):
    """
    Drive a step generator to completion.

    :return: the landed :class:`SemiResult`, or an Unknown one carrying
        the number of steps taken
    """
    count = 0
    for item in steps:
        if item is not None:
            item.steps = count
            return item
        count += 1
    return SemiResult(False, steps=count)


class Endomorphism(object):
    """
    The endomorphism sending the i-th generator to ``images[i]``.

    :param presentation: presentation of the group
    :param backend: word oracle for the group
    :param images: normal forms of the generator images
    :param validated: set iff the images satisfy every relator
    """
    def __init__(self, presentation, backend, images, validated=False):
        self.presentation = presentation
        self.backend = backend
        self.images = tuple(images)
        self.validated = validated

    @property
    def rank(self):
        return len(self.images)

    def apply(self, word):
        return apply(self, word)

    def is_identity_map(self):
        return all(self.backend.equal(img, gen) for img, gen in
                   zip(self.images, self.backend.generator_words()))

    def format(self):
        names = self.presentation.names
        return "(%s)" % ", ".join(
            "%s -> %s" % (name, img.format(names))
            for name, img in zip(names, self.images))

    def to_json(self):
        return {"images": [img.to_json() for img in self.images],
                "validated": self.validated}

    def __eq__(self, other):
        if not isinstance(other, Endomorphism):
            return NotImplemented
        return self.images == other.images and \
            self.presentation == other.presentation

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "Endomorphism%s" % self.format()


def endo_from_tuple(presentation, backend, images):
    """
    Validate ``images`` against every relator of ``presentation``.

    :raises NotAHomomorphismError: carrying the first violated relator
    """
    images = tuple(images)
    if len(images) != presentation.rank:
        raise ArityError("expected %d images, got %d"
                         % (presentation.rank, len(images)))
    images = tuple(backend.normal_form(img) for img in images)
    if not satisfies_relators(presentation, backend, images):
        for relator in presentation.relators:
            if not backend.is_identity(
                    relator.substitute(images, arena=backend.names)):
                raise NotAHomomorphismError(
                    "relator %s fails on images %s"
                    % (relator.format(presentation.names),
                       ", ".join(img.format() for img in images)),
                    relator=relator)
    return Endomorphism(presentation, backend, images, validated=True)


def identity_endomorphism(backend):
    return endo_from_tuple(backend.presentation, backend,
                           backend.generator_words())


def apply(e, word):
    if not e.validated:
        raise NotValidatedError("endomorphism %s was not validated"
                                % e.format())
    return e.backend.normal_form(
        word.substitute(e.images, arena=e.backend.names))


def compose(f, g):
    """
    ``f o g``: first ``g``, then ``f``.
    """
    return endo_from_tuple(f.presentation, f.backend,
                           [apply(f, img) for img in g.images])


def check_expressing_terms(e, terms):
    """
    True iff evaluating ``terms`` at ``e.images`` gives back every
    generator. Independent of how the terms were found.
    """
    values = evaluate_terms(terms, e.images)
    return all(e.backend.equal(v, g) for v, g in
               zip(values, e.backend.generator_words()))


def express_steps(backend, target, words, budget):
    """
    Search, component by component, for terms ``t_i`` with
    ``t_i(words) = target[i]``. Each component scans the first
    ``budget.step_cap`` reduced words in ``len(words)`` variables of
    length at most ``budget.term_length_cap``.
    """
    words = tuple(words)
    k = len(words)
    components = []
    for goal in target:
        found = None
        for term, _ in iter_terms(1, k, limit=budget.step_cap,
                                  max_total=budget.term_length_cap):
            value = term.components[0].substitute(words,
                                                  arena=backend.names)
            if backend.equal(value, goal):
                found = term.components[0]
                break
            yield None
        if found is None:
            return
        components.append(found)
    yield SemiResult(True, TermTuple(k, components))


def surjectivity_steps(e, budget):
    if not e.validated:
        raise NotValidatedError("endomorphism %s was not validated"
                                % e.format())
    return express_steps(e.backend, e.backend.generator_words(),
                         e.images, budget)


def surjectivity_semi(e, budget):
    """
    Look for terms expressing every generator in the images of ``e``.
    Landing certifies that ``e`` is onto.

    :return: :class:`SemiResult` with a :class:`TermTuple` certificate
    """
    result = run_semi(surjectivity_steps(e, budget))
    logger.debug("surjectivity of %s: %s after %d steps"
                 % (e.format(), result.status, result.steps))
    return result


def left_inverse_steps(e, budget):
    if not e.validated:
        raise NotValidatedError("endomorphism %s was not validated"
                                % e.format())
    backend = e.backend
    gens = backend.generator_words()
    for images in iter_element_tuples(backend, e.rank,
                                      budget.element_length_cap):
        if satisfies_relators(e.presentation, backend, images):
            g = Endomorphism(e.presentation, backend, images,
                             validated=True)
            if all(backend.equal(apply(g, img), gen)
                   for img, gen in zip(e.images, gens)):
                yield SemiResult(True, g)
                return
        yield None


def left_inverse_semi(e, budget):
    """
    Look for ``g`` with ``g o e = id`` among relator-satisfying element
    tuples whose normal forms are at most ``budget.element_length_cap``
    long.

    :return: :class:`SemiResult` with an :class:`Endomorphism` certificate
    """
    return run_semi(left_inverse_steps(e, budget))
