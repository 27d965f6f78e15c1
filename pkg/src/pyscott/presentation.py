#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Group presentations, freely reduced words and term tuples.

Letters are ``(index, sign)`` pairs. Throughout the package letters are
ordered ``g0 < g0^-1 < g1 < g1^-1 < ...``; the integer ``code`` of a letter
is ``2 * index`` for the generator and ``2 * index + 1`` for its inverse,
so ``code ^ 1`` is the inverse letter.

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""
from __future__ import print_function, division, absolute_import
import re
from collections import namedtuple
from functools import lru_cache
from .constant import FREE_GENERATOR_NAMES, ABELIAN_GENERATOR_NAMES, \
    DIHEDRAL_GENERATOR_NAMES, FREE_VARIABLE_PREFIX
from .errors import PresentationSyntaxError, ArityError, \
    InconsistentGeneratorsError


NAME_PATTERN = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")

GeneratorSymbol = namedtuple("GeneratorSymbol", ["name", "index"])

# Resumable position in the term enumeration: the total length of the
# next tuple and its rank among tuples of that total length.
TermCursor = namedtuple("TermCursor", ["total", "rank"])


def letter_code(index, sign):
    return 2 * index + (0 if sign > 0 else 1)


def code_letter(code):
    return (code >> 1, 1 if code % 2 == 0 else -1)


def variable_names(k, prefix=FREE_VARIABLE_PREFIX):
    return tuple("%s%d" % (prefix, i + 1) for i in range(k))


class Word(object):
    """
    A freely reduced word. ``letters`` is a tuple of ``(index, sign)``
    pairs; ``arena`` is the tuple of names the indices refer to (or None
    when the word is not attached to a naming context).

    Equality and hashing only look at the letters; the arena is naming
    metadata.
    """
    __slots__ = ("letters", "arena")

    def __init__(self, letters=(), arena=None):
        stack = []
        for letter in letters:
            index, sign = letter
            if sign not in (1, -1):
                raise ValueError("sign(%s) must be +1 or -1" % (sign,))
            if index < 0 or (arena is not None and index >= len(arena)):
                raise ArityError("letter index(%d) outside arena %s"
                                 % (index, arena))
            if stack and stack[-1][0] == index and stack[-1][1] == -sign:
                stack.pop()
            else:
                stack.append((int(index), int(sign)))
        self.letters = tuple(stack)
        self.arena = tuple(arena) if arena is not None else None

    @classmethod
    def _reduced(cls, letters, arena):
        word = cls.__new__(cls)
        word.letters = letters
        word.arena = arena
        return word

    @classmethod
    def generator(cls, index, arena=None, sign=1):
        return cls([(index, sign)], arena=arena)

    @classmethod
    def from_codes(cls, codes, arena=None):
        return cls([code_letter(c) for c in codes], arena=arena)

    def codes(self):
        return tuple(letter_code(i, s) for i, s in self.letters)

    def shortlex_key(self):
        return (len(self.letters), self.codes())

    def is_empty(self):
        return not self.letters

    def with_arena(self, arena):
        return Word._reduced(self.letters,
                             tuple(arena) if arena is not None else None)

    def exponent_sum(self, index):
        return sum(s for i, s in self.letters if i == index)

    def exponent_vector(self, rank):
        vector = [0] * rank
        for i, s in self.letters:
            vector[i] += s
        return vector

    def max_index(self):
        if not self.letters:
            return -1
        return max(i for i, _ in self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __ne__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters != other.letters

    def __hash__(self):
        return hash(self.letters)

    def __mul__(self, other):
        left = list(self.letters)
        right = other.letters
        j = 0
        while left and j < len(right) and left[-1][0] == right[j][0] and \
                left[-1][1] == -right[j][1]:
            left.pop()
            j += 1
        arena = self.arena if self.arena is not None else other.arena
        return Word._reduced(tuple(left) + right[j:], arena)

    def __invert__(self):
        return Word._reduced(
            tuple((i, -s) for i, s in reversed(self.letters)), self.arena)

    inverse = __invert__

    def __pow__(self, n):
        base = self if n >= 0 else ~self
        result = Word((), arena=self.arena)
        for _ in range(abs(n)):
            result = result * base
        return result

    def substitute(self, images, arena=None):
        """
        Replace generator ``i`` by ``images[i]`` and reduce.
        """
        result = []
        for index, sign in self.letters:
            image = images[index]
            part = image.letters if sign > 0 else \
                tuple((i, -s) for i, s in reversed(image.letters))
            for letter in part:
                if result and result[-1][0] == letter[0] and \
                        result[-1][1] == -letter[1]:
                    result.pop()
                else:
                    result.append(letter)
        if arena is None:
            for image in images:
                if image.arena is not None:
                    arena = image.arena
                    break
        return Word._reduced(tuple(result), arena)

    def format(self, names=None):
        return format_word(self, names)

    def to_json(self):
        return {"letters": [[i, s] for i, s in self.letters]}

    @classmethod
    def from_json(cls, content, arena=None):
        return cls([tuple(letter) for letter in content["letters"]],
                   arena=arena)

    def __repr__(self):
        return "Word(%s)" % format_word(self)

    __str__ = format


def free_reduce(raw, arena=None):
    """
    Freely reduce a sequence of ``(index, sign)`` letters.

    :param raw: iterable of letters
    :param arena: optional tuple of names the indices refer to
    :return: :class:`Word`
    """
    return Word(raw, arena=arena)


def _names_for(word, names):
    if names is not None:
        return names
    if word.arena is not None:
        return word.arena
    return None


def format_word(word, names=None):
    """
    Print a word in the presentation grammar: maximal runs of one letter
    become ``name^k``; the identity prints as ``1``.
    """
    names = _names_for(word, names)
    if not word.letters:
        return "1"
    factors = []
    letters = word.letters
    pos = 0
    while pos < len(letters):
        index, sign = letters[pos]
        run = 1
        while pos + run < len(letters) and letters[pos + run] == \
                (index, sign):
            run += 1
        name = names[index] if names is not None else "g%d" % index
        power = run * sign
        factors.append(name if power == 1 else "%s^%d" % (name, power))
        pos += run
    return "*".join(factors)


class TermTuple(object):
    """
    An n-tuple of words in the variables ``x1 ... xk``.
    """
    __slots__ = ("arity_in", "components")

    def __init__(self, arity_in, components):
        if arity_in < 0:
            raise ArityError("arity_in(%d) must be non-negative" % arity_in)
        arena = variable_names(arity_in)
        comps = []
        for comp in components:
            letters = comp.letters if isinstance(comp, Word) else comp
            comps.append(Word(letters, arena=arena))
        self.arity_in = arity_in
        self.components = tuple(comps)

    @classmethod
    def identity(cls, n):
        return cls(n, [Word.generator(i) for i in range(n)])

    @property
    def total_length(self):
        return sum(len(c) for c in self.components)

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __eq__(self, other):
        if not isinstance(other, TermTuple):
            return NotImplemented
        return self.arity_in == other.arity_in and \
            self.components == other.components

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.arity_in, self.components))

    def key(self):
        return (self.arity_in,
                tuple(c.letters for c in self.components))

    def format(self, names=None):
        return "(%s)" % ", ".join(format_word(c, names)
                                  for c in self.components)

    def to_json(self):
        return {"arity_in": self.arity_in,
                "components": [[[i, s] for i, s in c.letters]
                               for c in self.components]}

    @classmethod
    def from_json(cls, content):
        return cls(content["arity_in"],
                   [[tuple(letter) for letter in comp]
                    for comp in content["components"]])

    def __repr__(self):
        return "TermTuple%s" % self.format()

    __str__ = format


def _check_args(args):
    arena = None
    for arg in args:
        if arg.arena is None:
            continue
        if arena is None:
            arena = arg.arena
        elif arg.arena != arena:
            raise ArityError("arguments live over different arenas: "
                             "%s vs %s" % (arena, arg.arena))
    return arena


def evaluate_terms(t, args):
    """
    Substitute ``args[j]`` for ``x_{j+1}`` in every component of ``t``.

    :param t: :class:`TermTuple`
    :param args: sequence of :class:`Word`, one per variable
    :return: tuple of freely reduced words
    """
    args = tuple(args)
    if len(args) != t.arity_in:
        raise ArityError("term tuple takes %d arguments, got %d"
                         % (t.arity_in, len(args)))
    arena = _check_args(args)
    return tuple(c.substitute(args, arena=arena) for c in t.components)


def compose_terms(t, s):
    """
    Term tuple ``t o s``: evaluating it at ``u`` equals evaluating ``t``
    at the evaluation of ``s`` at ``u``.
    """
    if t.arity_in != len(s):
        raise ArityError("cannot compose: t takes %d arguments, s has %d "
                         "components" % (t.arity_in, len(s)))
    comps = [c.substitute(s.components) for c in t.components]
    return TermTuple(s.arity_in, comps)


# -- enumeration order ----------------------------------------------------

@lru_cache(maxsize=None)
def count_reduced_words(k, length):
    """
    Number of freely reduced words of the given length over k letters.
    """
    if length == 0:
        return 1
    if k == 0:
        return 0
    return 2 * k * (2 * k - 1) ** (length - 1)


@lru_cache(maxsize=None)
def count_term_tuples(n, k, total):
    """
    Number of n-tuples of reduced words over k variables whose lengths
    add up to ``total``.
    """
    if n == 0:
        return 1 if total == 0 else 0
    return sum(count_reduced_words(k, length) *
               count_term_tuples(n - 1, k, total - length)
               for length in range(total + 1))


def count_term_tuples_upto(n, k, total):
    return sum(count_term_tuples(n, k, t) for t in range(total + 1))


def _allowed_codes(k, prev):
    if prev is None:
        return list(range(2 * k))
    return [c for c in range(2 * k) if c != prev ^ 1]


def unrank_reduced_word(k, length, rank):
    codes = []
    prev = None
    for pos in range(length):
        block = (2 * k - 1) ** (length - pos - 1)
        idx, rank = divmod(rank, block)
        prev = _allowed_codes(k, prev)[idx]
        codes.append(prev)
    return tuple(codes)


def rank_reduced_word(k, codes):
    rank = 0
    prev = None
    for pos, code in enumerate(codes):
        block = (2 * k - 1) ** (len(codes) - pos - 1)
        rank += _allowed_codes(k, prev).index(code) * block
        prev = code
    return rank


def unrank_term_tuple(n, k, total, rank):
    """
    The tuple at ``rank`` among n-tuples of total length ``total``:
    the first component is compared shortlex first, then the second, ...
    """
    comps = []
    remaining = total
    for i in range(n):
        rest = n - i - 1
        for length in range(remaining + 1):
            tail = count_term_tuples(rest, k, remaining - length)
            block = count_reduced_words(k, length) * tail
            if rank < block:
                break
            rank -= block
        word_rank, rank = divmod(rank, tail)
        comps.append(Word.from_codes(
            unrank_reduced_word(k, length, word_rank)))
        remaining -= length
    return TermTuple(k, comps)


def term_rank(t):
    """
    Rank of ``t`` among tuples of the same shape and total length.
    """
    n, k = len(t), t.arity_in
    remaining = t.total_length
    rank = 0
    for i, comp in enumerate(t.components):
        rest = n - i - 1
        for length in range(len(comp)):
            rank += count_reduced_words(k, length) * \
                count_term_tuples(rest, k, remaining - length)
        rank += rank_reduced_word(k, comp.codes()) * \
            count_term_tuples(rest, k, remaining - len(comp))
        remaining -= len(comp)
    return rank


def term_position(t):
    """
    0-based position of ``t`` in :func:`enumerate_terms` order.
    """
    n, k = len(t), t.arity_in
    return count_term_tuples_upto(n, k, t.total_length - 1) + term_rank(t)


def term_cursor_at(n, k, position):
    """
    Cursor pointing at the tuple with the given global position, or None
    if the enumeration has fewer tuples.
    """
    total = 0
    while True:
        count = count_term_tuples(n, k, total)
        if count == 0 and total > 0 and (k == 0 or n == 0):
            return None
        if position < count:
            return TermCursor(total, position)
        position -= count
        total += 1


def initial_term_cursor():
    return TermCursor(0, 0)


def enumerate_terms(n_components, k_vars, cursor=None):
    """
    Return the term tuple at ``cursor`` and the cursor of its successor.

    Tuples are ordered by total length, then shortlex component by
    component with ``x1 < x1^-1 < x2 < ...``. Every freely reduced tuple
    appears exactly once.

    :return: ``(TermTuple, next_cursor)``, or ``(None, None)`` when the
        enumeration is finite and exhausted (no variables or no
        components)
    """
    n, k = n_components, k_vars
    if cursor is None:
        cursor = initial_term_cursor()
    total, rank = cursor
    while rank >= count_term_tuples(n, k, total):
        if total > 0 and (k == 0 or n == 0):
            return None, None
        rank -= count_term_tuples(n, k, total)
        total += 1
    term = unrank_term_tuple(n, k, total, rank)
    return term, TermCursor(total, rank + 1)


def iter_terms(n_components, k_vars, cursor=None, limit=None,
               max_total=None):
    """
    Generator over :func:`enumerate_terms`; yields ``(term, cursor)``
    where ``cursor`` resumes right after ``term``.
    """
    emitted = 0
    while limit is None or emitted < limit:
        term, cursor = enumerate_terms(n_components, k_vars, cursor)
        if term is None:
            return
        if max_total is not None and term.total_length > max_total:
            return
        yield term, cursor
        emitted += 1


def iter_reduced_words(k, max_length=None, arena=None):
    """
    All reduced words over k letters in shortlex order.
    """
    length = 0
    while max_length is None or length <= max_length:
        count = count_reduced_words(k, length)
        if count == 0:
            return
        for rank in range(count):
            yield Word.from_codes(unrank_reduced_word(k, length, rank),
                                  arena=arena)
        length += 1


# -- presentations ----------------------------------------------------------

class Presentation(object):
    """
    Finite presentation ``< a1, ..., an | r1, ..., rm >``.

    :param generators: generator names (or :class:`GeneratorSymbol`)
    :param relators: words (or raw letter sequences) over the generators;
        relators that reduce to the identity are dropped
    """
    def __init__(self, generators, relators=()):
        names = []
        for gen in generators:
            name = gen.name if isinstance(gen, GeneratorSymbol) else gen
            if not NAME_PATTERN.match(name):
                raise ValueError("generator name(%s) must match %s"
                                 % (name, NAME_PATTERN.pattern))
            if name in names:
                raise ValueError("duplicate generator name(%s)" % name)
            names.append(name)
        if not names:
            raise ValueError("a presentation needs at least one generator")
        self.names = tuple(names)
        self.generators = tuple(GeneratorSymbol(name, i)
                                for i, name in enumerate(names))
        rels = []
        for rel in relators:
            letters = rel.letters if isinstance(rel, Word) else rel
            word = Word(letters, arena=self.names)
            if word.letters:
                rels.append(word)
        self.relators = tuple(rels)

    @property
    def rank(self):
        return len(self.names)

    @property
    def arena(self):
        return self.names

    def generator_words(self):
        """
        The fixed generating tuple, as words.
        """
        return tuple(Word.generator(i, arena=self.names)
                     for i in range(self.rank))

    def word(self, text):
        return parse_word(text, self.names)

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        return self.names == other.names and \
            self.relators == other.relators

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.names, self.relators))

    def to_json(self):
        return {"generators": list(self.names),
                "relators": [[[i, s] for i, s in r.letters]
                             for r in self.relators]}

    @classmethod
    def from_json(cls, content):
        return cls(content["generators"],
                   [[tuple(letter) for letter in rel]
                    for rel in content["relators"]])

    def __repr__(self):
        return format_presentation(self)


def format_presentation(p):
    relators = ", ".join(format_word(r, p.names) for r in p.relators)
    if relators:
        return "< %s | %s >" % (", ".join(p.names), relators)
    return "< %s | >" % ", ".join(p.names)


def free_presentation(rank, names=None):
    if names is None:
        if rank == 1:
            names = ("a",)
        elif rank <= len(FREE_GENERATOR_NAMES):
            names = FREE_GENERATOR_NAMES[:rank]
        else:
            names = tuple("g%d" % (i + 1) for i in range(rank))
    return Presentation(names)


def abelian_presentation(rank, names=None):
    if names is None:
        if rank <= len(ABELIAN_GENERATOR_NAMES):
            names = ABELIAN_GENERATOR_NAMES[:rank]
        else:
            names = tuple("g%d" % (i + 1) for i in range(rank))
    relators = []
    for i in range(rank):
        for j in range(i + 1, rank):
            relators.append([(i, 1), (j, 1), (i, -1), (j, -1)])
    return Presentation(names, relators)


def dihedral_presentation():
    r, s = 0, 1
    return Presentation(DIHEDRAL_GENERATOR_NAMES,
                        [[(s, 1), (s, 1)],
                         [(s, 1), (r, 1), (s, 1), (r, 1)]])


def cyclic_presentation(order, name="a"):
    return Presentation([name], [[(0, 1)] * order])


# -- parser -------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s+|#[^\n]*|[<>|,*^]|-?\d+|[a-zA-Z][a-zA-Z0-9_]*")


class _Token(object):
    __slots__ = ("kind", "text", "line", "column")

    def __init__(self, kind, text, line, column):
        self.kind = kind
        self.text = text
        self.line = line
        self.column = column


def _tokenize(text):
    tokens = []
    pos, line, column = 0, 1, 1
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise PresentationSyntaxError(
                "unexpected character %r" % text[pos], line, column)
        chunk = match.group(0)
        first = chunk[0]
        if first.isspace() or first == "#":
            kind = None
        elif first.isalpha():
            kind = "name"
        elif first.isdigit() or first == "-":
            kind = "int"
        else:
            kind = chunk
        if kind is not None:
            tokens.append(_Token(kind, chunk, line, column))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            column = len(chunk) - chunk.rfind("\n")
        else:
            column += len(chunk)
        pos = match.end()
    tokens.append(_Token("eof", "", line, column))
    return tokens


class _Parser(object):

    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def current(self):
        return self.tokens[self.pos]

    def error(self, message, token=None):
        token = token or self.current
        raise PresentationSyntaxError(message, token.line, token.column)

    def expect(self, kind):
        token = self.current
        if token.kind != kind:
            self.error("expected %r, found %r"
                       % (kind, token.text or "end of input"))
        self.pos += 1
        return token

    def accept(self, kind):
        if self.current.kind == kind:
            self.pos += 1
            return True
        return False

    def parse_presentation(self):
        self.expect("<")
        names = []
        while True:
            token = self.expect("name")
            if token.text in names:
                self.error("duplicate generator name %r" % token.text,
                           token)
            names.append(token.text)
            if not self.accept(","):
                break
        self.expect("|")
        relators = []
        if self.current.kind != ">":
            relators.append(self.parse_word(names))
            while self.accept(","):
                relators.append(self.parse_word(names))
        self.expect(">")
        self.expect("eof")
        return Presentation(names, relators)

    def parse_word(self, names):
        letters = list(self.parse_factor(names))
        while self.accept("*"):
            letters.extend(self.parse_factor(names))
        return Word(letters, arena=tuple(names))

    def parse_factor(self, names):
        token = self.current
        if token.kind == "int" and token.text == "1":
            self.pos += 1
            index = None
        elif token.kind == "name":
            self.pos += 1
            if token.text not in names:
                self.error("undeclared generator %r" % token.text, token)
            index = names.index(token.text)
        else:
            self.error("expected a generator name, found %r"
                       % (token.text or "end of input"))
        power = 1
        if self.accept("^"):
            power = int(self.expect("int").text)
        if index is None:
            return []
        sign = 1 if power > 0 else -1
        return [(index, sign)] * abs(power)


def parse_presentation(text):
    """
    Parse ``< a, b | a^2, b^3, a*b*a*b >``.

    :raises PresentationSyntaxError: with line and column of the first
        offending token
    """
    return _Parser(text).parse_presentation()


def load_presentation(filename):
    with open(filename, "r") as fh:
        return parse_presentation(fh.read())


def parse_word(text, names):
    parser = _Parser(text)
    word = parser.parse_word(list(names))
    parser.expect("eof")
    return word


def parse_tuple(text, names):
    """
    Parse a comma separated tuple of words, e.g. ``"y, x^-1*y"``.
    """
    parser = _Parser(text)
    words = [parser.parse_word(list(names))]
    while parser.accept(","):
        words.append(parser.parse_word(list(names)))
    parser.expect("eof")
    return tuple(words)


# -- generator changes ----------------------------------------------------

def _default_new_names(m):
    if m <= 3:
        return ("u", "v", "w")[:m]
    return tuple("u%d" % (i + 1) for i in range(m))


def change_generators(p, new_gens_in_old, old_gens_in_new, backend,
                      names=None):
    """
    Rewrite ``p`` over new generators (a Tietze transformation).

    :param p: :class:`Presentation`
    :param new_gens_in_old: words over ``p``'s generators defining each new
        generator
    :param old_gens_in_new: :class:`TermTuple` whose i-th component writes
        the i-th old generator in the new generators
    :param backend: word oracle for ``p``; certifies that every old
        generator is recovered
    :param names: names of the new generators
    :return: :class:`Presentation` over the new generators
    """
    new_gens_in_old = tuple(new_gens_in_old)
    m = len(new_gens_in_old)
    if old_gens_in_new.arity_in != m:
        raise ArityError("old_gens_in_new takes %d variables, expected %d"
                         % (old_gens_in_new.arity_in, m))
    if len(old_gens_in_new) != p.rank:
        raise ArityError("old_gens_in_new has %d components, expected %d"
                         % (len(old_gens_in_new), p.rank))
    if names is None:
        names = _default_new_names(m)
    if len(names) != m:
        raise ArityError("got %d names for %d new generators"
                         % (len(names), m))

    recovered = evaluate_terms(old_gens_in_new, new_gens_in_old)
    for index, (word, gen) in enumerate(zip(recovered,
                                            p.generator_words())):
        if not backend.is_identity(word * ~gen):
            raise InconsistentGeneratorsError(
                "generator %s is not recovered: got %s"
                % (p.names[index], format_word(word, p.names)))

    images = old_gens_in_new.components
    relators = [r.substitute(images) for r in p.relators]
    for j, definition in enumerate(new_gens_in_old):
        relators.append(~Word.generator(j) * definition.substitute(images))
    return Presentation(names, [r.letters for r in relators])
