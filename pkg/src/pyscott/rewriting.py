#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Shortlex string rewriting and bounded Knuth-Bendix completion.

Words are encoded as strings with one character per letter,
``chr(_BASE + code)``. With that encoding Python's string order on words of
equal length is the lexicographic order ``g0 < g0^-1 < g1 < ...``, so
``(len(s), s)`` is the shortlex key.

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""
from __future__ import print_function, division, absolute_import
from collections import defaultdict
from . import logger
from .constant import DEFAULT_KB_CAP, MAX_KB_RULES
from .errors import CapOverflowError, NotCertifiedError, \
    PresentationSyntaxError
from .presentation import Word, parse_word

_BASE = 0x100


def encode(word):
    return "".join(chr(_BASE + c) for c in word.codes())


def decode(string, arena=None):
    return Word.from_codes([ord(ch) - _BASE for ch in string], arena=arena)


def shortlex_ordered(a, b):
    """
    Orient a pair so the first entry is the shortlex-larger one.
    """
    if (len(a), a) > (len(b), b):
        return (a, b)
    return (b, a)


def reduced(string, rule_list):
    while True:
        before = string
        for left, right in rule_list:
            string = string.replace(left, right)
        if string == before:
            return string


def _cancellation_rules(rank):
    rules = []
    for index in range(rank):
        g = chr(_BASE + 2 * index)
        ginv = chr(_BASE + 2 * index + 1)
        rules.append((g + ginv, ""))
        rules.append((ginv + g, ""))
    return rules


class RewriteRules(object):
    """
    A shortlex-decreasing rewriting system over the symmetrised alphabet
    of a presentation. Free cancellation ``g g^-1 -> 1`` is always part of
    the system; :attr:`rules` lists the other rules only.

    :param presentation: the presentation the rules realise
    :param pairs: ``(lhs, rhs)`` pairs of encoded strings
    :param certified: True once every critical pair has been resolved
    """
    def __init__(self, presentation, pairs, certified=False, rounds=0):
        self.presentation = presentation
        self.pairs = list(pairs)
        self.certified = certified
        self.rounds = rounds
        self._cancel = set(_cancellation_rules(presentation.rank))

    @property
    def rules(self):
        names = self.presentation.names
        return [(decode(left, names), decode(right, names))
                for left, right in self.pairs
                if (left, right) not in self._cancel]

    def reduce(self, word):
        """
        Rewrite ``word`` to an irreducible word.

        :raises NotCertifiedError: if the system was not completed; the
            irreducible word would not be a normal form
        """
        if not self.certified:
            raise NotCertifiedError(
                "rewriting system for %s is not confluence certified"
                % (self.presentation,))
        return decode(reduced(encode(word), self.pairs),
                      self.presentation.names)

    def format(self):
        names = self.presentation.names
        return "\n".join("%s -> %s" % (lhs.format(names), rhs.format(names))
                         for lhs, rhs in self.rules)

    def __len__(self):
        return len(self.pairs)

    def __repr__(self):
        return "RewriteRules(%d rules, certified=%s)" % (
            len(self.rules), self.certified)


def rules_from_presentation(presentation, extra_rules=()):
    """
    Initial system: free cancellation, every cyclic permutation of every
    relator and of its inverse rewritten to the identity, and any extra
    ``(lhs, rhs)`` word pairs.
    """
    pairs = set(_cancellation_rules(presentation.rank))
    for relator in presentation.relators:
        for word in (relator, ~relator):
            string = encode(word)
            for i in range(len(string)):
                rotated = encode(decode(string[i:] + string[:i]))
                if rotated:
                    pairs.add((rotated, ""))
    for lhs, rhs in extra_rules:
        left, right = shortlex_ordered(encode(lhs), encode(rhs))
        if left != right:
            pairs.add((left, right))
    return RewriteRules(presentation, sorted(pairs))


def kb_complete(rules, cap=DEFAULT_KB_CAP, max_rules=MAX_KB_RULES):
    """
    Knuth-Bendix completion under shortlex.

    :param rules: :class:`RewriteRules` to start from
    :param cap: max completion rounds
    :param max_rules: max size of the rule list
    :return: confluence certified :class:`RewriteRules`
    :raises CapOverflowError: when either cap is hit
    """
    rule_set = set()
    for left, right in rules.pairs:
        if left != right:
            rule_set.add(shortlex_ordered(left, right))
    rule_list = sorted(rule_set)
    state = {"num_reduced": 0}

    def replace_rule_at_index(i, new1, new2):
        rule_set.remove(rule_list[i])
        del rule_list[i]
        if i < state["num_reduced"]:
            state["num_reduced"] -= 1
        new_rule = shortlex_ordered(new1, new2)
        if new_rule[0] != new_rule[1] and new_rule not in rule_set:
            rule_set.add(new_rule)
            rule_list.append(new_rule)

    rounds = 0
    while True:
        rounds += 1
        if rounds > cap:
            raise CapOverflowError(
                "Knuth-Bendix did not complete within %d rounds" % cap,
                cap=cap)

        # interreduce: no lhs occurs inside another lhs or any rhs
        while state["num_reduced"] < len(rule_list):
            k = state["num_reduced"]
            left1, right1 = rule_list[k]
            for i, (left2, right2) in enumerate(rule_list[:k + 1]):
                if left2 in right1:
                    replace_rule_at_index(
                        k, right1.replace(left2, right2), left1)
                    break
                if left1 in right2:
                    replace_rule_at_index(
                        i, right2.replace(left1, right1), left2)
                    break
                if i == k:
                    continue
                if left2 in left1:
                    replace_rule_at_index(
                        k, left1.replace(left2, right2), right1)
                    break
                if left1 in left2:
                    replace_rule_at_index(
                        i, left2.replace(left1, right1), right2)
                    break
            else:
                state["num_reduced"] += 1

        # critical pairs from proper overlaps
        prefix_to_rules = defaultdict(list)
        suffix_to_rules = defaultdict(list)
        for left, right in rule_list:
            for i in range(1, len(left)):
                prefix_to_rules[left[:i]].append((left, right))
                suffix_to_rules[left[i:]].append((left, right))
        critical_pairs = []
        for aff in sorted(prefix_to_rules.keys() & suffix_to_rules.keys()):
            for left1, right1 in prefix_to_rules[aff]:
                left1_end = left1[len(aff):]
                for left2, right2 in suffix_to_rules[aff]:
                    left2_start = left2[:-len(aff)]
                    crit1 = reduced(right2 + left1_end, rule_list)
                    crit2 = reduced(left2_start + right1, rule_list)
                    if crit1 != crit2:
                        critical_pairs.append(shortlex_ordered(crit1, crit2))

        logger.debug("Knuth-Bendix round %d: %d rules, %d critical pairs"
                     % (rounds, len(rule_list), len(critical_pairs)))
        if not critical_pairs:
            break
        for pair in critical_pairs:
            if pair not in rule_set:
                rule_set.add(pair)
                rule_list.append(pair)
        if len(rule_list) > max_rules:
            raise CapOverflowError(
                "Knuth-Bendix exceeded %d rules" % max_rules, cap=max_rules)

    logger.info("Knuth-Bendix completed after %d rounds with %d rules"
                % (rounds, len(rule_list)))
    return RewriteRules(rules.presentation, sorted(rule_list),
                        certified=True, rounds=rounds)


def parse_rewrite_rules(text, names):
    """
    Parse one ``lhs -> rhs`` rule per line; ``#`` starts a comment.

    :return: list of ``(Word, Word)`` pairs
    """
    pairs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" not in line:
            raise PresentationSyntaxError("expected 'lhs -> rhs'",
                                          lineno, 1)
        lhs, rhs = line.split("->", 1)
        try:
            pairs.append((parse_word(lhs, names), parse_word(rhs, names)))
        except PresentationSyntaxError as err:
            raise PresentationSyntaxError(
                "bad rule %r: %s" % (line, err), lineno, 1)
    return pairs


def load_rewrite_rules(filename, names):
    with open(filename, "r") as fh:
        return parse_rewrite_rules(fh.read(), names)
