#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
log util

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""

from __future__ import (print_function, division, absolute_import)
from . import logger
from .formula import classify, streams


def budget_table(budget):
    logger.info("*" * 20 + " Budget " + "*" * 20)
    logger.info("PAR                   VALUE")
    for attr in ("term_length_cap", "element_length_cap", "step_cap"):
        logger.info("%-18s  %8d" % (attr, getattr(budget, attr)))


def formula_summary(name, f):
    """
    Print out the complexity tag and the size of every stream in ``f``
    """
    logger.info("*" * 20 + " %s " % name + "*" * 20)
    logger.info("Class: %s" % classify(f).format())
    handles = streams(f)
    if not handles:
        logger.info("No streams")
        return
    logger.info("STREAM      FORMULAS   SCANNED   CURSOR")
    for handle in handles:
        logger.info("%-10s  %8d  %8d   (%d, %d)" % (
            handle.kind, len(handle), handle.scanned, handle.cursor[0],
            handle.cursor[1]))


def probe_report_table(report):
    logger.info("*" * 20 + " Probe Report: %s " % report.backend_name +
                "*" * 20)
    logger.info("checked:       %6d" % report.checked)
    logger.info("refuted:       %6d" % report.refuted)
    logger.info("automorphisms: %6d" % report.automorphisms)
    logger.info("failures:      %6d" % len(report.failures))
    for failure in report.failures:
        logger.warning("FAILURE: images=(%s) theta=%s orbit=%s" % (
            ", ".join(w.format() for w in failure["images"]),
            failure["theta"], failure["orbit"]))


def oracle_table(results):
    """
    Pass/fail table of acceptance checks, as text.
    """
    width = max([len(r.name) for r in results] + [5])
    lines = ["=" * (width + 32),
             "%-*s  %-6s  %8s  %s" % (width, "CHECK", "RESULT", "CASES",
                                      "DETAIL"),
             "-" * (width + 32)]
    for r in results:
        lines.append("%-*s  %-6s  %8d  %s" % (
            width, r.name, "PASS" if r.passed else "FAIL", r.checked,
            r.detail))
    lines.append("=" * (width + 32))
    passed = sum(1 for r in results if r.passed)
    lines.append("%d of %d checks passed" % (passed, len(results)))
    return "\n".join(lines) + "\n"
