#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Command line interface.

Results go to stdout, logs to stderr. Exit codes: 0 success or
positive decision, 1 negative decision, 2 unknown within budget, 64
usage error.

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""
from __future__ import print_function, division, absolute_import
import argparse
import io
import logging
import multiprocessing
import shlex
import sys
from . import logger
from .config import Budget, RunConfig
from .constant import BACKEND_KINDS, DEFAULT_BUDGET_LEVEL, \
    DEFAULT_COSET_CAP, DEFAULT_KB_CAP, DEFAULT_SEED, EXIT_OK, \
    EXIT_NEGATIVE, EXIT_UNKNOWN, EXIT_USAGE, IN_ORBIT, NOT_IN_ORBIT, \
    UNKNOWN
from .errors import PyscottError, CapOverflowError, NoOrbitDeciderError, \
    NotCertifiedError
from .etypes import strongly_defined_probe, theta_check_embedding, \
    exists_plus_probe
from .intmatrix import IntMatrix
from .log_util import budget_table, formula_summary, probe_report_table, \
    oracle_table
from .morphisms import endo_from_tuple, surjectivity_semi, \
    left_inverse_semi
from .oracle import acceptance_suite
from .orbit import orbit_decide, orbit_semi_yes, orbit_semi_no, \
    orbit_dovetail
from .presentation import TermTuple, parse_word, parse_tuple, \
    variable_names, format_presentation
from .scott import build_theta_prefix, emit_scott_sentence, \
    formula_document
from .tsets import enumerate_T, enumerate_That, member_T_semi, \
    member_T_decide
from .util import dumps_json, dumps_json_line, versioned, jsonable

DECISION_CODES = {IN_ORBIT: EXIT_OK, NOT_IN_ORBIT: EXIT_NEGATIVE,
                  UNKNOWN: EXIT_UNKNOWN}


class UsageParser(argparse.ArgumentParser):
    """
    argparse exits with 2 on bad usage; 2 means Unknown here.
    """
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    group = common.add_argument_group("backend")
    group.add_argument("--backend", choices=BACKEND_KINDS, default="free")
    group.add_argument("--rank", type=int, default=None,
                       help="generator count of free/abelian backends")
    group.add_argument("--presentation", default=None, metavar="FILE")
    group.add_argument("--rules", default=None, metavar="FILE",
                       help="lhs -> rhs rules for the rewrite backend")
    group.add_argument("--coset-cap", type=int, default=DEFAULT_COSET_CAP)
    group.add_argument("--kb-cap", type=int, default=DEFAULT_KB_CAP)
    group.add_argument("--assert-hopfian", action="store_true")
    group = common.add_argument_group("run")
    group.add_argument("--budget", type=int, default=DEFAULT_BUDGET_LEVEL,
                       metavar="N")
    group.add_argument("--format", dest="output_format", default="text",
                       choices=RunConfig._format_options)
    group.add_argument("--json", dest="output_format", action="store_const",
                       const="json")
    group.add_argument("--seed", type=int, default=DEFAULT_SEED)
    group.add_argument("-v", "--verbose", action="store_true")
    group.add_argument("-q", "--quiet", action="store_true")
    return common


def _add(subparsers, name, func, common, help_text, *options):
    p = subparsers.add_parser(name, parents=[common], help=help_text)
    for flags, kwargs in options:
        p.add_argument(*flags, **kwargs)
    p.set_defaults(func=func)
    return p


def _opt(*flags, **kwargs):
    return flags, kwargs


def build_parser():
    parser = UsageParser(
        prog="pyscott",
        description="Orbits of generating tuples, term sets and Scott "
                    "sentences of finitely presented groups")
    parser.add_argument("--batch", default=None, metavar="FILE",
                        help="run one command line per line of FILE")
    parser.add_argument("--jobs", type=int, default=1)
    common = _common_options()
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    tuple_opt = _opt("--tuple", required=True, help='e.g. "y, x"')
    images_opt = _opt("--images", required=True,
                      help="images of the generators")

    _add(sub, "parse", cmd_parse, common, "print the presentation")
    _add(sub, "wp", cmd_wp, common, "word problem",
         _opt("--word", required=True))
    _add(sub, "nf", cmd_nf, common, "normal form",
         _opt("--word", required=True))
    _add(sub, "elements", cmd_elements, common, "list elements",
         _opt("--max-length", type=int, default=None))

    endo = sub.add_parser("endo", help="endomorphisms")
    endo_sub = endo.add_subparsers(dest="action", metavar="ACTION")
    _add(endo_sub, "apply", cmd_endo_apply, common, "apply to a word",
         images_opt, _opt("--word", default=None))
    _add(endo_sub, "surjective", cmd_endo_surjective, common,
         "search for expressing terms", images_opt)
    _add(endo_sub, "left-inverse", cmd_endo_left_inverse, common,
         "search for a left inverse", images_opt)

    tset = sub.add_parser("tset", help="term sets")
    tset_sub = tset.add_subparsers(dest="action", metavar="ACTION")
    _add(tset_sub, "enum", cmd_tset_enum, common, "enumerate T(b)",
         tuple_opt)
    _add(tset_sub, "member", cmd_tset_member, common,
         "membership in T(b), or in T(a) without --tuple",
         _opt("--term", required=True, help='e.g. "x1^2, x2"'),
         _opt("--tuple", default=None))
    _add(tset_sub, "that", cmd_tset_that, common,
         "enumerate the complement of T(a)")

    orbit = sub.add_parser("orbit", help="weak Whitehead problem")
    orbit_sub = orbit.add_subparsers(dest="action", metavar="ACTION")
    target = [_opt("--tuple", default=None),
              _opt("--matrix", default=None,
                   help='exponent rows for abelian backends, "2 0; 0 1"')]
    _add(orbit_sub, "decide", cmd_orbit_decide, common,
         "decide orbit membership", *target)
    _add(orbit_sub, "semi-yes", cmd_orbit_semi_yes, common,
         "search for an automorphism certificate", *target)
    _add(orbit_sub, "semi-no", cmd_orbit_semi_no, common,
         "search for a falsified orbit formula conjunct", *target)
    _add(orbit_sub, "dovetail", cmd_orbit_dovetail, common,
         "interleave both searches", *target)

    scott = sub.add_parser("scott", help="orbit formula and Scott sentence")
    scott_sub = scott.add_subparsers(dest="action", metavar="ACTION")
    _add(scott_sub, "theta", cmd_scott_theta, common,
         "orbit formula prefix")
    _add(scott_sub, "sentence", cmd_scott_sentence, common,
         "Scott sentence prefix")

    etypes = sub.add_parser("etypes", help="positive existential types")
    etypes_sub = etypes.add_subparsers(dest="action", metavar="ACTION")
    _add(etypes_sub, "probe", cmd_etypes_probe, common,
         "refuted-or-automorphic probe",
         _opt("--samples", type=int, default=100),
         _opt("--length-cap", type=int, default=None))
    _add(etypes_sub, "theta", cmd_etypes_theta, common,
         "orbit formula check of one endomorphism", images_opt)
    _add(etypes_sub, "exists", cmd_etypes_exists, common,
         "equation system violation search", images_opt)

    _add(sub, "oracle-check", cmd_oracle_check, common,
         "run the acceptance suite", _opt("--quick", action="store_true"))
    return parser


# -- helpers ----------------------------------------------------------------

def _run_config(args):
    return RunConfig(
        backend=args.backend, rank=args.rank,
        presentation_file=args.presentation, rules_file=args.rules,
        coset_cap=args.coset_cap, kb_cap=args.kb_cap,
        assert_hopfian=args.assert_hopfian,
        budget=Budget.from_level(args.budget),
        output_format=args.output_format, seed=args.seed)


def _set_verbosity(args):
    if getattr(args, "verbose", False):
        logger.setLevel(logging.DEBUG)
    elif getattr(args, "quiet", False):
        logger.setLevel(logging.WARNING)
    else:
        logger.setLevel(logging.INFO)


def _words(backend, text):
    words = parse_tuple(text, backend.names)
    if len(words) != backend.rank:
        raise ValueError("expected %d words, got %d in '%s'"
                         % (backend.rank, len(words), text))
    return words


def _target(args, backend):
    if (args.tuple is None) == (args.matrix is None):
        raise ValueError("give exactly one of --tuple and --matrix")
    if args.tuple is not None:
        return _words(backend, args.tuple)
    if not hasattr(backend, "word_of_vector"):
        raise ValueError("--matrix needs the abelian backend, got %s"
                         % backend.describe())
    matrix = IntMatrix.from_text(args.matrix)
    if matrix.shape != (backend.rank, backend.rank):
        raise ValueError("matrix shape %s does not fit rank %d"
                         % (matrix.shape, backend.rank))
    return tuple(backend.word_of_vector(row) for row in matrix.tolist())


def _endomorphism(args, backend):
    return endo_from_tuple(backend.presentation, backend,
                           _words(backend, args.images))


def _format_tuple(words):
    return "(%s)" % ", ".join(w.format() for w in words)


def _write_result(out, config, content, text):
    if config.output_format == "json":
        out.write(dumps_json(versioned(jsonable(content))))
    else:
        out.write(text + "\n")


def _semi_no_text(result):
    cert = result.certificate
    if cert["kind"] == "relator":
        return "NotInOrbit relator %s fails" % cert["relator"].format()
    return "NotInOrbit term %s at witness %s" % (
        cert["term"].format(), _format_tuple(cert["witness"]))


# -- commands ---------------------------------------------------------------

def cmd_parse(args, config, out):
    backend = config.make_backend()
    p = backend.presentation
    _write_result(out, config, {"presentation": p,
                                "backend": backend.to_json()},
                  "%s\n; backend: %s" % (format_presentation(p),
                                         backend.describe()))
    return EXIT_OK


def cmd_wp(args, config, out):
    backend = config.make_backend()
    word = parse_word(args.word, backend.names)
    identity = backend.is_identity(word)
    _write_result(out, config,
                  {"word": word.format(), "identity": identity},
                  "identity" if identity else "not identity")
    return EXIT_OK if identity else EXIT_NEGATIVE


def cmd_nf(args, config, out):
    backend = config.make_backend()
    nf = backend.normal_form(parse_word(args.word, backend.names))
    _write_result(out, config, {"word": args.word, "normal_form": nf},
                  nf.format())
    return EXIT_OK


def cmd_elements(args, config, out):
    backend = config.make_backend()
    max_length = args.max_length
    if max_length is None and not backend.is_finite:
        max_length = 2
    for w in backend.iter_elements(max_length):
        if config.output_format == "json":
            out.write(dumps_json_line(versioned({"element": w.format(),
                                                 "length": len(w)})))
        else:
            out.write(w.format() + "\n")
    return EXIT_OK


def cmd_endo_apply(args, config, out):
    backend = config.make_backend()
    e = _endomorphism(args, backend)
    if args.word is None:
        _write_result(out, config, e, e.format())
        return EXIT_OK
    image = e.apply(parse_word(args.word, backend.names))
    _write_result(out, config, {"endomorphism": e, "image": image},
                  image.format())
    return EXIT_OK


def cmd_endo_surjective(args, config, out):
    backend = config.make_backend()
    result = surjectivity_semi(_endomorphism(args, backend), config.budget)
    if result.landed:
        text = "Yes %s" % result.certificate.format()
    else:
        text = "Unknown after %d steps" % result.steps
    _write_result(out, config, result, text)
    return EXIT_OK if result.landed else EXIT_UNKNOWN


def cmd_endo_left_inverse(args, config, out):
    backend = config.make_backend()
    result = left_inverse_semi(_endomorphism(args, backend), config.budget)
    if result.landed:
        text = "Yes %s" % result.certificate.format()
    else:
        text = "Unknown after %d steps" % result.steps
    _write_result(out, config, result, text)
    return EXIT_OK if result.landed else EXIT_UNKNOWN


def cmd_tset_enum(args, config, out):
    backend = config.make_backend()
    for entry in enumerate_T(backend, _words(backend, args.tuple),
                             config.budget):
        out.write(dumps_json_line(versioned({
            "term": entry.term.format(), "status": "member",
            "witness": [w.format() for w in entry.witness],
            "position": entry.position})))
    return EXIT_OK


def cmd_tset_member(args, config, out):
    backend = config.make_backend()
    n = backend.rank
    term = TermTuple(n, parse_tuple(args.term, variable_names(n)))
    if len(term) != n:
        raise ValueError("expected %d term components, got %d"
                         % (n, len(term)))
    if args.tuple is None:
        member = member_T_decide(term, backend)
        out.write(dumps_json_line(versioned({
            "term": term.format(),
            "status": "member" if member else "outside"})))
        return EXIT_OK if member else EXIT_NEGATIVE
    result = member_T_semi(term, _words(backend, args.tuple), backend,
                           config.budget)
    content = {"term": term.format(), "status": result.status,
               "steps": result.steps}
    if result.landed:
        content["witness"] = [w.format()
                              for w in result.certificate["witness"]]
    out.write(dumps_json_line(versioned(content)))
    return EXIT_OK if result.landed else EXIT_UNKNOWN


def cmd_tset_that(args, config, out):
    backend = config.make_backend()
    for term, position, _ in enumerate_That(backend, config.budget):
        out.write(dumps_json_line(versioned({
            "term": term.format(), "status": "outside",
            "position": position})))
    return EXIT_OK


def cmd_orbit_decide(args, config, out):
    backend = config.make_backend()
    verdict = orbit_decide(backend, None, _target(args, backend))
    _write_result(out, config, verdict, verdict.format())
    return DECISION_CODES[verdict.decision]


def cmd_orbit_semi_yes(args, config, out):
    backend = config.make_backend()
    result = orbit_semi_yes(backend.presentation, backend, None,
                            _target(args, backend), config.budget)
    if result.landed:
        text = "InOrbit terms %s" % result.certificate.format()
        if result.detail:
            text += " (%s)" % result.detail
    else:
        text = "Unknown after %d steps" % result.steps
    _write_result(out, config, result, text)
    return EXIT_OK if result.landed else EXIT_UNKNOWN


def cmd_orbit_semi_no(args, config, out):
    backend = config.make_backend()
    result = orbit_semi_no(backend.presentation, backend, None,
                           _target(args, backend), config.budget)
    if result.landed:
        text = _semi_no_text(result)
    else:
        text = "Unknown after %d steps" % result.steps
    _write_result(out, config, result, text)
    return EXIT_NEGATIVE if result.landed else EXIT_UNKNOWN


def cmd_orbit_dovetail(args, config, out):
    backend = config.make_backend()
    outcome = orbit_dovetail(backend, _target(args, backend), config.budget)
    if outcome.status == "yes":
        text, code = "InOrbit", EXIT_OK
    elif outcome.status == "no":
        text, code = _semi_no_text(outcome.result), EXIT_NEGATIVE
    else:
        text, code = "Unknown", EXIT_UNKNOWN
    _write_result(out, config, outcome,
                  "%s after %d rounds" % (text, outcome.rounds))
    return code


def _scott_output(config):
    return "json" if config.output_format == "json" else "sexp"


def cmd_scott_theta(args, config, out):
    backend = config.make_backend()
    budget_table(config.budget)
    f = build_theta_prefix(backend.presentation, backend, config.budget)
    formula_summary("Orbit formula", f)
    out.write(formula_document("theta", backend.presentation, backend,
                               config.budget, f, _scott_output(config)))
    return EXIT_OK


def cmd_scott_sentence(args, config, out):
    backend = config.make_backend()
    budget_table(config.budget)
    f = emit_scott_sentence(backend.presentation, backend, config.budget)
    formula_summary("Scott sentence", f)
    out.write(formula_document("sentence", backend.presentation, backend,
                               config.budget, f, _scott_output(config)))
    return EXIT_OK


def cmd_etypes_probe(args, config, out):
    backend = config.make_backend()
    budget_table(config.budget)
    report = strongly_defined_probe(backend, config.budget,
                                    samples=args.samples, seed=config.seed,
                                    length_cap=args.length_cap)
    probe_report_table(report)
    _write_result(out, config, report, repr(report))
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def _probe_text(result):
    if result.violation is None:
        return "%s after %d steps" % (result.status, result.depth)
    return "%s: %s" % (result.status, result.violation.system.format())


def cmd_etypes_theta(args, config, out):
    backend = config.make_backend()
    result = theta_check_embedding(_endomorphism(args, backend),
                                   config.budget)
    _write_result(out, config, result, _probe_text(result))
    return EXIT_NEGATIVE if result.violation is not None else EXIT_OK


def cmd_etypes_exists(args, config, out):
    backend = config.make_backend()
    result = exists_plus_probe(_endomorphism(args, backend), config.budget)
    _write_result(out, config, result, _probe_text(result))
    return EXIT_NEGATIVE if result.violation is not None else EXIT_OK


def cmd_oracle_check(args, config, out):
    results = acceptance_suite(quick=args.quick, seed=config.seed)
    if config.output_format == "json":
        out.write(dumps_json(versioned({"checks": jsonable(results)})))
    else:
        out.write(oracle_table(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_NEGATIVE


# -- entry points -----------------------------------------------------------

def _run_captured(argv):
    out = io.StringIO()
    code = run(argv, out)
    return code, out.getvalue()


def run_batch(filename, jobs, out):
    """
    Run every non-empty, non-comment line of ``filename`` as a command
    line. Outputs are written in file order whatever ``jobs`` is; the
    exit code is the largest one seen.
    """
    if jobs < 1:
        logger.error("jobs(%d) must be at least 1" % jobs)
        return EXIT_USAGE
    try:
        with open(filename) as fh:
            queries = [shlex.split(line) for line in fh
                       if line.strip() and not line.startswith("#")]
    except (IOError, OSError, ValueError) as err:
        logger.error("cannot read batch file: %s" % err)
        return EXIT_USAGE
    logger.info("batch: %d queries on %d jobs" % (len(queries), jobs))
    if jobs == 1 or len(queries) < 2:
        results = [_run_captured(argv) for argv in queries]
    else:
        pool = multiprocessing.Pool(processes=jobs)
        try:
            results = pool.map(_run_captured, queries)
        finally:
            pool.close()
            pool.join()
    for _, text in results:
        out.write(text)
    return max([code for code, _ in results] + [EXIT_OK])


def run(argv, out=None):
    """
    Parse ``argv``, run the command and write its result to ``out``.

    :return: exit code
    """
    if out is None:
        out = sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else EXIT_USAGE
    if args.batch is not None:
        return run_batch(args.batch, args.jobs, out)
    if getattr(args, "func", None) is None:
        parser.print_usage(sys.stderr)
        logger.error("no command given")
        return EXIT_USAGE
    _set_verbosity(args)
    try:
        config = _run_config(args)
        logger.debug("\n%s" % config)
        return args.func(args, config, out)
    except (CapOverflowError, NoOrbitDeciderError, NotCertifiedError) as err:
        logger.error("%s" % err)
        return EXIT_UNKNOWN
    except (PyscottError, ValueError, IOError, OSError) as err:
        logger.error("%s" % err)
        return EXIT_USAGE


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))
