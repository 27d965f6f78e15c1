#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Tests for the command line interface.

:copyright:
    pyscott developers, 2026
:license:
    GNU Lesser General Public License, version 3 (LGPLv3)
    (http://www.gnu.org/licenses/lgpl-3.0.en.html)
"""
from __future__ import print_function, division
import inspect
import io
import json
import os
import pytest
from pyscott.cli import run, build_parser
from pyscott.constant import EXIT_OK, EXIT_NEGATIVE, EXIT_UNKNOWN, \
    EXIT_USAGE


DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(
    inspect.getfile(inspect.currentframe()))), "data")
S3_FILE = os.path.join(DATA_DIR, "s3.txt")


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def json_lines(text):
    return [json.loads(line) for line in text.splitlines()]


def test_parser_builds():
    parser = build_parser()
    args = parser.parse_args(["orbit", "decide", "--tuple", "y, x"])
    assert args.backend == "free"
    assert args.budget == 64
    assert args.output_format == "text"


@pytest.mark.parametrize("argv", [
    [],
    ["orbit"],
    ["orbit", "decide", "--backend", "hyperbolic", "--tuple", "x, y"],
    ["wp"],
    ["orbit", "decide"],
    ["orbit", "decide", "--tuple", "y, x", "--matrix", "1 0; 0 1"],
    ["orbit", "decide", "--tuple", "y"],
    ["orbit", "decide", "--tuple", "y, z"],
    ["parse", "--backend", "coset"],
    ["parse", "--backend", "coset", "--presentation", "no_such_file"],
    ["orbit", "decide", "--matrix", "2 0; 0 1"],
    ["orbit", "decide", "--backend", "abelian", "--matrix", "1 0 0"],
])
def test_usage_errors(argv):
    code, text = call(*argv)
    assert code == EXIT_USAGE
    assert text == ""


def test_parse():
    code, text = call("parse", "--backend", "coset", "--presentation",
                      S3_FILE)
    assert code == EXIT_OK
    assert text.splitlines() == ["< a, b | a^3, b^2, a*b*a*b >",
                                 "; backend: FiniteCosetTable(order 6)"]


def test_word_problem():
    word = "x*y*x^-1*y^-1"
    assert call("wp", "--word", word) == (EXIT_NEGATIVE, "not identity\n")
    assert call("wp", "--backend", "abelian", "--word", "a*b*a^-1*b^-1") \
        == (EXIT_OK, "identity\n")
    code, text = call("wp", "--word", "x*x^-1", "--json")
    assert code == EXIT_OK
    content = json.loads(text)
    assert content["identity"] is True
    assert content["schema_version"] == 1


def test_normal_form_and_elements():
    assert call("nf", "--backend", "abelian", "--word", "b*a*b^-1") == \
        (EXIT_OK, "a\n")
    assert call("nf", "--backend", "dihedral", "--word", "s*r*s") == \
        (EXIT_OK, "r^-1\n")
    code, text = call("elements", "--backend", "coset", "--presentation",
                      S3_FILE)
    assert code == EXIT_OK
    assert text.splitlines() == ["1", "a", "a^-1", "b", "a*b", "a^-1*b"]
    code, text = call("elements", "--rank", "1")
    assert text.splitlines() == ["1", "a", "a^-1", "a^2", "a^-2"]
    code, text = call("elements", "--rank", "1", "--max-length", "1",
                      "--json")
    assert json_lines(text) == [
        {"element": "1", "length": 0, "schema_version": 1},
        {"element": "a", "length": 1, "schema_version": 1},
        {"element": "a^-1", "length": 1, "schema_version": 1}]


def test_orbit_decide():
    assert call("orbit", "decide", "--tuple", "y, x") == \
        (EXIT_OK, "InOrbit\n")
    assert call("orbit", "decide", "--tuple", "x^2, y") == \
        (EXIT_NEGATIVE, "NotInOrbit stuck at (x^2, y)\n")
    assert call("orbit", "decide", "--backend", "abelian", "--matrix",
                "2 0; 0 1") == (EXIT_NEGATIVE, "NotInOrbit det=2\n")
    assert call("orbit", "decide", "--backend", "dihedral", "--tuple",
                "r^2, s") == \
        (EXIT_NEGATIVE, "NotInOrbit normal form (r^2, s)\n")
    code, text = call("orbit", "decide", "--backend", "rewrite",
                      "--presentation", S3_FILE, "--tuple", "a, b")
    assert code == EXIT_UNKNOWN


def test_orbit_decide_json():
    code, text = call("orbit", "decide", "--tuple", "y, x", "--json")
    assert code == EXIT_OK
    content = json.loads(text)
    assert content["decision"] == "InOrbit"
    assert content["method"] == "nielsen"
    assert content["schema_version"] == 1


def test_orbit_semi_procedures():
    code, text = call("orbit", "semi-yes", "--tuple", "y, x")
    assert code == EXIT_OK
    assert text == "InOrbit terms (x2, x1)\n"
    code, text = call("orbit", "semi-no", "--tuple", "x^2, y",
                      "--budget", "256")
    assert code == EXIT_NEGATIVE
    assert text.startswith("NotInOrbit term (x1^2, x2) at witness")
    code, text = call("orbit", "semi-no", "--backend", "coset",
                      "--presentation", S3_FILE, "--tuple", "b, a")
    assert code == EXIT_NEGATIVE
    assert text.startswith("NotInOrbit relator")
    code, text = call("orbit", "dovetail", "--tuple", "y, x")
    assert code == EXIT_OK
    assert text.startswith("InOrbit after")


def test_endo_commands():
    assert call("endo", "apply", "--images", "y, x", "--word", "x*y^-1") \
        == (EXIT_OK, "y*x^-1\n")
    assert call("endo", "apply", "--images", "y, x") == \
        (EXIT_OK, "(x -> y, y -> x)\n")
    code, text = call("endo", "apply", "--backend", "coset",
                      "--presentation", S3_FILE, "--images", "a, a")
    assert code == EXIT_USAGE
    assert call("endo", "surjective", "--images", "y, x") == \
        (EXIT_OK, "Yes (x2, x1)\n")
    code, text = call("endo", "surjective", "--images", "x^2, y",
                      "--budget", "8")
    assert code == EXIT_UNKNOWN
    assert text.startswith("Unknown after")


def test_tset_commands():
    code, text = call("tset", "member", "--rank", "1", "--term", "x1^-1")
    assert code == EXIT_OK
    assert json_lines(text) == [{"term": "(x1^-1)", "status": "member",
                                 "schema_version": 1}]
    code, text = call("tset", "member", "--rank", "1", "--term", "x1^2")
    assert code == EXIT_NEGATIVE
    assert json_lines(text)[0]["status"] == "outside"
    code, text = call("tset", "member", "--rank", "1", "--term", "x1^2",
                      "--tuple", "a^2", "--budget", "8")
    assert code == EXIT_OK
    assert json_lines(text)[0]["witness"] == ["a"]
    code, text = call("tset", "member", "--rank", "1", "--term", "x1, x1")
    assert code == EXIT_USAGE

    code, text = call("tset", "that", "--rank", "1", "--budget", "8")
    assert code == EXIT_OK
    entries = json_lines(text)
    assert [e["term"] for e in entries][:2] == ["(1)", "(x1^2)"]
    assert all(e["status"] == "outside" for e in entries)
    assert all(e["schema_version"] == 1 for e in entries)

    code, text = call("tset", "enum", "--rank", "1", "--tuple", "a^2",
                      "--budget", "8")
    assert code == EXIT_OK
    entries = json_lines(text)
    assert [e["term"] for e in entries][:2] == ["(x1^2)", "(x1^-2)"]
    assert all(e["schema_version"] == 1 for e in entries)


def test_scott_theta_golden():
    code, text = call("scott", "theta", "--rank", "1", "--budget", "16")
    assert code == EXIT_OK
    with open(os.path.join(DATA_DIR, "golden", "z_theta_16.sexp")) as fh:
        assert text == fh.read()
    code, text = call("scott", "sentence", "--rank", "1", "--budget", "16")
    with open(os.path.join(DATA_DIR, "golden",
                           "z_sentence_16.sexp")) as fh:
        assert text == fh.read()


@pytest.mark.parametrize("prefix,backend_argv", [
    ("z", ["--rank", "1"]),
    ("f2", ["--rank", "2"]),
    ("dinf", ["--backend", "dihedral"])])
def test_scott_golden_level_64(prefix, backend_argv):
    for kind, tag in (("theta", "computable Pi1"),
                      ("sentence", "computable dSigma2")):
        code, text = call(*(["scott", kind, "--budget", "64"] +
                            backend_argv))
        assert code == EXIT_OK
        with open(os.path.join(DATA_DIR, "golden", "%s_%s_64.sexp"
                               % (prefix, kind))) as fh:
            assert text == fh.read()
        assert "; class: %s" % tag in text.splitlines()


def test_scott_is_deterministic():
    argv = ["scott", "sentence", "--backend", "dihedral", "--budget", "32"]
    assert call(*argv) == call(*argv)
    code, text = call(*(argv + ["--json"]))
    content = json.loads(text)
    assert content["kind"] == "sentence"
    assert content["schema_version"] == 1
    assert content == json.loads(call(*(argv + ["--json"]))[1])


def test_etypes_commands():
    code, text = call("etypes", "exists", "--rank", "1", "--images", "a^2",
                      "--budget", "16")
    assert code == EXIT_NEGATIVE
    code, text = call("etypes", "theta", "--rank", "1", "--images", "a^-1",
                      "--budget", "16")
    assert code == EXIT_OK
    code, text = call("etypes", "probe", "--backend", "coset",
                      "--presentation", S3_FILE)
    assert code == EXIT_OK


def test_batch(tmpdir):
    filename = str(tmpdir.join("queries.txt"))
    with open(filename, "w") as fh:
        fh.write("# swap and square\n")
        fh.write("orbit decide --tuple 'y, x'\n")
        fh.write("\n")
        fh.write("orbit decide --tuple 'x^2, y'\n")
        fh.write("wp --word x*x^-1\n")
    expected = "InOrbit\nNotInOrbit stuck at (x^2, y)\nidentity\n"
    assert call("--batch", filename) == (EXIT_NEGATIVE, expected)
    assert call("--batch", filename, "--jobs", "2") == \
        (EXIT_NEGATIVE, expected)
    assert call("--batch", filename, "--jobs", "0")[0] == EXIT_USAGE
    assert call("--batch", str(tmpdir.join("missing.txt")))[0] == \
        EXIT_USAGE
