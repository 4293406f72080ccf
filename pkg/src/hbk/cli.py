"""``hbk`` command-line front end.

Exit codes: 0 success, 1 failed axiom or validation check, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys

from .biquandle import (check_biquandle_axioms, check_group_axioms, make_alexander,
                        make_constant_action, make_conjugation, parse_biquandle, parse_group,
                        serialize_biquandle)
from .diagram import BUILTIN_NAMES, builtin_diagram, parse_diagram
from .errors import HbkError
from .gfamily import associated_gfamily, check_gfamily_axioms, parse_gfamily, serialize_gfamily
from .invariants import ORACLE, SOLVER, counting_invariant, enhanced_invariant
from .parallel import idem_index, parallel_biquandle, type_index
from .pmb import check_pmb_axioms, parse_pmb, pmb_from_gfamily, serialize_pmb


class CheckFailed(Exception):
    def __init__(self, report, what):
        self.report = report
        self.what = what


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}", self.format_usage())


class _UsageError(Exception):
    def __init__(self, message, usage):
        super().__init__(message)
        self.usage = usage


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise HbkError(f"cannot read {path}: {exc.strerror}") from None


def _require(report, what):
    if not report.passed:
        raise CheckFailed(report, what)


def _load_structure(path):
    """A biquandle or PMB file, distinguished by its header keyword."""
    text = _read(path)
    first = next((ln.split("#", 1)[0].split() for ln in text.splitlines()
                  if ln.split("#", 1)[0].strip()), [""])
    if first[0] == "pmb":
        P = parse_pmb(text)
        _require(check_biquandle_axioms(P.base), "biquandle")
        _require(check_pmb_axioms(P), "partially multiplicative biquandle")
        return P
    B = parse_biquandle(text)
    _require(check_biquandle_axioms(B), "biquandle")
    return B


def _load_biquandle(path):
    B = parse_biquandle(_read(path))
    _require(check_biquandle_axioms(B), "biquandle")
    return B


def _load_gfamily(path):
    F = parse_gfamily(_read(path))
    _require(check_group_axioms(F.group), "group")
    _require(check_gfamily_axioms(F), "G-family")
    return F


def _diagram(args):
    if args.builtin is not None:
        return builtin_diagram(args.builtin)
    return parse_diagram(_read(args.diagram))


def cmd_check(args, out):
    text = _read(args.file)
    if args.kind == "biquandle":
        report = check_biquandle_axioms(parse_biquandle(text))
    elif args.kind == "group":
        report = check_group_axioms(parse_group(text))
    elif args.kind == "gfamily":
        F = parse_gfamily(text)
        report = check_group_axioms(F.group)
        if report.passed:
            report = check_gfamily_axioms(F)
    else:
        P = parse_pmb(text)
        report = check_biquandle_axioms(P.base)
        if report.passed:
            report = check_pmb_axioms(P)
    _require(report, args.kind)
    out.write("PASS\n")


def cmd_make(args, out):
    if args.what == "alexander":
        if len(args.params) != 3:
            raise _UsageError("hbk make alexander: expected <n> <t> <s>", "")
        n, t, s = (_int(v) for v in args.params)
        B = make_alexander(n, t, s)
    elif args.what == "constant":
        if not args.params:
            raise _UsageError("hbk make constant: expected a permutation", "")
        B = make_constant_action([_int(v) for v in args.params])
    else:
        if len(args.params) != 1:
            raise _UsageError("hbk make conj: expected <groupfile>", "")
        G = parse_group(_read(args.params[0]))
        _require(check_group_axioms(G), "group")
        B = make_conjugation(G)
    out.write(serialize_biquandle(B))


def _int(text):
    try:
        return int(text)
    except ValueError:
        raise _UsageError(f"expected an integer, got {text!r}", "") from None


def cmd_parallel(args, out):
    if args.n < 0:
        raise _UsageError("parallel index must be non-negative", "")
    out.write(serialize_biquandle(parallel_biquandle(_load_biquandle(args.file), args.n)))


def cmd_type(args, out):
    out.write(f"{type_index(_load_biquandle(args.file))}\n")


def cmd_idem(args, out):
    out.write(f"{idem_index(_load_biquandle(args.file))}\n")


def cmd_gfamily(args, out):
    out.write(serialize_gfamily(associated_gfamily(_load_biquandle(args.file))))


def cmd_pmb(args, out):
    out.write(serialize_pmb(pmb_from_gfamily(_load_gfamily(args.file), check=False)))


def cmd_count(args, out):
    S = _load_structure(args.structure)
    mode = ORACLE if args.oracle else SOLVER
    out.write(f"{counting_invariant(S, _diagram(args), mode)}\n")


def cmd_enhanced(args, out):
    F = _load_gfamily(args.gfamily)
    out.write(f"{enhanced_invariant(F, _diagram(args))}\n")


def _add_diagram_source(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--diagram", metavar="FILE")
    src.add_argument("--builtin", choices=BUILTIN_NAMES, metavar="NAME",
                     help="one of: " + ", ".join(BUILTIN_NAMES))


def build_parser():
    parser = _Parser(prog="hbk", description="Biquandle colorings of handlebody-knot diagrams.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="run an axiom checker")
    p.add_argument("kind", choices=("biquandle", "gfamily", "pmb", "group"))
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("make", help="print a constructed biquandle")
    p.add_argument("what", choices=("alexander", "constant", "conj"))
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_make)

    p = sub.add_parser("parallel", help="print the n-parallel biquandle")
    p.add_argument("n", type=int)
    p.add_argument("file")
    p.set_defaults(func=cmd_parallel)

    for name, func in (("type", cmd_type), ("idem", cmd_idem)):
        p = sub.add_parser(name, help=f"print the {name} index")
        p.add_argument("file")
        p.set_defaults(func=func)

    p = sub.add_parser("gfamily", help="build the associated G-family")
    p.add_argument("source", choices=("from-biquandle",))
    p.add_argument("file")
    p.set_defaults(func=cmd_gfamily)

    p = sub.add_parser("pmb", help="build the associated partially multiplicative biquandle")
    p.add_argument("source", choices=("from-gfamily",))
    p.add_argument("file")
    p.set_defaults(func=cmd_pmb)

    p = sub.add_parser("count", help="print the coloring count")
    p.add_argument("--structure", required=True, metavar="FILE")
    _add_diagram_source(p)
    p.add_argument("--oracle", action="store_true", help="brute-force every assignment")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enhanced", help="print the G-enhanced polynomial")
    p.add_argument("--gfamily", required=True, metavar="FILE")
    _add_diagram_source(p)
    p.set_defaults(func=cmd_enhanced)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        args.func(args, out)
    except _UsageError as exc:
        if exc.usage:
            err.write(exc.usage)
        err.write(f"{exc}\n")
        return 2
    except CheckFailed as exc:
        err.write(f"FAIL: not a valid {exc.what}\n{exc.report.format()}\n")
        return 1
    except HbkError as exc:
        err.write(f"hbk: {exc}\n")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
