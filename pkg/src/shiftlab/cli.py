"""The ``shiftlab`` command line tool.

Subcommands: betti, shifts, check, random, verify-paper, dump.  Exit codes:
0 ok, 1 a proved inequality failed (implementation bug), 2 unreadable or
malformed ideal input, 3 generator cap exceeded, 4 bad arguments or a pair
that does not cover the ideal.
"""

from __future__ import annotations

import argparse
import json
import sys

from .betti import betti_records, format_betti_grid, multigraded_betti
from .checks import (
    CoveringPairError,
    check_consecutive,
    check_covering,
    check_general,
    check_multiple,
    check_range,
    check_subadditivity_profile,
    check_top,
)
from .complexes import (
    CapExceededError,
    GENERATOR_CAP,
    complex_to_json,
    minimalize,
    scarf_complex,
    taylor_complex,
)
from .fields import field_from_spec
from .golden import golden_ok, verify_golden
from .monomials import IdealSyntaxError, load_ideal
from .randomgen import random_ideal_stream

EXIT_OK = 0
EXIT_PROVEN_FAIL = 1
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_ARGS = 4

PROVEN = {"consecutive", "top", "covering-projdim", "covering-shift", "range",
          "general", "multiple"}


class CLIUsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CLIUsageError(message)


def _vec(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace("(", "").replace(")", "").split(","))
    except ValueError:
        raise CLIUsageError(f"bad exponent vector {text!r}") from None


def _cover(text: str) -> tuple[tuple[int, ...], int]:
    head, _, tail = text.partition(":")
    try:
        return _vec(tail), int(head)
    except (CLIUsageError, ValueError):
        raise CLIUsageError(f"bad cover {text!r}, expected 'a:e1,e2,...'") from None


def _add_common(sub):
    sub.add_argument("--field", default="q", help="q (rationals) or p:<prime>")
    sub.add_argument("--format", default="text", choices=["text", "json"])
    sub.add_argument("--cap", type=int, default=GENERATOR_CAP,
                     help="generator count cap for 2^m constructions")


def build_parser() -> _Parser:
    p = _Parser(prog="shiftlab",
                description="multigraded resolution shifts of monomial ideals")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("betti", help="Betti table of S/I")
    b.add_argument("ideal")
    _add_common(b)
    b.set_defaults(func=cmd_betti)

    s = sub.add_parser("shifts", help="maximal shifts t_0..t_p")
    s.add_argument("ideal")
    _add_common(s)
    s.set_defaults(func=cmd_shifts)

    c = sub.add_parser("check", help="run inequality checks")
    c.add_argument("ideal")
    c.add_argument("which", choices=["all", "subadditivity", "consecutive", "top",
                                     "covering", "range", "general", "multiple"])
    c.add_argument("--alpha", help="exponent vector e1,e2,...")
    c.add_argument("--beta", help="exponent vector e1,e2,...")
    c.add_argument("--at", type=int, help="homological index a (range/general)")
    c.add_argument("--p", type=int, help="window parameter p (general)")
    c.add_argument("--cover", action="append", default=[],
                   help="a:e1,e2,... (multiple; repeatable)")
    _add_common(c)
    c.set_defaults(func=cmd_check)

    r = sub.add_parser("random", help="probe random ideals, one JSON line each")
    r.add_argument("--seed", type=int, required=True)
    r.add_argument("--n", type=int, required=True, help="variable count")
    r.add_argument("--m", type=int, required=True, help="minimal generator count")
    r.add_argument("--maxexp", type=int, required=True)
    r.add_argument("--count", type=int, required=True)
    r.add_argument("--out", help="append ledger lines here instead of stdout")
    _add_common(r)
    r.set_defaults(func=cmd_random)

    v = sub.add_parser("verify-paper",
                       help="recompute the recorded worked-example values")
    v.add_argument("--fixtures", help="directory overriding the bundled fixtures")
    _add_common(v)
    v.set_defaults(func=cmd_verify_paper)

    d = sub.add_parser("dump", help="complex as JSON")
    d.add_argument("ideal")
    d.add_argument("--complex", dest="kind", default="taylor",
                   choices=["taylor", "scarf", "minimal"])
    _add_common(d)
    d.set_defaults(func=cmd_dump)
    return p


def cmd_betti(args) -> int:
    I = load_ideal(args.ideal)
    field = field_from_spec(args.field)
    table = multigraded_betti(I, field, args.cap)
    if args.format == "json":
        print(json.dumps({
            "vars": list(I.ring.names),
            "field": repr(field),
            "projdim": table.projdim,
            "totals": list(table.totals()),
            "coarse": [{"a": a, "degree": d, "rank": r}
                       for (a, d), r in sorted(table.coarse().items())],
            "entries": betti_records(table),
        }, sort_keys=True))
    else:
        print(f"# {args.ideal}: vars {' '.join(I.ring.names)}, "
              f"{I.m} generators, p = {table.projdim} over {field!r}")
        print(format_betti_grid(table))
        print("coarse: " + " ".join(str(t) for t in table.totals()))
    return EXIT_OK


def cmd_shifts(args) -> int:
    I = load_ideal(args.ideal)
    field = field_from_spec(args.field)
    table = multigraded_betti(I, field, args.cap)
    prof = table.shift_profile()
    if args.format == "json":
        print(json.dumps({
            "vars": list(I.ring.names),
            "field": repr(field),
            "projdim": prof.projdim,
            "shifts": list(prof.shifts),
        }, sort_keys=True))
    else:
        print(f"# {args.ideal}: p = {prof.projdim} over {field!r}")
        print(prof)
    return EXIT_OK


def _emit_reports(reports, fmt) -> int:
    bad = False
    for rep in reports:
        if fmt == "json":
            print(json.dumps(rep.to_dict(), sort_keys=True))
        else:
            print(rep)
        if rep.name in PROVEN and not rep.holds:
            bad = True
    return EXIT_PROVEN_FAIL if bad else EXIT_OK


def cmd_check(args) -> int:
    I = load_ideal(args.ideal)
    field = field_from_spec(args.field)
    table = multigraded_betti(I, field, args.cap)
    prof = table.shift_profile()
    which = args.which
    reports = []
    if which in ("all", "subadditivity"):
        reports += check_subadditivity_profile(prof)
    if which in ("all", "consecutive"):
        reports += check_consecutive(I, field, profile=prof)
    if which in ("all", "top") and prof.projdim >= 1:
        reports.append(check_top(I, field, profile=prof))
    if which in ("covering", "range"):
        if args.alpha is None or args.beta is None:
            raise CLIUsageError(f"{which} needs --alpha and --beta")
        alpha, beta = _vec(args.alpha), _vec(args.beta)
        if which == "covering":
            reports += check_covering(I, alpha, beta, field, profile=prof)
        else:
            if args.at is None:
                raise CLIUsageError("range needs --at")
            reports.append(check_range(I, alpha, beta, args.at, field, profile=prof))
    if which == "general":
        if args.at is None or args.p is None:
            raise CLIUsageError("general needs --at and --p")
        try:
            reports.append(check_general(I, args.at, args.p, field, profile=prof))
        except ValueError as exc:
            raise CLIUsageError(f"general preconditions: {exc}") from None
    if which == "multiple":
        if not args.cover:
            raise CLIUsageError("multiple needs at least one --cover")
        covers = [_cover(c) for c in args.cover]
        try:
            reports.append(check_multiple(I, covers, field, table=table))
        except ValueError as exc:
            if isinstance(exc, CoveringPairError):
                raise
            raise CLIUsageError(str(exc)) from None
    return _emit_reports(reports, args.format)


def cmd_random(args) -> int:
    field = field_from_spec(args.field)
    sink = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        for index, I in random_ideal_stream(args.seed, args.count, args.n,
                                            args.m, args.maxexp):
            base = {"seed": args.seed, "index": index, "n": args.n, "m": args.m,
                    "maxexp": args.maxexp}
            if I is None:
                base["skipped"] = "no m-generator antichain within retry budget"
                print(json.dumps(base, sort_keys=True), file=sink)
                continue
            if I.m > args.cap:
                base["skipped"] = "generator cap exceeded"
                print(json.dumps(base, sort_keys=True), file=sink)
                continue
            table = multigraded_betti(I, field, args.cap)
            prof = table.shift_profile()
            open_reports = check_subadditivity_profile(prof)
            proven = check_consecutive(I, field, profile=prof)
            if prof.projdim >= 1:
                proven.append(check_top(I, field, profile=prof))
            base.update({
                "gens": [list(g) for g in I.gens],
                "shifts": list(prof.shifts),
                "projdim": prof.projdim,
                "subadditivity_ok": all(r.holds for r in open_reports),
                "violations": [r.to_dict() for r in open_reports if not r.holds],
                "proven_ok": all(r.holds for r in proven),
            })
            print(json.dumps(base, sort_keys=True), file=sink)
            if not base["proven_ok"]:
                # a proved inequality failing means the implementation is
                # broken; stop the stream with full reproduction data
                for r in proven:
                    if not r.holds:
                        print(f"BUG: proved inequality failed on seed={args.seed} "
                              f"index={index}: {r}", file=sys.stderr)
                return EXIT_PROVEN_FAIL
    finally:
        if args.out:
            sink.close()
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    rows = verify_golden(fixtures_dir=args.fixtures)
    if args.format == "json":
        print(json.dumps(
            [{"name": r.name, "status": r.status, "detail": r.detail} for r in rows],
            sort_keys=True))
    else:
        for r in rows:
            print(r)
        bad = sum(r.status == "fail" for r in rows)
        noted = sum(r.status == "note" for r in rows)
        print(f"# {len(rows)} checks: {len(rows) - bad - noted} pass, "
              f"{noted} documented discrepancies, {bad} failures")
    return EXIT_OK if golden_ok(rows) else EXIT_PROVEN_FAIL


def cmd_dump(args) -> int:
    I = load_ideal(args.ideal)
    field = field_from_spec(args.field)
    if args.kind == "taylor":
        F = taylor_complex(I, args.cap)
    elif args.kind == "scarf":
        F = scarf_complex(I, args.cap)
    else:
        F = minimalize(taylor_complex(I, args.cap), field)
    obj = complex_to_json(F)
    obj["kind"] = args.kind
    print(json.dumps(obj, sort_keys=True))
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except CLIUsageError as exc:
        print(f"shiftlab: {exc}", file=sys.stderr)
        return EXIT_ARGS
    try:
        return args.func(args)
    except CLIUsageError as exc:
        print(f"shiftlab: {exc}", file=sys.stderr)
        return EXIT_ARGS
    except (IdealSyntaxError, OSError) as exc:
        print(f"shiftlab: cannot read ideal: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceededError as exc:
        print(f"shiftlab: {exc}", file=sys.stderr)
        return EXIT_CAP
    except CoveringPairError as exc:
        print(f"shiftlab: {exc}", file=sys.stderr)
        return EXIT_ARGS
    except ValueError as exc:
        print(f"shiftlab: {exc}", file=sys.stderr)
        return EXIT_ARGS


def main_entry():
    sys.exit(main())
