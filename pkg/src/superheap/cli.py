"""Command-line front end.

Exit codes: 0 success, 1 a law failed, 2 usage or parse error, 3 evaluation
error (e.g. inverting a non-unit).
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import NonUnitError, SuperheapError
from .functors import STRUCTURE_NAMES, groupify, heapify, resolve
from .grassmann import format_element, invert_even, max_generator_index, parse_element
from .harness import LAWS, SampleConfig, all_selection, check_heap_axioms, run_suite
from .points import R01, R11, format_point, parse_point
from .structures import (
    MULT_GROUP,
    R01_HEAP,
    R01_SEMIHEAP,
    TRANS_GROUP,
    GroupStructure,
    mult_heap_closed_form,
    mult_inv,
    mult_mul,
    trans_heap_closed_form,
    trans_inv,
    trans_mul,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_EVAL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="superheap", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run law suites")
    v.add_argument("--suite", default="all", help="comma-separated law:structure list, or 'all'")
    v.add_argument("--generators", type=int, default=4, help="largest probe size m (0..m are checked)")
    v.add_argument("--trials", type=int, default=200)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--format", choices=("text", "json"), default="text")

    e = sub.add_parser("eval", help="evaluate a structure operation on explicit points")
    e.add_argument("--structure", required=True)
    e.add_argument("--point", action="append", default=[], help="point like '(1; e1)'; repeatable")
    e.add_argument("--op", choices=("mul", "inv", "bracket"))
    e.add_argument("--generators", type=int, default=None, help="probe size (default: inferred)")

    sub.add_parser("demo", help="replay the worked examples")
    sub.add_parser("list", help="list structures and laws")
    return p


# ---------------------------------------------------------------- verify


def _print_text(reports, out):
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.suite} m={r.config.m} trials={r.trials_run} skipped={r.skipped}", file=out)
    failed = [r for r in reports if not r.passed]
    for r in failed:
        ce = r.counterexample
        print(f"\ncounterexample for {r.suite} (m={r.config.m}): {ce.equation}", file=out)
        print(f"  inputs: {', '.join(ce.inputs) if ce.inputs else '(none)'}", file=out)
        print(f"  lhs:    {ce.lhs}", file=out)
        print(f"  rhs:    {ce.rhs}", file=out)
    print(f"\n{len(reports) - len(failed)}/{len(reports)} reports passed", file=out)


def cmd_verify(args, out=None) -> int:
    out = out or sys.stdout
    try:
        cfg = SampleConfig(m=args.generators, trials=args.trials, rng_seed=args.seed)
        reports = run_suite(args.suite, cfg)
    except SuperheapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"evaluation error: {exc}", file=sys.stderr)
        return EXIT_EVAL
    if args.format == "json":
        json.dump([r.to_dict() for r in reports], out, indent=2)
        out.write("\n")
    else:
        _print_text(reports, out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


# ---------------------------------------------------------------- eval


def cmd_eval(args, out=None) -> int:
    out = out or sys.stdout
    try:
        S = resolve(args.structure)
        m = args.generators
        if m is None:
            m = max((max_generator_index(t) for t in args.point), default=0)
        points = [parse_point(t, S.domain, m) for t in args.point]
        if isinstance(S, GroupStructure):
            op = args.op or {1: "inv", 2: "mul"}.get(len(points))
            arity = {"mul": 2, "inv": 1}.get(op)
        else:
            op = args.op or "bracket"
            arity = 3 if op == "bracket" else None
        if arity is None:
            raise SuperheapError(f"{S.name} has no operation {op!r}")
        if len(points) != arity:
            raise SuperheapError(f"{op} takes {arity} point(s), got {len(points)}")
    except SuperheapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if op == "mul":
            result = S.mul(*points)
        elif op == "inv":
            result = S.inv(*points)
        else:
            result = S.bracket(*points)
    except (NonUnitError, ArithmeticError, SuperheapError) as exc:
        print(f"evaluation error: {exc}", file=sys.stderr)
        return EXIT_EVAL
    print(format_point(result), file=out)
    return EXIT_OK


# ---------------------------------------------------------------- demo


def cmd_demo(out=None) -> int:
    out = out or sys.stdout
    def say(*a):
        print(*a, file=out)

    def pt(text, m):
        dom = R11 if ";" in text else R01
        return parse_point(text, dom, m)

    say("== R^{0|1}: [t1, t2, t3] = t1 + t2 + t3 (semiheap)")
    a, b, c = pt("(e1)", 3), pt("(e2)", 3), pt("(e3)", 3)
    say(f"  [e1, e2, e3] = {format_point(R01_SEMIHEAP.bracket(a, b, c))}")
    z = pt("(0)", 3)
    say(f"  [e1, e1, 0] = {format_point(R01_SEMIHEAP.bracket(a, a, z))}  (not 0: no heap)")
    r = check_heap_axioms(R01_SEMIHEAP, SampleConfig(m=2))
    say(f"  heap axioms: {'PASS' if r.passed else 'FAIL'}; counterexample "
        f"{r.counterexample.inputs} -> {r.counterexample.lhs}")

    say("== R^{0|1} with signs +-+ (heap)")
    say(f"  [e1, e1, e2] = {format_point(R01_HEAP.bracket(a, a, b))}")
    r = check_heap_axioms(R01_HEAP, SampleConfig(m=2))
    say(f"  heap axioms: {'PASS' if r.passed else 'FAIL'}")

    say("== translation supergroup R^{1|1}")
    p, q, e = pt("(1; e1)", 2), pt("(2; e2)", 2), TRANS_GROUP.identity(2)
    say(f"  (1; e1)(2; e2) = {format_point(trans_mul(p, q))}")
    say(f"  (1; e1)^-1 = {format_point(trans_inv(p))}")
    say(f"  identity = {format_point(e)}")
    say(f"  [(1; e1), (0; 0), (2; e2)] = {format_point(trans_heap_closed_form(p, e, q))}")
    gen = heapify(TRANS_GROUP).bracket(p, e, q)
    say(f"  x y^-1 z          = {format_point(gen)}")
    rec = trans_heap_closed_form(p, e, q) == trans_mul(p, q)
    say(f"  recovery [p,(0;0),q] = p.q: {rec}")

    say("== multiplicative supergroup R_*^{1|1}")
    p, q, e = pt("(2; e1)", 2), pt("(3 + e1^e2; e2)", 2), MULT_GROUP.identity(2)
    say(f"  (2; e1)(3 + e1^e2; e2) = {format_point(mult_mul(p, q))}")
    say(f"  (2; e1)^-1 = {format_point(mult_inv(p))}")
    say(f"  identity = {format_point(e)}")
    say(f"  [(2; e1), (3 + e1^e2; e2), (2; e1)] = "
        f"{format_point(mult_heap_closed_form(p, q, p))}")
    rec = mult_heap_closed_form(p, e, q) == mult_mul(p, q)
    say(f"  recovery [p,(1;0),q] = p.q: {rec}")
    g = groupify(heapify(MULT_GROUP))
    say(f"  groupify(heapify(mult-group)).inv(2; e1) = {format_point(g.inv(p))}")

    say("== inverse of an even unit")
    x = parse_element("2 + e1^e2", 2)
    say(f"  (2 + e1^e2)^-1 = {format_element(invert_even(x))}")
    return EXIT_OK


def cmd_list(out=None) -> int:
    out = out or sys.stdout
    print("structures:", file=out)
    for name in STRUCTURE_NAMES:
        print(f"  {name:14s} {resolve(name).kind}", file=out)
    print("  heapify:<group>, groupify:<pointed heap>", file=out)
    print("laws:", " ".join(LAWS), file=out)
    print(f"'all' runs {len(all_selection())} law:structure pairs", file=out)
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        return cmd_verify(args)
    if args.command == "eval":
        return cmd_eval(args)
    if args.command == "demo":
        return cmd_demo()
    return cmd_list()


if __name__ == "__main__":
    sys.exit(main())
