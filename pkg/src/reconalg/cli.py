"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 search bound exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .deformation import (
    apply_permutation,
    deformed_quiver,
    deformed_ring,
    specialize_central_fiber,
    weyl_generators,
)
from .errors import BoundExhausted, DomainError, ReconError, VerificationError
from .fixtures import FIXTURE_NAMES, VerificationReport, load_fixture, verify_fixture
from .invariant_ring import ring_presentation
from .numtheory import check_group, hj_dual, hj_evaluate, hj_expand, versal_dimension
from .quiver import build_quiver
from .specials import module_classes

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _cmd_fraction(args, out):
    frac, dual = hj_expand(args.r, args.a), hj_dual(args.r, args.a)
    if args.json:
        out.write(_dumps({
            "r": args.r, "a": args.a,
            "expansion": list(frac.entries), "dual": list(dual.entries),
            "versal_dimension": versal_dimension(args.r, args.a),
        }) + "\n")
    else:
        out.write(f"{frac} / dual {dual} / dim {versal_dimension(args.r, args.a)}\n")
    return EXIT_OK


def _cmd_ring(args, out):
    pres = deformed_ring(args.r, args.a) if args.deformed else ring_presentation(args.r, args.a)
    out.write((_dumps(pres.to_dict()) if args.json else pres.format_text()) + "\n")
    return EXIT_OK


def _cmd_modules(args, out):
    classes = module_classes(args.r, args.a)
    if args.json:
        out.write(_dumps({"r": args.r, "a": args.a, "modules": [c.to_dict() for c in classes]}) + "\n")
        return EXIT_OK
    out.write(f"# special modules for 1/{args.r}(1,{args.a}): {len(classes)} classes\n")
    for c in classes:
        reps = " ~ ".join(m.label for m in c.representatives)
        grading = ",".join(map(str, c.grading))
        out.write(f"M{c.class_id} = {c.normalized}  grading ({grading})  reps {reps}\n")
    return EXIT_OK


def _cmd_quiver(args, out):
    build = deformed_quiver if args.deformed else build_quiver
    q = build(args.r, args.a, args.bound, args.path_bound)
    if args.format == "json":
        text = _dumps(q.to_dict())
    elif args.format == "dot":
        text = q.to_dot()
    else:
        text = q.format_text()
    out.write(text + "\n")
    return EXIT_OK


def _check(report: VerificationReport, name: str, item: str, fn) -> None:
    try:
        detail = fn()
        report.add(name, item, True, detail or "")
    except VerificationError as exc:
        report.add(name, item, False, str(exc))


def verify_all(r: int, a: int, bound: int | None = None, path_bound: int | None = None) -> VerificationReport:
    """Run every internal consistency check for one cyclic group."""
    check_group(r, a)
    report = VerificationReport(f"verification of 1/{r}(1,{a})")

    def fractions_():
        frac, dual = hj_expand(r, a), hj_dual(r, a)
        if hj_evaluate(frac.entries) != Fraction(r, a) or hj_evaluate(dual.entries) != Fraction(r, r - a):
            raise VerificationError("continued fractions do not evaluate back")
        return f"{frac} / dual {dual}"

    def ring_():
        pres = ring_presentation(r, a)
        pres.check_realizations()
        return f"{len(pres.relations)} relations vanish on their monomials"

    def modules_():
        return f"{len(module_classes(r, a))} classes"

    def specialization_():
        specialize_central_fiber(deformed_ring(r, a))
        return "deformed relations specialize onto the undeformed ones"

    def weyl_():
        D = deformed_ring(r, a)
        for perm in weyl_generators(r, a):
            for rel in D.relations:
                if apply_permutation(rel, perm) != rel:
                    raise VerificationError(f"{rel} is moved by {sorted(perm)}")
        return f"{len(D.weyl)} generators fix every relation"

    def quiver_():
        q = build_quiver(r, a, bound, path_bound)
        return f"{len(q.arrows)} arrows, minimal relation degree {q.min_relation_degree()}"

    def deformed_quiver_():
        q = deformed_quiver(r, a, bound, path_bound)
        return f"{len(q.arrows)} lifted arrows, minimal relation degree {q.min_relation_degree()}"

    _check(report, "fraction", "continued fractions", fractions_)
    _check(report, "ring", "substitution gives zero", ring_)
    _check(report, "modules", "class count", modules_)
    _check(report, "specialization", "central fiber", specialization_)
    _check(report, "weyl", "Weyl invariance", weyl_)
    _check(report, "quiver", "arrow well-definedness", quiver_)
    _check(report, "deformed-quiver", "lifted arrow well-definedness", deformed_quiver_)
    return report


def _emit_report(report: VerificationReport, args, out) -> int:
    out.write((_dumps(report.to_dict()) if args.json else report.format_text()) + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_verify(args, out):
    return _emit_report(verify_all(args.r, args.a, args.bound, args.path_bound), args, out)


def _cmd_golden(args, out):
    lam = None
    if args.lam is not None:
        try:
            lam = Fraction(args.lam)
        except (ValueError, ZeroDivisionError):
            raise DomainError(f"cannot read lambda {args.lam!r} as a rational number")
    return _emit_report(verify_fixture(load_fixture(args.name, lam, args.fixtures_dir)), args, out)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="reconalg", description="Reconstruction algebras of cyclic surface quotients.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def group_cmd(name, help_, fn):
        p = sub.add_parser(name, help=help_)
        p.add_argument("r", type=int)
        p.add_argument("a", type=int)
        p.set_defaults(func=fn)
        return p

    p = group_cmd("fraction", "continued fraction expansions", _cmd_fraction)
    p.add_argument("--json", action="store_true")
    p = group_cmd("ring", "presentation of the invariant ring", _cmd_ring)
    p.add_argument("--deformed", action="store_true")
    p.add_argument("--json", action="store_true")
    p = group_cmd("modules", "special module classes", _cmd_modules)
    p.add_argument("--json", action="store_true")
    for name, fn, help_ in (
        ("quiver", _cmd_quiver, "quiver with relations"),
        ("verify", _cmd_verify, "run all consistency checks"),
    ):
        p = group_cmd(name, help_, fn)
        p.add_argument("--bound", type=int, default=None, help="Hom search degree bound (default 2r)")
        p.add_argument("--path-bound", type=int, default=None, help="path degree bound (default 3r)")
        if name == "quiver":
            p.add_argument("--deformed", action="store_true")
            p.add_argument("--format", choices=("text", "json", "dot"), default="text")
        else:
            p.add_argument("--json", action="store_true")
    p = sub.add_parser("golden", help="load and verify a golden fixture")
    p.add_argument("name", choices=FIXTURE_NAMES)
    p.add_argument("--lambda", dest="lam", default=None, help="rational parameter p/q, not 0 or 1")
    p.add_argument("--fixtures-dir", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_golden)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except BoundExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except DomainError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ReconError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


def main() -> None:
    sys.exit(run())
