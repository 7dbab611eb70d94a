"""Command-line verifier: classify constraints, reproduce counterexamples, run suites."""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .cases import run_counterexample_suite, select_cases
from .report import emit_report, exit_status, from_case, from_law, from_suite, summarize
from .scalars import Constraint, classify, parse_scalar
from .suites import DEFAULT_WEIGHTS, run_law_suite, run_positive_suite


def _weights(text: str) -> list:
    return [parse_scalar(part) for part in text.split(",") if part.strip()]


def _ints(text: str) -> list:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _constraint(args) -> Constraint:
    return Constraint.parse(args.phi, args.psi)


def cmd_classify(args) -> int:
    omega = _constraint(args)
    v = classify(omega)
    print(f"constraint: {omega}")
    print(f"normal form: {v.describe()}")
    print(f"weight-zero family: {'member' if v.in_omega0 else 'not a member'}")
    print(f"all-weight family: {'member' if v.in_omegak else 'not a member'}")
    print("covers of weight-0 Rota-Baxter operators stay Rota-Baxter: " + ("yes" if v.in_omega0 else "no"))
    print("covers of Rota-Baxter operators of every weight stay Rota-Baxter: " + ("yes" if v.in_omegak else "no"))
    return 0


def _output(entries, args) -> int:
    if getattr(args, "summary", False):
        sys.stdout.write(summarize(entries))
    else:
        sys.stdout.write(emit_report(entries, args.format, timing=not args.no_timing))
    return exit_status(entries)


def cmd_repro(args) -> int:
    cases = select_cases(args.cases)
    results = run_counterexample_suite(parse_scalar(args.weight), args.grid, args.max_degree, cases)
    return _output([from_case(r) for r in results], args)


def cmd_positive(args) -> int:
    entries = run_positive_suite(
        _constraint(args), args.weights, args.trials, args.seed, args.order,
        algebras=args.algebra or ["dp:1", "dp:2", "dp:3", "dp:4", "dp:5"],
        extension=not args.no_extension,
    )
    return _output([from_suite(e) for e in entries], args)


def cmd_laws(args) -> int:
    results = run_law_suite(args.seed, args.degree_cap, args.weights, args.samples)
    return _output([from_law(r, args.seed) for r in results], args)


def _add_output(p: argparse.ArgumentParser, summary: bool = False) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed times, for byte-stable comparisons")
    if summary:
        p.add_argument("--summary", action="store_true", help="print per-case counts instead of every row")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rbcovers", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="membership of xy - (phi(x) + y psi(x)) in the classified families")
    p.add_argument("--phi", default="", help="coefficients of phi, lowest degree first (e.g. 0,1)")
    p.add_argument("--psi", default="", help="coefficients of psi, lowest degree first")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("repro", help="reproduce the counterexample defects over a coefficient grid")
    p.add_argument("--cases", default="all", help="all, or a comma list such as i,iv,C2,W")
    p.add_argument("--weight", default="0")
    p.add_argument("--grid", type=_ints, default=[-2, -1, 1, 2])
    p.add_argument("--max-degree", type=int, default=3)
    _add_output(p, summary=True)
    p.set_defaults(func=cmd_repro)

    p = sub.add_parser("positive", help="random search for cover defects, cover relation and extension checks")
    p.add_argument("--phi", default="")
    p.add_argument("--psi", default="")
    p.add_argument("--weights", type=_weights, default=list(DEFAULT_WEIGHTS))
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--algebra", action="append", help="dp:<m>, dp:inf or free:dp:<m>; repeatable (default dp:1..dp:5)")
    p.add_argument("--no-extension", action="store_true", help="skip the extension differential check")
    _add_output(p, summary=True)
    p.set_defaults(func=cmd_positive)

    p = sub.add_parser("laws", help="monad, comonad, vartheta and theta laws")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--degree-cap", type=int, default=3)
    p.add_argument("--weights", type=_weights, default=list(DEFAULT_WEIGHTS))
    p.add_argument("--samples", type=int, default=20)
    _add_output(p)
    p.set_defaults(func=cmd_laws)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        parser.exit(2, f"rbcovers: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
