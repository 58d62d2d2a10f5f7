"""Command-line front end.

Exit status: 0 for a trivial verdict or a passing check run, 1 for a
nontrivial verdict or a failing check, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence

from . import __version__
from .checks import BatteryConfig, run_battery
from .crystal import p5_report, regular_pyramids, verify_gluing_relations
from .dehn import complexity as tensor_complexity
from .dehn import dehn_invariant, ratio_hypothesis, triviality_verdict
from .diophantine import hexagonal_eliminate, hexagonal_families, oracle_norm_equation, solve_prop10
from .errors import DomainError
from .pyramid import PyramidSpec
from .report import document, dumps, format_rational

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"malformed rational {text!r}; expected p/q") from None
    return q


def _positive_int(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if k < 1:
        raise argparse.ArgumentTypeError(f"{text} must be at least 1")
    return k


def _b_max(text: str) -> int:
    k = _positive_int(text)
    if k < 2:
        raise argparse.ArgumentTypeError("--b-max must be at least 2")
    return k


def _spec(args: argparse.Namespace) -> PyramidSpec:
    try:
        if args.h2 is not None:
            return PyramidSpec.from_h2(args.n, args.h2)
        return PyramidSpec.from_v(args.n, args.v)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def _emit(args: argparse.Namespace, command: str, inputs: dict, payload: object, text_lines: list[str]) -> None:
    if args.json:
        print(dumps(document(command, inputs, payload)))
    else:
        print("\n".join(text_lines))


def _spec_inputs(args: argparse.Namespace) -> dict:
    return {"n": args.n, "h2": args.h2, "v": args.v}


def cmd_verdict(args: argparse.Namespace) -> int:
    spec = _spec(args)
    rep = triviality_verdict(spec, verbose=args.verbose)
    lines = [f"{spec}: {rep.verdict}", f"Dehn invariant: {rep.tensor}"]
    for r in rep.chain:
        lines.append(f"  [{r.tag.value}] {r.message}")
    payload = {
        "spec": str(spec),
        "h2": spec.h2,
        "v": spec.v,
        "verdict": rep.verdict,
        "chain": rep.chain,
        "tensor": rep.tensor,
        "complexity": rep.complexity,
    }
    _emit(args, "verdict", _spec_inputs(args), payload, lines)
    return EXIT_OK if rep.trivial else EXIT_FAIL


def cmd_solve_norm(args: argparse.Namespace) -> int:
    closed = solve_prop10(args.b_max) if args.mode in ("closed", "both") else None
    oracle = oracle_norm_equation(args.b_max) if args.mode in ("oracle", "both") else None
    sols = closed if closed is not None else oracle
    agreement = closed == oracle if args.mode == "both" else None
    rows = sorted(sols)
    lines = [str(s) for s in rows]
    if agreement is not None:
        lines.append(f"closed form and brute force agree: {agreement}")
    payload = {"solutions": rows, "count": len(rows), "agreement": agreement}
    _emit(args, "solve-norm", {"b_max": args.b_max, "mode": args.mode}, payload, lines)
    return EXIT_OK if agreement in (None, True) else EXIT_FAIL


def cmd_families(args: argparse.Namespace) -> int:
    members = sorted(hexagonal_families(args.s_max, args.d_max), key=lambda m: (m.b, m.a))
    certs = [hexagonal_eliminate(m) for m in members]
    lines = [
        f"{c.member.family} s={c.s} d={c.d} (a,b)=({c.member.a},{c.member.b}): "
        f"b > d+2: {c.b_exceeds_d_plus_2}, b > s: {c.b_exceeds_s} -> {c.contradiction}"
        for c in certs
    ]
    _emit(args, "families", {"s_max": args.s_max, "d_max": args.d_max}, {"certificates": certs}, lines or ["(no members)"])
    return EXIT_OK if all(c.valid for c in certs) else EXIT_FAIL


def cmd_verify_paper(args: argparse.Namespace) -> int:
    cfg = BatteryConfig(q_max=args.q_max, height_bound=args.height_bound, b_max=args.b_max)
    checks = run_battery(cfg)
    lines = []
    for c in checks:
        lines.append(f"{'PASS' if c.passed else 'FAIL'}  {c.name}")
        if args.verbose or not c.passed:
            lines.append(f"      expected {c.expected}")
            lines.append(f"      computed {c.computed}")
    ok = all(c.passed for c in checks)
    lines.append(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed")
    _emit(args, "verify-paper", {"q_max": args.q_max, "height_bound": args.height_bound, "b_max": args.b_max}, {"checks": checks, "all_passed": ok}, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_complexity(args: argparse.Namespace) -> int:
    spec = _spec(args)
    t = dehn_invariant(spec)
    comp = tensor_complexity(t)
    lines = [f"{spec}: Dehn = {t}", f"complexity in [{comp.lower}, {comp.upper}]"]
    payload: dict = {"spec": str(spec), "tensor": t, "complexity": comp}
    if args.ratio is not None:
        length, theta = ratio_hypothesis(spec, args.ratio)
        text = " + ".join(f"{format_rational(c)}*{s}" for c, s in length)
        lines.append(f"if phi = {args.ratio} * theta: Dehn = ({text}) (x) {theta}")
        payload["ratio_hypothesis"] = {"r": args.ratio, "length": [{"coefficient": c, "surd": s} for c, s in length], "angle": theta}
    _emit(args, "complexity", {**_spec_inputs(args), "ratio": args.ratio}, payload, lines)
    return EXIT_OK


def cmd_crystal(args: argparse.Namespace) -> int:
    pyr = regular_pyramids()
    glue = verify_gluing_relations()
    p5 = p5_report()
    lines = [f"regular pyramid n={p.n}: h^2 = {p.h_squared}, c^2 = {p.edge_squared}" for p in pyr]
    lines += [
        f"exp(i phi_3) * exp(i phi_4) = {glue.phi_product}",
        f"Dehn(P_4(1)) = {glue.dehn_p4}",
        f"Dehn(P_3(sqrt2)) = {glue.dehn_p3}",
        f"sqrt3 Dehn(P_4(1)) + sqrt2 Dehn(P_3(sqrt2)) = {glue.relation_1}",
        f"3 sqrt2 Dehn(P_4(1)) + 2 sqrt3 Dehn(P_3(sqrt2)) = {glue.relation_2}",
        f"3 Dehn(K') + 2 Dehn(T') = {glue.crystal} (edges {glue.crystal_edges[0]}, {glue.crystal_edges[1]})",
        f"P_5: W = Z^2 = {p5.W}, |W|^2 = {p5.W_rel_norm}, W^60 = 1: {p5.W60_is_one}",
    ]
    if args.verbose:
        lines += [f"P_5: cos(phi) = {p5.cos_phi}, cos^2(theta) = {p5.cos2_theta}", f"P_5: numerator of Z = {p5.z_numerator}", f"P_5: W^60 = {p5.W60}"]
    ok = glue.passed and not p5.W60_is_one
    _emit(args, "crystal", {}, {"regular_pyramids": pyr, "gluing": glue, "p5": p5, "passed": ok}, lines)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit a JSON report")
    common.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS, help="record all evidence")

    parser = argparse.ArgumentParser(prog="symdehn", allow_abbrev=False, description="Exact Dehn-invariant verdicts for right regular pyramids.")
    parser.add_argument("--version", action="version", version=f"symdehn {__version__}")
    parser.add_argument("--json", action="store_true", default=False, help="emit a JSON report")
    parser.add_argument("--verbose", action="store_true", default=False, help="record all evidence")
    sub = parser.add_subparsers(dest="command", required=True)

    def spec_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("n", type=int, choices=(3, 4, 6), help="number of base vertices")
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--h2", type=_rational, help="squared apex height p/q")
        g.add_argument("--v", type=_rational, help="ratio v = sin(pi/n)/sqrt(1+h^2) as a/b")

    p = sub.add_parser("verdict", parents=[common], help="is Dehn(P_n(h)) zero?")
    spec_args(p)
    p.set_defaults(func=cmd_verdict)

    p = sub.add_parser("solve-norm", parents=[common], help="solve (b^2-a^2)^2 = 2^k n^b")
    p.add_argument("--b-max", type=_b_max, required=True)
    p.add_argument("--mode", choices=("closed", "oracle", "both"), default="closed")
    p.set_defaults(func=cmd_solve_norm)

    p = sub.add_parser("families", parents=[common], help="hexagonal families with elimination certificates")
    p.add_argument("--s-max", type=_positive_int, required=True)
    p.add_argument("--d-max", type=_positive_int, required=True)
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("verify-paper", parents=[common], help="run every exact reproduction check")
    p.add_argument("--q-max", type=_positive_int, default=120, help="denominator bound for the two-cosine oracle")
    p.add_argument("--height-bound", type=_positive_int, default=50, help="p, q bound of the h^2 sweep")
    p.add_argument("--b-max", type=_b_max, default=64, help="denominator bound of the v sweep")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("complexity", parents=[common], help="complexity of Dehn(P_n(h))")
    spec_args(p)
    p.add_argument("--ratio", type=_rational, help="assume phi = r * theta")
    p.set_defaults(func=cmd_complexity)

    p = sub.add_parser("crystal", parents=[common], help="regular pyramids, gluing relations and the pentagonal check")
    p.set_defaults(func=cmd_crystal)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"symdehn {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
