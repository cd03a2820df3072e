"""
Command-line interface ``qm``.

Exit codes: 0 on success, 1 when a check fails, 2 for usage errors
(bad arguments, unparsable expressions, unsupported parameter values).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from .acceptance import SuiteConfig, run_suite
from .centralizer import verify_centralizer_theorem
from .coalgebra import cocommutativity_witness
from .expr import RINGS, ExprError, evaluate, parse, eval_expr
from .qfield import PoleError, QScalar
from .quotients import (
    GLElement,
    delta_map,
    eta,
    gamma,
    phi,
    sl2_engine_commutator,
    sl2_normal_form,
    sl2_trace_commutator_formula,
    sl_ideal_member,
)
from .ring import QuantumMatrixRing, format_terms, monomial_str

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _emit(args, text: str, data) -> None:
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=False))
    else:
        print(text)


def _ring_size(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    if args.ring == "sl2" and args.n != 2:
        if args.n_given:
            raise UsageError("--ring sl2 needs --n 2")
    return 2 if args.ring == "sl2" else args.n


def _element(args):
    n = _ring_size(args)
    ring = QuantumMatrixRing(n)
    return evaluate(args.expr, ring, args.ring)


def _plain_element(args):
    value = _element(args)
    if isinstance(value, GLElement):
        value = value.canonical()
        if value.det_power:
            raise UsageError("this command needs a polynomial element, not one with det^-k")
        value = value.numerator
    return value


def _gl_json(value: GLElement):
    return {"numerator": value.numerator.to_json(), "det_power": value.det_power}


# --- commands -----------------------------------------------------------------

def cmd_normalize(args) -> int:
    value = _element(args)
    if isinstance(value, GLElement):
        value = value.canonical()
        _emit(args, str(value), _gl_json(value))
        return EXIT_OK
    if args.ring == "sl2":
        value = sl2_normal_form(value)
    _emit(args, str(value), value.to_json())
    return EXIT_OK


def cmd_cocommutative(args) -> int:
    a = _plain_element(args)
    witness = cocommutativity_witness(a)
    if witness is None:
        _emit(args, "true", {"cocommutative": True})
        return EXIT_OK
    (left, right), c_delta, c_flip = witness
    n = a.ring.n
    pair = f"{monomial_str(left, n)} (x) {monomial_str(right, n)}"
    text = f"false\nwitness: {pair}: coproduct {c_delta}, flipped {c_flip}"
    _emit(args, text, {"cocommutative": False,
                       "witness": {"left": [[*a.ring.gen_pair(g), e] for g, e in enumerate(left) if e],
                                   "right": [[*a.ring.gen_pair(g), e] for g, e in enumerate(right) if e],
                                   "coproduct": c_delta.to_json(), "flipped": c_flip.to_json()}})
    return EXIT_OK


def cmd_map(args) -> int:
    a = _plain_element(args)
    if args.via == "eta":
        image = eta(a)
    elif args.via in ("phi", "delta"):
        if a.ring.n < 2:
            raise UsageError(f"--via {args.via} needs --n 2 or more")
        image = phi(a) if args.via == "phi" else delta_map(phi(a))
    else:
        image = gamma(a)
    _emit(args, str(image), image.to_json())
    return EXIT_OK


def cmd_sl_member(args) -> int:
    member = sl_ideal_member(_plain_element(args))
    _emit(args, "true" if member else "false", {"member": member})
    return EXIT_OK


def cmd_sl2_nf(args) -> int:
    args.ring = "sl2"
    args.n = 2
    value = sl2_normal_form(_plain_element(args))
    _emit(args, str(value), value.to_json())
    return EXIT_OK


def cmd_sl2_oracle(args) -> int:
    exps = dict(i=args.i, k=args.k, l=args.l, j=args.j)
    try:
        formula = sl2_trace_commutator_formula(args.shape, **exps)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    engine = sl2_engine_commutator(args.shape, **exps)
    match = formula == engine
    text = f"formula: {formula}\nengine:  {engine}\nmatch:   {'true' if match else 'false'}"
    _emit(args, text, {"shape": args.shape, **exps, "formula": formula.to_json(),
                       "engine": engine.to_json(), "match": match})
    return EXIT_OK if match else EXIT_FAIL


def _check_q0(q0: Optional[Fraction], symbolic: bool) -> None:
    if q0 is None:
        return
    if q0 == 0:
        raise UsageError("q0 must be nonzero")
    if symbolic and q0 in (1, -1):
        raise UsageError(f"q0 = {q0} is a root of unity; the centralizer statement fails there")


def cmd_centralizer(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    if args.deg is None or args.deg < 0:
        raise UsageError("--deg must be given and nonnegative")
    _check_q0(args.q0, symbolic=True)
    q = QScalar.from_fraction(args.q0) if args.q0 is not None else None
    report = (verify_centralizer_theorem(args.n, args.deg, q=q) if q is not None
              else verify_centralizer_theorem(args.n, args.deg))
    _emit(args, str(report), report.to_json())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_suite(args) -> int:
    try:
        config = SuiteConfig.for_size(args.n, args.max_deg)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        results = run_suite(config)
        print(json.dumps([r.to_json() for r in results], indent=2))
    else:
        results = run_suite(config, report=lambda r: print(r.line(), flush=True))
        passed = sum(r.passed for r in results)
        print(f"{passed}/{len(results)} criteria passed")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_eval_q(args) -> int:
    if args.q0 is None:
        raise UsageError("--q0 is required")
    _check_q0(args.q0, symbolic=False)
    if args.q0 in (1, -1):
        print(f"warning: q0 = {args.q0} is a root of unity; the centralizer and"
              " maximality statements do not hold there", file=sys.stderr)
    n = _ring_size(args)
    ring = QuantumMatrixRing(n)
    tree = parse(args.expr, n, args.ring)
    value = eval_expr(tree, ring, args.ring)
    if isinstance(value, QScalar):
        v = value.evaluate(args.q0)
        _emit(args, str(v), {"value": [v.numerator, v.denominator]})
        return EXIT_OK
    if isinstance(value, GLElement):
        value = value.canonical()
        if value.det_power:
            raise UsageError("eval-q needs a polynomial element, not one with det^-k")
        value = value.numerator
    if args.ring == "sl2":
        value = sl2_normal_form(value)
    values = {m: QScalar.from_fraction(c) for m, c in value.evaluate(args.q0).items() if c}
    items = sorted(values.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))
    text = format_terms(items, n)
    _emit(args, text, [{"coeff": [c.constant_value().numerator, c.constant_value().denominator],
                        "mono": [[*ring.gen_pair(g), e] for g, e in enumerate(m) if e]}
                       for m, c in items])
    return EXIT_OK


# --- argument parsing -------------------------------------------------------------

class _NAction(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        setattr(namespace, self.dest, values)
        namespace.n_given = True


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=2, action=_NAction,
                        help="matrix size (default 2)")
    common.add_argument("--ring", choices=RINGS, default="m",
                        help="m: O_q(M_n); gl: allow det^-k; sl2: accept a, b, c, d")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="qm", description="Exact computations in O_q(M_n).")
    parser.set_defaults(n_given=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def with_expr(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("expr")
        p.set_defaults(func=func)
        return p

    with_expr("normalize", cmd_normalize, "print the PBW normal form")
    with_expr("cocommutative", cmd_cocommutative, "test Delta(a) = flip(Delta(a))")
    p = with_expr("map", cmd_map, "apply eta, phi, delta o phi or gamma")
    p.add_argument("--via", choices=("eta", "phi", "delta", "gamma"), required=True)
    with_expr("sl-member", cmd_sl_member, "test membership in the ideal (det - 1)")
    with_expr("sl2-nf", cmd_sl2_nf, "normal form in O_q(SL_2)")
    p = with_expr("eval-q", cmd_eval_q, "specialise q to a rational number")
    p.add_argument("--q0", type=_rational)

    p = sub.add_parser("sl2-oracle", parents=[common], help="closed-form [a + d, m] against the engine")
    p.add_argument("--shape", choices=("a-side", "d-side", "pure"), required=True)
    for flag in ("i", "k", "l", "j"):
        p.add_argument(f"-{flag}", type=int, default=0)
    p.set_defaults(func=cmd_sl2_oracle)

    p = sub.add_parser("centralizer", parents=[common], help="check one graded slice of the centralizer")
    p.add_argument("--deg", type=int)
    p.add_argument("--q0", type=_rational, help="work in the ring specialised at this value")
    p.set_defaults(func=cmd_centralizer)

    p = sub.add_parser("suite", parents=[common], help="run the acceptance criteria")
    p.add_argument("--max-deg", type=int, default=4)
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, ExprError, PoleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
