"""Command-line front end.

Exit codes: 0 when everything requested passed, 1 when a verification
failed or a state matched nothing, 2 on usage errors (bad expressions,
malformed momenta, unknown names).  DIRACSYM_FORMAT selects the default
report format (json or md).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .canonical import canonicalize, monomial_str
from .expr import ExprError, parse
from .lorentz import ALL_COMPONENTS, LorentzMatrix, classify as classify_lorentz, is_lorentz, union_is_group
from .planewave import Family, make_state, state_to_json
from .report import SUITE_NAMES, emit, run_suite
from .representations import REPRESENTATION_NAMES
from .residual import classify as classify_state
from .scalars import parse_rational

from itertools import combinations


def _parse_momentum(text: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError("momentum must be three comma-separated rationals, e.g. 0,0,3/4")
    return tuple(parse_rational(p) for p in parts)


def _default_format() -> str:
    fmt = os.environ.get("DIRACSYM_FORMAT", "json").lower()
    return fmt if fmt in ("json", "md", "markdown") else "json"


def _cmd_canon(args) -> int:
    try:
        form = canonicalize(parse(args.expr))
    except ExprError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    items = form.items()
    if not items:
        print("0")
        return 0
    for subset, coeff in items:
        print(f"{coeff} {monomial_str(subset)}")
    return 0


def _cmd_state(args) -> int:
    try:
        state = make_state(args.family, _parse_momentum(args.p), parse_rational(args.m))
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(state_to_json(state), indent=2))
        return 0
    mom = state.momentum
    print(f"family: {state.family.value}")
    print(f"p: ({', '.join(str(x) for x in mom.p)})  m: {mom.m}")
    print(f"E: {mom.E} ({'exact' if mom.exact else 'float'})")
    print(f"bispinor: ({', '.join(str(b) for b in state.bispinor)})")
    print(f"norm^2: {state.norm_factor_squared}")
    print(f"exponent sign: {state.exponent_sign:+d}")
    print(
        "interpretation: energy {:+d}, mass {:+d}".format(
            state.interpretation.energy_sign, state.interpretation.mass_sign
        )
    )
    return 0


def _cmd_classify_state(args) -> int:
    try:
        state = make_state(args.family, _parse_momentum(args.p), parse_rational(args.m))
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    results = classify_state(state)
    for c in results:
        print(
            json.dumps(
                {
                    "equation": c.equation_tag.value,
                    "reading": c.reading.value,
                    "satisfied": c.satisfied,
                    "residual_norm": c.residual_norm,
                }
            )
        )
    return 0 if results else 1


def _cmd_verify(args) -> int:
    reference = None
    if args.p is not None or args.m is not None:
        if args.p is None or args.m is None:
            print("error: --p and --m must be given together", file=sys.stderr)
            return 2
        try:
            reference = (_parse_momentum(args.p), parse_rational(args.m))
        except ValueError as err:
            print(f"error: {err}", file=sys.stderr)
            return 2
    report = run_suite(args.suite, seed=args.seed, rep=args.rep, reference=reference)
    fmt = args.format or _default_format()
    text = emit(report, "md" if fmt in ("md", "markdown") else "json")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    print(text)
    return 0 if report.all_passed else 1


def _cmd_classify_lorentz(args) -> int:
    try:
        with open(args.matrix) as fh:
            data = json.load(fh)
        if not isinstance(data, list) or len(data) != 16:
            raise ValueError("matrix file must hold a JSON array of 16 reals (row-major)")
        rows = [[_as_real(x) for x in data[4 * i : 4 * i + 4]] for i in range(4)]
        lam = LorentzMatrix(rows)
        if not is_lorentz(lam):
            print("error: not a Lorentz matrix", file=sys.stderr)
            return 1
        label = classify_lorentz(lam)
    except (OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    print(
        json.dumps(
            {
                "label": label.name,
                "det_sign": label.det_sign,
                "time_sign": label.time_sign,
            }
        )
    )
    return 0


def _as_real(x):
    if isinstance(x, (int,)):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x) if float(Fraction(x)) == x and x == int(x) else x
    if isinstance(x, str):
        return parse_rational(x)
    raise ValueError(f"matrix entries must be numbers, got {x!r}")


def _cmd_group_scan(args) -> int:
    print("| components | group |")
    print("| --- | --- |")
    count = 0
    for r in range(1, 5):
        for combo in combinations(ALL_COMPONENTS, r):
            ok = union_is_group(combo)
            count += 1 if ok else 0
            print(f"| {{{', '.join(l.name for l in combo)}}} | {'yes' if ok else 'no'} |")
    print(f"\n{count} of 15 nonempty component unions are groups")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diracsym",
        description="exact checks for the gamma algebra, plane-wave families, discrete symmetries and Lorentz components",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("canon", help="print the canonical coefficients of an expression")
    p.add_argument("expr", help="e.g. 'g1*g2 - g2*g1' or 'i*g0*g1*g2*g3'")
    p.set_defaults(func=_cmd_canon)

    p = sub.add_parser("state", help="construct a plane-wave family state")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--p", required=True, help="p1,p2,p3 as rationals")
    p.add_argument("--m", required=True, help="mass, rational and nonzero")
    p.add_argument("--json", action="store_true", help="emit the JSON state dump")
    p.set_defaults(func=_cmd_state)

    p = sub.add_parser("classify-state", help="equation/reading pairs a state satisfies")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--p", required=True)
    p.add_argument("--m", required=True)
    p.set_defaults(func=_cmd_classify_state)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rep", choices=REPRESENTATION_NAMES, default="dirac")
    p.add_argument("--p", default=None, help="extra exact momentum for the mapping relations")
    p.add_argument("--m", default=None, help="mass going with --p")
    p.add_argument("--format", choices=("json", "md", "markdown"), default=None)
    p.add_argument("--out", default=None, help="also write the report to this file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("classify-lorentz", help="component label of a matrix file")
    p.add_argument("--matrix", required=True, help="JSON file with 16 reals, row-major")
    p.set_defaults(func=_cmd_classify_lorentz)

    p = sub.add_parser("group-scan", help="closure table over the 15 component unions")
    p.set_defaults(func=_cmd_group_scan)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
