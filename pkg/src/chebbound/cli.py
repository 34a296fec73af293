"""Command-line front end.

    chebbound table   --max-nu 30 --digits 12 --format csv
    chebbound sup     --nu 2 --digits 12
    chebbound poly    --kind R --k 0
    chebbound certify --nu-max 1000

Exit codes: 0 on success (all checks passed), 1 if a certificate check
failed, 2 on usage errors.  The default working precision can be set with
the CHEBBOUND_PRECISION environment variable; --precision overrides it.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
from fractions import Fraction

from chebbound.certificate import FIRST_NU, u_star_upper, verify_theorem
from chebbound.chebyshev import cheb_expand
from chebbound.decomposition import triple
from chebbound.numerics import DEFAULT_PRECISION, GUARD_DIGITS, round_decimal
from chebbound.supremum import compute_sup, sup_table

PRECISION_ENV = "CHEBBOUND_PRECISION"


def _default_precision() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if raw is None:
        return DEFAULT_PRECISION
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_PRECISION


def _frac(q: Fraction) -> str:
    return str(q)


def _render_table(results, digits: int, fmt: str) -> str:
    rows = [(r.nu, round_decimal(r.value_exact, digits)) for r in results]
    if fmt == "csv":
        return "nu,value\n" + "".join(f"{nu},{v}\n" for nu, v in rows)
    if fmt == "json":
        payload = [
            {
                "nu": r.nu,
                "value": v,
                "maximizer_t": round_decimal(r.maximizer_t, digits, r.precision),
                "candidates": len(r.candidates),
            }
            for r, (_, v) in zip(results, rows)
        ]
        return json.dumps(payload, indent=2) + "\n"
    out = io.StringIO()
    out.write("| nu | C_nu/(2nu+1) |\n|---:|---:|\n")
    for nu, v in rows:
        out.write(f"| {nu} | {v} |\n")
    return out.getvalue()


def cmd_table(args) -> int:
    results = sup_table(args.max_nu, args.digits, args.precision, args.jobs)
    sys.stdout.write(_render_table(results, args.digits, args.format))
    return 0


def cmd_sup(args) -> int:
    r = compute_sup(args.nu, args.digits, args.precision)
    value = round_decimal(r.value_exact, args.digits)
    tmax = round_decimal(r.maximizer_t, args.digits, r.precision)
    if args.format == "json":
        payload = {
            "nu": r.nu,
            "value": value,
            "value_exact": _frac(r.value_exact),
            "maximizer_t": tmax,
            "endpoint_is_max": r.endpoint_is_max,
            "method": r.method,
            "candidates": [
                {
                    "x_bracket": [_frac(a) for a in c.x_bracket],
                    "t_bracket": [_frac(a) for a in c.t_bracket],
                    "value": round_decimal(c.value, args.digits),
                }
                for c in r.candidates
            ],
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(
            f"nu = {r.nu}\n"
            f"value = {value}\n"
            f"maximizer_t = {tmax}\n"
            f"candidates = {len(r.candidates)}\n"
        )
    return 0


def cmd_poly(args) -> int:
    if args.kind == "T":
        poly = cheb_expand(args.k)
    else:
        poly = getattr(triple(args.k), args.kind)
    coeffs = list(poly.coeffs) or [0]
    if args.format == "json":
        payload = {"kind": args.kind, "k": args.k, "variable": poly.var, "coefficients": coeffs}
        sys.stdout.write(json.dumps(payload) + "\n")
    else:
        sys.stdout.write(
            f"{args.kind}_{args.k}({poly.var}) = {poly}\n"
            f"variable: {poly.var}\n"
            f"coefficients: {coeffs}\n"
        )
    return 0


def cmd_certify(args) -> int:
    cert = verify_theorem(args.nu_max, sup_cap=args.sup_cap, precision=args.precision, jobs=args.jobs)
    status = {True: "PASS", False: "FAIL"}
    prec = args.precision
    lines = [
        f"nu_max = {cert.nu_max}",
        f"u1(31) = {cert.u1_at_31} : {status[cert.checks['u1_exact']]}",
        f"u2(31) = {cert.u2_at_31} : {status[cert.checks['u2_exact']]}",
        f"alpha* = {round_decimal(cert.alpha_star, 12, prec)}",
        f"U(alpha*) = {round_decimal(cert.U_at_alpha_star, 12, prec)} < 4/9 : {status[cert.checks['U_below_4_9']]}",
        f"U(alpha*) upper bound = {round_decimal(u_star_upper(), 15)}",
        f"feasible interval at nu=31 = [{cert.feasible_interval[0]}, {round_decimal(cert.feasible_interval[1], 12, prec)}]",
    ]
    for name, ok in cert.checks.items():
        lines.append(f"check {name} : {status[ok]}")
    if cert.passed:
        lines.append("RESULT: PASS")
    else:
        lines.append("RESULT: FAIL (" + ", ".join(cert.failed) + ")")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0 if cert.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chebbound", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, digits=True):
        p.add_argument("--precision", type=int, default=_default_precision(), help="working precision in decimal digits")
        if digits:
            p.add_argument("--digits", type=int, default=12, help="fractional digits to print")

    p = sub.add_parser("table", help="C_nu/(2nu+1) for nu = 1..max-nu")
    p.add_argument("--max-nu", type=int, default=30)
    p.add_argument("--format", choices=("markdown", "csv", "json"), default="markdown")
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("sup", help="certified supremum for one nu")
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    common(p)
    p.set_defaults(func=cmd_sup)

    p = sub.add_parser("poly", help="exact coefficients of T_k, P_k, Q_k or R_k")
    p.add_argument("--kind", choices=("T", "P", "Q", "R"), required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("certify", help="run every check of the 1/4 <= C_nu/(2nu+1) <= 4/9 certificate")
    p.add_argument("--nu-max", type=int, default=10_000)
    p.add_argument("--sup-cap", type=int, default=200, help="largest nu whose supremum is computed directly")
    p.add_argument("--jobs", type=int, default=1)
    common(p, digits=False)
    p.set_defaults(func=cmd_certify)
    return parser


def _validate(parser: argparse.ArgumentParser, args) -> None:
    digits = getattr(args, "digits", 12)
    if digits < 1:
        parser.error("--digits must be >= 1")
    if hasattr(args, "precision") and args.precision < digits + GUARD_DIGITS:
        parser.error(f"--precision must be at least digits + {GUARD_DIGITS}")
    if args.command == "table" and args.max_nu < 1:
        parser.error("--max-nu must be >= 1")
    if args.command == "sup" and args.nu < 1:
        parser.error("--nu must be >= 1")
    if args.command == "poly" and args.k < 0:
        parser.error("--k must be >= 0")
    if args.command == "certify":
        if args.nu_max < FIRST_NU:
            parser.error(f"--nu-max must be at least {FIRST_NU}")
        if args.sup_cap < 30:
            parser.error("--sup-cap must be at least 30 to cover the published table")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
