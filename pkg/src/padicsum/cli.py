"""Command-line front end.

Machine mode emits one self-contained JSON record per line with fields
{command, params, result, ok}; every number is an exact integer or a
"num/den" string, never a decimal.  Exit codes: 0 all ok, 1 verification
failure or hypothesis counterexample, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bernoulli import (
    bernoulli_identity_partial,
    bernoulli_numbers,
    volkenborn_level,
    volkenborn_poly,
)
from .padic import Prime, ValExponent, padic_expand, vp
from .poly import Poly, int_poly
from .recurrences import shared_family
from .sequences import kurepa_digit_scan, kurepa_gcd_scan, paper_sequences
from .summation import (
    SeriesSpec,
    in_convergence_domain,
    invariant_sum,
    build_P_Q,
    truncated_padic_sum,
    verify_identity,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def fmt_q(q) -> int | str:
    """Exact rendering: plain int or 'num/den'."""
    q = Fraction(q)
    if q.denominator == 1:
        return int(q)
    return f"{q.numerator}/{q.denominator}"


def fmt_exp(e: ValExponent) -> int | str:
    return e.value if e.finite else "inf"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def parse_int_set(text: str) -> list[int]:
    """Comma list of integers and inclusive 'a..b' ranges."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def parse_rational_set(text: str) -> list[Fraction]:
    """Comma list of rationals; integer 'a..b' ranges also accepted."""
    out: list[Fraction] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(Fraction(v) for v in range(int(lo), int(hi) + 1))
        else:
            out.append(Fraction(part))
    return out


class Emitter:
    def __init__(self, command: str, machine: bool):
        self.command = command
        self.machine = machine

    def emit(self, params: dict, result: dict, ok: bool, human: str) -> None:
        if self.machine:
            record = {
                "command": self.command,
                "params": params,
                "result": result,
                "ok": ok,
            }
            print(json.dumps(record))
        else:
            print(human)


def cmd_triples(args, machine: bool) -> int:
    if args.kmax < 1:
        print("error: --kmax must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    em = Emitter("triples", machine)
    fam = shared_family()
    fam.ensure(args.kmax)
    for k in range(1, args.kmax + 1):
        trip = fam.triple(k)
        result = {
            "k": k,
            "U": [int(c) for c in trip.U.coeffs],
            "V": [int(c) for c in trip.V.coeffs],
            "A": [[int(c) for c in layer.coeffs] for layer in trip.A.layers],
        }
        human = f"U_{k} = {trip.U}; V_{k} = {trip.V}; A_{k - 1} = {trip.A}"
        em.emit({"k": k}, result, True, human)
    return EXIT_OK


def cmd_verify(args, machine: bool) -> int:
    em = Emitter("verify", machine)
    ks = parse_int_set(args.k)
    xs = parse_rational_set(args.x_set)
    primes = [Prime(p) for p in parse_int_set(args.p_list)] if args.p_list else []
    all_ok = True
    for k in sorted(ks):
        if k < 1:
            print("error: k must be >= 1", file=sys.stderr)
            return EXIT_USAGE
        for N in range(1, args.n_max + 1):
            for x in xs:
                check = verify_identity(k, N, x)
                all_ok = all_ok and check.ok
                params = {"k": k, "N": N, "x": fmt_q(x)}
                result = {
                    "lhs": fmt_q(check.lhs),
                    "rhs": fmt_q(check.rhs),
                    "tail": fmt_q(check.tail),
                }
                em.emit(
                    params,
                    result,
                    check.ok,
                    f"identity k={k} N={N} x={fmt_q(x)}: "
                    f"lhs={fmt_q(check.lhs)} rhs={fmt_q(check.rhs)} "
                    f"{'ok' if check.ok else 'FAIL'}",
                )
                for p in primes:
                    params_p = dict(params, p=int(p))
                    if x.denominator != 1 or not in_convergence_domain(x, p):
                        em.emit(
                            params_p,
                            {"rejected": True, "reason": f"x not in Z_{int(p)}"},
                            True,
                            f"certificate k={k} N={N} x={fmt_q(x)} p={int(p)}: "
                            f"rejected (x not in Z_{int(p)})",
                        )
                        continue
                    if x == 0:
                        continue
                    cert = truncated_padic_sum(k, int(x), p, N)
                    result_p = {
                        "partial": fmt_q(cert.partial),
                        "target": fmt_q(cert.target),
                        "tail": fmt_q(cert.tail),
                        "achieved_exponent": fmt_exp(cert.distance_exponent),
                        "bound_exponent": cert.bound_exponent,
                    }
                    em.emit(
                        params_p,
                        result_p,
                        cert.ok,
                        f"certificate k={k} N={N} x={fmt_q(x)} p={int(p)}: "
                        f"partial={fmt_q(cert.partial)} target={fmt_q(cert.target)} "
                        f"achieved={fmt_exp(cert.distance_exponent)} "
                        f"bound={cert.bound_exponent} ok",
                    )
    return EXIT_OK if all_ok else EXIT_FAIL


def cmd_sum(args, machine: bool) -> int:
    em = Emitter("sum", machine)
    x = parse_rational(args.x)
    if x.denominator != 1:
        print("error: --x must be an integer (p-adic invariance)", file=sys.stderr)
        return EXIT_USAGE
    if args.C:
        C = tuple(parse_int_set(args.C))
        if len(C) != args.k:
            print("error: --C must list exactly k coefficients", file=sys.stderr)
            return EXIT_USAGE
        spec = SeriesSpec(args.k, C, x)
        _, Q = build_P_Q(spec)
        value = Fraction(Q(int(x)))
        params = {"k": args.k, "C": list(C), "x": fmt_q(x)}
    else:
        value = invariant_sum(args.k, int(x))
        params = {"k": args.k, "x": fmt_q(x)}
    em.emit(params, {"sum": fmt_q(value)}, True, f"sum = {fmt_q(value)}")
    return EXIT_OK


def cmd_padic(args, machine: bool) -> int:
    em = Emitter("padic", machine)
    q = parse_rational(args.value)
    p = Prime(args.p)
    exp = padic_expand(q, p, args.digits)
    v = vp(q, p)
    result = {
        "valuation": fmt_exp(v) if q == 0 else exp.valuation,
        "digits": list(exp.digits),
        "in_Zp": in_convergence_domain(q, p),
    }
    note = "" if in_convergence_domain(q, p) else "  [outside Z_p: negative valuation]"
    em.emit(
        {"value": fmt_q(q), "p": int(p), "digits": args.digits},
        result,
        True,
        f"{fmt_q(q)} = {exp}{note}",
    )
    return EXIT_OK


def cmd_bernoulli(args, machine: bool) -> int:
    em = Emitter("bernoulli", machine)
    if args.identity is not None:
        if args.N is None:
            print("error: --identity needs --N", file=sys.stderr)
            return EXIT_USAGE
        k, N = args.identity, args.N
        table = bernoulli_numbers(N + k)
        lhs, rhs = bernoulli_identity_partial(k, N, table)
        ok = lhs == rhs
        em.emit(
            {"k": k, "N": N},
            {"lhs": fmt_q(lhs), "rhs": fmt_q(rhs)},
            ok,
            f"bernoulli identity k={k} N={N}: lhs={fmt_q(lhs)} rhs={fmt_q(rhs)} "
            f"{'ok' if ok else 'FAIL'}",
        )
        return EXIT_OK if ok else EXIT_FAIL
    if args.level:
        p_raw, m = args.level
        p = Prime(p_raw)
        coeffs = parse_int_set(args.poly) if args.poly else [0, 1]
        P = int_poly(coeffs)
        value = volkenborn_level(P, p, m)
        em.emit(
            {"p": int(p), "m": m, "poly": coeffs},
            {"value": fmt_q(value)},
            True,
            f"volkenborn level p={int(p)} m={m}: {fmt_q(value)}",
        )
        return EXIT_OK
    if args.nmax is None:
        print("error: one of --nmax, --identity, --level required", file=sys.stderr)
        return EXIT_USAGE
    table = bernoulli_numbers(args.nmax)
    for n in range(args.nmax + 1):
        em.emit(
            {"n": n},
            {"numerator": table[n].numerator, "denominator": table[n].denominator},
            True,
            f"B_{n} = {fmt_q(table[n])}",
        )
    return EXIT_OK


def cmd_kurepa(args, machine: bool) -> int:
    em = Emitter("kurepa", machine)
    code = EXIT_OK
    if args.gcd_max is not None:
        report = kurepa_gcd_scan(args.gcd_max)
        em.emit(
            {"gcd_max": args.gcd_max},
            {
                "gcd_ok_up_to": report.gcd_ok_up_to,
                "first_failure": report.first_failure,
            },
            report.ok,
            f"gcd(!n, n!) = 2 verified for 2 <= n <= {report.gcd_ok_up_to}"
            + ("" if report.ok else f"; FAILURE at n = {report.first_failure}"),
        )
        if not report.ok:
            code = EXIT_FAIL
    if args.digit_max is not None:
        report = kurepa_digit_scan(args.digit_max)
        em.emit(
            {"digit_max": args.digit_max},
            {
                "primes_checked": report.digit_checked_primes,
                "first_failure": report.first_failure,
            },
            report.ok,
            f"0th digit nonzero for all {report.digit_checked_primes} odd primes "
            f"<= {args.digit_max}"
            + ("" if report.ok else f"; FAILURE at p = {report.first_failure}"),
        )
        if not report.ok:
            code = EXIT_FAIL
    if args.gcd_max is None and args.digit_max is None:
        print("error: need --gcd-max and/or --digit-max", file=sys.stderr)
        return EXIT_USAGE
    return code


def cmd_sequences(args, machine: bool) -> int:
    if args.kmax < 1:
        print("error: --kmax must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    em = Emitter("sequences", machine)
    seqs = paper_sequences(args.kmax)
    labels = {
        "neg_v": "-V_k(1)",
        "neg_vbar": "-V_k(-1)",
        "u": "U_k(1)",
        "neg_ubar": "-U_k(-1)",
    }
    for name, values in seqs.items():
        em.emit(
            {"kmax": args.kmax, "sequence": name},
            {"values": values},
            True,
            f"{labels[name]}: {', '.join(str(v) for v in values)}",
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="padicsum",
        description="Exact p-adic invariant summation of factorial series.",
    )
    ap.add_argument(
        "--format",
        choices=("human", "machine"),
        default="human",
        help="machine mode prints one JSON record per line",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("triples", help="render the U_k, V_k, A_{k-1} families")
    p.add_argument("--kmax", type=int, required=True)

    p = sub.add_parser("verify", help="check the finite identity on a grid")
    p.add_argument("--k", required=True, help="k values: comma list or a..b")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--x-set", required=True, help="rationals: comma list or a..b")
    p.add_argument("--p-list", help="primes for truncation certificates")

    p = sub.add_parser("sum", help="p-adic invariant sum V_k(x) or combo Q(x)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--C", help="comma list C_1..C_k for a linear combination")

    p = sub.add_parser("padic", help="canonical p-adic expansion of a rational")
    p.add_argument("--value", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--digits", type=int, default=10)

    p = sub.add_parser("bernoulli", help="Bernoulli table / identity / level sums")
    p.add_argument("--nmax", type=int)
    p.add_argument("--identity", type=int, metavar="K")
    p.add_argument("--N", type=int)
    p.add_argument("--level", type=int, nargs=2, metavar=("P", "M"))
    p.add_argument("--poly", help="integer coefficients, ascending powers")

    p = sub.add_parser("kurepa", help="left-factorial hypothesis scans")
    p.add_argument("--gcd-max", type=int)
    p.add_argument("--digit-max", type=int)

    p = sub.add_parser("sequences", help="the four U/V sequences at x = +-1")
    p.add_argument("--kmax", type=int, required=True)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0,) else 0
    machine = args.format == "machine"
    handlers = {
        "triples": cmd_triples,
        "verify": cmd_verify,
        "sum": cmd_sum,
        "padic": cmd_padic,
        "bernoulli": cmd_bernoulli,
        "kurepa": cmd_kurepa,
        "sequences": cmd_sequences,
    }
    try:
        return handlers[args.cmd](args, machine)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
