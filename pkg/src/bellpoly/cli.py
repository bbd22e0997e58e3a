"""Command line front end.

Exit status: 0 on success, 1 when an identity or series comparison fails,
2 on usage errors (bad flags, out-of-range arguments).
"""
from __future__ import annotations

import argparse
import json
import re
import sys
import time
from fractions import Fraction
from typing import Callable, Sequence

from . import adm, adomian, bell, identities, partitions
from .exactnum import BETA, MultiPoly, factorial, to_json_obj, to_text, u_name

FORMATS = ("json", "text")


class UsageError(Exception):
    pass


# -- rendering ---------------------------------------------------------------------

def _factor_text(p: MultiPoly, factor: str) -> str:
    return factor if p == 1 else f"({to_text(p)})*{factor}"


def render_adomian_abstract(a: adomian.AdomianPoly) -> str:
    """``(coeff)*D{j}`` with D{j} standing for N^(j)(u0)."""
    if not a.parts:
        return "0"
    return " + ".join(_factor_text(p, f"D{j}") for j, p in a.parts.items())


def render_value(value: MultiPoly, d: int, spec) -> str:
    """Text for an evaluated Adomian polynomial, factoring exp(c*u0) out when present."""
    den = "" if d == 0 else ("/alpha" if d == 1 else f"/alpha^{d}")
    if isinstance(spec, adomian.Exp) and "expu0" in value.variables():
        inner = value.divide_monomial("expu0", 1)
        c = MultiPoly.coerce(spec.c)
        sym = "exp(u0)" if c == 1 else f"exp({to_text(c)}*u0)"
        body = _factor_text(inner, sym)
    else:
        body = to_text(value)
    if den:
        return f"({body}){den}"
    return body


# -- argument parsing helpers -----------------------------------------------------------

_POWER_RE = re.compile(r"^\s*(?P<a>[+-]?\d+(?:/\d+)?)?\s*(?:(?P<sign>[+-])\s*(?P<b>\d+(?:/\d+)?)/alpha)?\s*$")


def parse_nonlinearity(text: str):
    """``linear``, ``exp:c`` (c rational or ``-beta``), ``power:p`` (p rational or ``a+b/alpha``)."""
    if text == "linear":
        return adomian.Linear()
    kind, _, arg = text.partition(":")
    if kind == "exp":
        arg = arg or "1"
        if arg.replace(" ", "") in ("-beta", "beta"):
            return adomian.Exp(-BETA if arg.strip().startswith("-") else BETA)
        try:
            return adomian.Exp(Fraction(arg))
        except ValueError:
            raise UsageError(f"bad exponential rate {arg!r}") from None
    if kind == "power":
        m = _POWER_RE.match(arg)
        if not arg or not m or (m.group("a") is None and m.group("b") is None):
            raise UsageError(f"bad power exponent {arg!r}")
        a = Fraction(m.group("a") or 0)
        b = Fraction(m.group("b") or 0)
        if m.group("sign") == "-":
            b = -b
        return adomian.Power(a, b)
    raise UsageError(f"unknown nonlinearity {text!r}")


def _pair(text: str) -> tuple[int, int]:
    try:
        n, k = (int(s) for s in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N,K, got {text!r}") from None
    return n, k


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _emit(out, obj, fmt: str, text: str) -> None:
    if fmt == "json":
        out.write(json.dumps(obj) + "\n")
    else:
        out.write(text + "\n")


# -- subcommands -------------------------------------------------------------------

def cmd_partitions(args, out) -> int:
    enum = {"lambda": partitions.enum_lambda, "theta": partitions.enum_theta}[args.set]
    vecs = [list(v.parts) for v in enum(args.n, args.k)]
    if args.format == "json":
        _emit(out, {"n": args.n, "k": args.k, "vectors": vecs}, "json", "")
    else:
        lines = [f"# {args.set} n={args.n} k={args.k} count={len(vecs)}"]
        lines += ["(" + ",".join(map(str, v)) + ")" for v in vecs]
        out.write("\n".join(lines) + "\n")
    return 0


def _unscale(p: MultiPoly, n: int) -> MultiPoly:
    return p.subst({u_name(j): MultiPoly.var(u_name(j)) * Fraction(1, factorial(j)) for j in range(2, n + 1)})


def bell_poly(kind: str, n: int, k: int | None, scaled: bool, method: str) -> MultiPoly:
    """Dispatch table behind the ``bell`` subcommand."""
    if kind == "ord" and scaled:
        raise UsageError("--scaled only applies to --kind exp")
    if k is None:
        if method == "duan":
            raise UsageError("method duan is defined for partial polynomials only")
        if kind == "exp":
            if method == "direct":
                return bell.bell_complete_exp_scaled(n) if scaled else bell.bell_complete_exp(n)
            p = (bell.bell_complete_rec1 if method == "conv" else bell.bell_complete_rec2)(n)
            return p if scaled else _unscale(p, n)
        if method == "direct":
            return bell.bell_complete_ord(n)
        return (bell.bell_complete_ord_rec1 if method == "conv" else bell.bell_complete_ord_rec2)(n)
    if kind == "exp":
        if method == "direct":
            return bell.bell_partial_exp_scaled(n, k) if scaled else bell.bell_partial_exp(n, k)
        if method == "duan":
            p = bell.bell_exp_rec_duan(n, k).to_poly()
        elif method == "conv":
            p = bell.bell_exp_rec_conv(n, k)
        else:
            p = bell.bell_exp_rec_diff(n, k)
        return p if scaled else _unscale(p, n)
    routes: dict[str, Callable] = {
        "direct": bell.bell_partial_ord,
        "duan": lambda n, k: bell.bell_ord_rec_duan(n, k).to_poly(),
        "conv": bell.bell_ord_rec_conv,
        "diff": bell.bell_ord_rec_diff,
    }
    return routes[method](n, k)


def cmd_bell(args, out) -> int:
    if args.partial is not None:
        n, k = args.partial
    else:
        n, k = args.complete, None
    p = bell_poly(args.kind, n, k, args.scaled, args.method)
    obj = {"kind": args.kind, "n": n, "k": k, "scaled": args.scaled, "method": args.method, "poly": to_json_obj(p)}
    _emit(out, obj, args.format, to_text(p))
    return 0


def cmd_adomian(args, out) -> int:
    a = adomian.METHODS[args.method](args.n)
    obj = {"n": args.n, "method": args.method, "parts": {str(j): to_json_obj(p) for j, p in a.parts.items()}}
    if args.nonlinearity is None:
        _emit(out, obj, args.format, render_adomian_abstract(a))
        return 0
    spec = parse_nonlinearity(args.nonlinearity)
    u0 = None if args.u0 is None else Fraction(args.u0)
    if u0 is None and isinstance(spec, adomian.Power):
        u0 = Fraction(1)
    value, d = adomian.adomian_evaluate_cleared(a, spec, u0)
    obj.update({"nonlinearity": args.nonlinearity, "value": to_json_obj(value), "alpha_denominator": d})
    _emit(out, obj, args.format, render_value(value, d, spec))
    return 0


def _report_obj(r: identities.IdentityReport) -> dict:
    obj = {"name": r.name, "n": r.n, "holds": r.holds}
    if r.m is not None:
        obj["m"] = r.m
    if not r.holds:
        obj["lhs"] = to_json_obj(r.lhs)
        obj["rhs"] = to_json_obj(r.rhs)
    return obj


def cmd_verify(args, out) -> int:
    if args.max is not None:
        orders = range(1, args.max + 1)
    elif args.n is not None:
        orders = [args.n]
    else:
        raise UsageError("verify needs --n or --max")
    names = identities.IDENTITIES if args.identity == "all" else (args.identity,)
    reports = []
    for name in names:
        for n in orders:
            if name == "binomial" and args.m is None and args.max is not None:
                # sweep every m in (n, max + 2]
                reports += [identities.verify_binomial_identity(m, n) for m in range(n + 1, args.max + 3)]
            else:
                reports += identities.run_identity(name, n, args.m)
    ok = all(r.holds for r in reports)
    obj = {"identity": args.identity, "all_hold": ok, "results": [_report_obj(r) for r in reports]}
    lines = [f"{'PASS' if r.holds else 'FAIL'} {r.name} n={r.n}" + (f" m={r.m}" if r.m else "") for r in reports]
    _emit(out, obj, args.format, "\n".join(lines))
    return 0 if ok else 1


def cmd_adm(args, out) -> int:
    sol, ref, cmp = adm.solve_ode(args.ode, args.order)
    obj = {
        "ode": args.ode,
        "order": args.order,
        "components": [to_json_obj(c) for c in sol.components],
        "closed_form": [to_json_obj(c) for c in ref.components],
        "consistent": cmp.equal,
    }
    if not cmp.equal:
        obj["mismatch"] = {"index": cmp.index, "adm": to_json_obj(cmp.left), "closed_form": to_json_obj(cmp.right)}
    lines = [f"u{i} = {to_text(c)}" for i, c in enumerate(sol.components)]
    lines.append(f"closed form: {'consistent' if cmp.equal else f'MISMATCH at u{cmp.index}'}")
    _emit(out, obj, args.format, "\n".join(lines))
    return 0 if cmp.equal else 1


# -- verify-all --------------------------------------------------------------------

def _suite_partitions(max_n: int) -> bool:
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            lam = partitions.enum_lambda(n, k)
            if len(lam) != partitions.partition_count(n, k) or len(partitions.enum_theta(n, k)) != len(lam):
                return False
            if k >= 2 and (partitions.lambda_via_recurrence(n, k) != lam
                           or partitions.theta_via_recurrence(n, k) != partitions.enum_theta(n, k)):
                return False
    return True


def _suite_bell(max_n: int) -> bool:
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            s = bell.bell_partial_exp_scaled(n, k)
            o = bell.bell_partial_ord(n, k)
            if not (bell.bell_exp_rec_duan(n, k).to_poly() == s == bell.bell_exp_rec_conv(n, k)
                    == bell.bell_exp_rec_diff(n, k)):
                return False
            if not (bell.bell_ord_rec_duan(n, k).to_poly() == o == bell.bell_ord_rec_conv(n, k)
                    == bell.bell_ord_rec_diff(n, k)):
                return False
            if s * Fraction(factorial(k), factorial(n)) != o:
                return False
        if not (bell.bell_complete_rec1(n) == bell.bell_complete_rec2(n) == bell.bell_complete_exp_scaled(n)):
            return False
        if not (bell.bell_complete_ord_rec1(n) == bell.bell_complete_ord_rec2(n) == bell.bell_complete_ord(n)):
            return False
    return True


def _suite_adomian(max_n: int) -> bool:
    for n in range(max_n + 1):
        ref = adomian.adomian_param_oracle(n)
        if any(f(n) != ref for f in adomian.METHODS.values()):
            return False
    return True


def _suite_identities(max_n: int) -> bool:
    for name in identities.IDENTITIES:
        if name == "binomial":
            continue
        for n in range(1, max_n + 1):
            if not all(r.holds for r in identities.run_identity(name, n)):
                return False
    for m in range(2, max_n + 3):
        for n in range(1, m):
            if not identities.verify_binomial_identity(m, n).holds:
                return False
    return True


def _suite_adm(max_n: int) -> bool:
    return all(adm.solve_ode(name, max_n)[2].equal for name in adm.ODES)


SUITES: dict[str, Callable[[int], bool]] = {
    "partition-recurrences": _suite_partitions,
    "bell-routes": _suite_bell,
    "adomian-routes": _suite_adomian,
    "identities": _suite_identities,
    "adm-consistency": _suite_adm,
}


def verify_all(max_n: int) -> dict[str, bool]:
    """Run every equivalence and identity suite up to ``max_n``."""
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    return {name: suite(max_n) for name, suite in SUITES.items()}


def cmd_verify_all(args, out) -> int:
    start = time.perf_counter()
    results = verify_all(args.max)
    elapsed = time.perf_counter() - start
    ok = all(results.values())
    obj = {"max_n": args.max, "all_pass": ok, "suites": results, "seconds": round(elapsed, 3)}
    lines = [f"{'PASS' if v else 'FAIL'} {k}" for k, v in results.items()]
    lines.append(f"{'all pass' if ok else 'FAILURES'} (max_n={args.max}, {elapsed:.2f}s)")
    _emit(out, obj, args.format, "\n".join(lines))
    return 0 if ok else 1


# -- parser --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bellpoly", allow_abbrev=False, description="Exact Bell and Adomian polynomial toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partitions", allow_abbrev=False, help="partition vectors of n into k parts")
    p.add_argument("--set", choices=("lambda", "theta"), default="lambda")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("bell", allow_abbrev=False, help="partial or complete Bell polynomials")
    p.add_argument("--kind", choices=("exp", "ord"), default="exp")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--partial", type=_pair, metavar="N,K")
    g.add_argument("--complete", type=_positive, metavar="N")
    p.add_argument("--scaled", action="store_true", help="arguments 1!u1, 2!u2, ...")
    p.add_argument("--method", choices=("direct", "duan", "conv", "diff"), default="direct")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_bell)

    p = sub.add_parser("adomian", allow_abbrev=False, help="Adomian polynomial A_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=tuple(adomian.METHODS), default="rach")
    p.add_argument("--nonlinearity", help="linear | exp:c | power:p")
    p.add_argument("--u0", help="concrete u0 (rational); symbolic when omitted")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_adomian)

    p = sub.add_parser("verify", allow_abbrev=False, help="check identities")
    p.add_argument("--identity", choices=identities.IDENTITIES + ("all",), required=True)
    p.add_argument("--n", type=_positive)
    p.add_argument("--m", type=_positive)
    p.add_argument("--max", type=_positive)
    p.add_argument("--format", choices=FORMATS, default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("adm", allow_abbrev=False, help="decomposition series of a test ODE")
    p.add_argument("--ode", choices=tuple(adm.ODES), required=True)
    p.add_argument("--order", type=_positive, required=True)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_adm)

    p = sub.add_parser("verify-all", allow_abbrev=False, help="run every verification suite")
    p.add_argument("--max", type=_positive, default=6)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_verify_all)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        err.write(f"bellpoly {args.command}: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
