"""Command-line front end.

Exit status: 0 success, 1 usage error, 2 numeric failure, 3 identity check failed.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

import mpmath
from mpmath import mp

from . import combo
from .closed_form import ls_closed_form, ls_general, sls_closed_form
from .indices import IndexConstraintError, parse_index
from .numerics import PI_OVER_3, EvalContext, EvaluationError, Sigma, combo_eval, nstr
from .oracle import MAX_TARGET_DIGITS, QuadratureError, ls_quad, sls_quad
from .relation_lab import (
    TABLE_KINDS,
    InsufficientPrecision,
    ccs_identity,
    ccs_lhs,
    scan,
    special_identity,
    table_row,
)

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_IDENTITY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _default_prec() -> int:
    env = os.environ.get("LSI_PREC")
    if env is None:
        return 30
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"LSI_PREC must be an integer, got {env!r}")


def _index(text: str):
    try:
        return parse_index(text)
    except IndexConstraintError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _sigma(text: str) -> Sigma:
    try:
        return Sigma.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _height(text: str) -> int:
    try:
        v = float(text) if "e" in text.lower() else int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad height bound {text!r}")
    if v < 1 or v != int(v):
        raise argparse.ArgumentTypeError("height bound must be a positive integer")
    return int(v)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="logsine", description="Closed forms and numerics for iterated log-sine integrals.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(sp, k=True, l=True, sigma=True):
        if k:
            sp.add_argument("--k", type=_index, required=True, help="comma list, e.g. 2,1")
        if l:
            sp.add_argument("--l", type=_index, default=None, help="comma list; defaults to zeros")
        if sigma:
            sp.add_argument("--sigma", type=_sigma, default=None, help="pi/3-style token or decimal")
        sp.add_argument("--prec", type=int, default=None, help="decimal digits (env LSI_PREC)")
        sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("closed-form", help="exact closed form of Ls_k^l")
    common(sp, sigma=False)
    sp.add_argument("--latex", action="store_true")
    sp.add_argument("--m", type=int, default=0, help="argument 2 m pi + sigma")
    sp.add_argument("--negate", action="store_true", help="argument -(2 m pi + sigma)")

    sp = sub.add_parser("eval", help="numeric value of Ls_k^l(sigma)")
    common(sp)

    sp = sub.add_parser("oracle", help="quadrature value of Ls_k^l(sigma)")
    common(sp)
    sp.add_argument("--compare", action="store_true", help="also evaluate the closed form and check 1e-10")

    sp = sub.add_parser("sls", help="shifted log-sine integral SLs(k; sigma)")
    common(sp, l=False)
    sp.add_argument("--latex", action="store_true")
    sp.add_argument("--quad", action="store_true", help="add a quadrature cross-check")

    sp = sub.add_parser("tables", help="dimension tables")
    sp.add_argument("--kind", default="all", choices=("all",) + TABLE_KINDS)
    sp.add_argument("--max-k", type=int, default=10)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("scan", help="integer-relation scan over a generator set")
    sp.add_argument("--set", dest="set_kind", required=True, choices=("Sprime", "So", "Se", "Hoffman"))
    sp.add_argument("--weight", type=int, required=True)
    sp.add_argument("--depth", type=int, default=None)
    sp.add_argument("--prec", type=int, default=None)
    sp.add_argument("--height-bound", type=_height, default=10**6)
    sp.add_argument("--out", default=None, help="append the JSON report to this file")
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("identities", help="check the named identities numerically")
    sp.add_argument("--prec", type=int, default=None)
    sp.add_argument("--max-k", type=int, default=3)
    sp.add_argument("--json", action="store_true")
    return p


def _ctx(args) -> EvalContext:
    prec = args.prec if args.prec is not None else _default_prec()
    if prec < 5:
        raise UsageError("--prec must be at least 5")
    return EvalContext(prec)


def _kl(args):
    l = args.l if args.l is not None else (0,) * len(args.k)
    return args.k, l


def _reduce(sigma: Sigma):
    """Split an argument into ``(sign, m, remainder in [0, 2 pi])``."""
    if 0 <= float(sigma) <= 2 * math.pi:
        return 1, 0, sigma
    if sigma.kind != "pi":
        raise UsageError("decimal sigma must lie in [0, 2pi]; use a pi-multiple token outside")
    v = sigma.value
    sign = -1 if v < 0 else 1
    v = abs(v)
    m = int(v // 2)
    rem = v - 2 * m
    if rem == 0 and m > 0:
        m, rem = m - 1, Fraction(2)
    return sign, m, Sigma.pi(rem)


def _emit(args, obj: dict, text: str, out) -> None:
    print(json.dumps(obj) if getattr(args, "json", False) else text, file=out)


def _closed_form(args, out):
    k, l = _kl(args)
    c = ls_general(k, l, args.m, -1 if args.negate else 1) if (args.m or args.negate) else ls_closed_form(k, l)
    if args.json:
        print(c.to_json(), file=out)
    elif args.latex:
        print(combo.to_latex(c), file=out)
    else:
        print(combo.to_text(c), file=out)
    return EXIT_OK


def _ls_value(k, l, sigma: Sigma, ctx: EvalContext):
    sign, m, rem = _reduce(sigma)
    c = ls_general(k, l, m, sign) if (m or sign < 0) else ls_closed_form(k, l)
    return combo_eval(c, rem, ctx)


def _eval(args, out):
    ctx = _ctx(args)
    if args.sigma is None:
        raise UsageError("--sigma is required")
    k, l = _kl(args)
    v = _ls_value(k, l, args.sigma, ctx)
    d = ctx.precision_digits
    obj = {"k": list(k), "l": list(l), "sigma": str(args.sigma), "digits": d,
           "value": nstr(mp.re(v), d), "imag": mpmath.nstr(mp.im(v), 5)}
    _emit(args, obj, obj["value"], out)
    return EXIT_OK


def _oracle(args, out):
    if args.sigma is None:
        raise UsageError("--sigma is required")
    k, l = _kl(args)
    digits = min(args.prec or 12, MAX_TARGET_DIGITS)
    q = ls_quad(k, l, float(args.sigma), digits)
    obj = {"k": list(k), "l": list(l), "sigma": str(args.sigma), "value": repr(q.real),
           "error_estimate": q.error_estimate, "evaluations": q.evaluations}
    status = EXIT_OK
    if args.compare:
        v = _ls_value(k, l, args.sigma, EvalContext(20))
        diff = abs(float(mp.re(v)) - q.real)
        obj["closed_form"] = nstr(mp.re(v), 17)
        obj["difference"] = diff
        obj["agrees"] = diff <= 1e-10
        if not obj["agrees"]:
            status = EXIT_IDENTITY
    text = f"{q.real!r}  (error estimate {q.error_estimate:.2e}, {q.evaluations} evaluations)"
    if args.compare:
        text += f"\nclosed form {obj['closed_form']}  difference {obj['difference']:.2e}"
    _emit(args, obj, text, out)
    return status


def _sls(args, out):
    c = sls_closed_form(args.k)
    if args.latex:
        print(combo.to_latex(c), file=out)
        return EXIT_OK
    ctx = _ctx(args)
    sigma = args.sigma or PI_OVER_3
    if not 0 <= float(sigma) <= 2 * math.pi:
        raise UsageError("SLs needs sigma in [0, 2pi]")
    v = combo_eval(c, sigma, ctx)
    d = ctx.precision_digits
    obj = {"k": list(args.k), "sigma": str(sigma), "digits": d, "value": nstr(mp.re(v), d)}
    text = obj["value"]
    status = EXIT_OK
    if args.quad:
        q = sls_quad(args.k, float(sigma), 12)
        obj["quad"] = repr(q.real)
        obj["difference"] = abs(q.real - float(mp.re(v)))
        text += f"\nquadrature {q.real!r}  difference {obj['difference']:.2e}"
        if obj["difference"] > 1e-10:
            status = EXIT_IDENTITY
    _emit(args, obj, text, out)
    return status


def _tables(args, out):
    kinds = TABLE_KINDS if args.kind == "all" else (args.kind,)
    if args.max_k < 0:
        raise UsageError("--max-k must be >= 0")
    rows = {kind: table_row(kind, args.max_k) for kind in kinds}
    if args.json:
        print(json.dumps(rows), file=out)
    else:
        for kind, row in rows.items():
            line = ",".join(str(v) for v in row)
            print(line if len(kinds) == 1 else f"{kind}: {line}", file=out)
    return EXIT_OK


def _scan(args, out):
    prec = args.prec if args.prec is not None else 60
    rep = scan(args.set_kind, args.weight, args.depth, prec, args.height_bound, args.out)
    if args.json:
        print(rep.to_json(), file=out)
    else:
        if rep.found:
            terms = " + ".join(f"{c}*{n}" for c, n in zip(rep.coeffs, rep.basis) if c)
            print(f"relation: {terms} = 0  (residual {rep.residual}, {rep.precision} digits)", file=out)
        else:
            print(f"no relation with height <= {rep.height_bound} among {rep.basis} "
                  f"at {rep.precision} digits (norm bound {rep.norm_bound})", file=out)
    return EXIT_OK


def identity_checks(max_k: int):
    """Every named identity the ``identities`` verb runs, as (label, lhs, rhs, sigma)."""
    yield from ((f"ccs k={k}", ccs_lhs(k), ccs_identity(k), PI_OVER_3) for k in range(max_k))
    for k in range(1, max_k + 1):
        ident = special_identity("cl_odd", (k,))
        yield f"cl_odd k={k}", ident.lhs, ident.rhs, ident.sigma
    for k in range(max_k + 1):
        ident = special_identity("cl_even_via_sls", (k,))
        yield f"cl_even_via_sls k={k}", ident.lhs, ident.rhs, ident.sigma
    for k in range(2, 2 * max_k + 3):
        ident = special_identity("gl_bernoulli", (k, Fraction(1, 6)))
        yield f"gl_bernoulli k={k}", ident.lhs, ident.rhs, ident.sigma
    for a in range(max_k + 1):
        for b in range(max_k + 1 - a):
            ident = special_identity("li_ones_two_ones", (a, b))
            yield f"li_ones_two_ones a={a} b={b}", ident, None, ident.sigma


def _identities(args, out):
    ctx = _ctx(args)
    tol = mp.mpf(10) ** (-(ctx.precision_digits - 10))
    results = []
    for label, lhs, rhs, sigma in identity_checks(args.max_k):
        if rhs is None:
            a, b = lhs.evaluate(ctx)
        else:
            a, b = combo_eval(lhs, sigma, ctx), combo_eval(rhs, sigma, ctx)
        diff = abs(a - b)
        results.append({"identity": label, "difference": mpmath.nstr(diff, 3), "pass": bool(diff <= tol)})
    if args.json:
        print(json.dumps(results), file=out)
    else:
        for r in results:
            print(f"{'PASS' if r['pass'] else 'FAIL'}  {r['identity']}  |diff| = {r['difference']}", file=out)
    return EXIT_OK if all(r["pass"] for r in results) else EXIT_IDENTITY


HANDLERS = {
    "closed-form": _closed_form,
    "eval": _eval,
    "oracle": _oracle,
    "sls": _sls,
    "tables": _tables,
    "scan": _scan,
    "identities": _identities,
}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(list(argv) if argv is not None else None)
        return HANDLERS[args.verb](args, out)
    except UsageError as exc:
        print(str(exc).rstrip(), file=err)
        return EXIT_USAGE
    except (IndexConstraintError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except (QuadratureError, EvaluationError, InsufficientPrecision, ArithmeticError) as exc:
        print(f"numeric failure: {exc}", file=err)
        return EXIT_NUMERIC


def main() -> None:
    sys.exit(run())

