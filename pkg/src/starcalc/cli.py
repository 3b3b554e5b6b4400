"""Command-line front end.

Every subcommand prints one JSON document on stdout. Exit status is 0 on
success, 1 for a domain or numerical failure and 2 for usage or parse
errors; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import alphacalc, catalog
from .bnum import TWO_PI, BNumber, approx_eq, branch_index, embed_complex, project, root_n
from .contour import Contour, make_contour, polyline, rectangle
from .contour import arc as arc_contour
from .contour import ray as ray_contour
from .errors import ParseError, StarCalcError
from .expr import evaluate, expression_function, parse_expression
from .starderiv import cr_check, star_derivative, star_derivative_field
from .starint import DEFAULT_TOL, ftc_ratio, star_integral_detail
from .surfacefn import DEFAULT_STEP

FTC_TOL = 1e-7


def _num(x: float) -> float:
    # Normalises -0.0 so JSON output does not flip sign on zero.
    return x + 0.0


def bjson(z: BNumber) -> dict:
    return {"r": _num(z.r), "theta": _num(z.theta), "branch": branch_index(z)}


def cjson(w: complex) -> dict:
    return {"re": _num(w.real), "im": _num(w.imag)}


def value_json(v) -> dict:
    return bjson(v) if isinstance(v, BNumber) else cjson(complex(v))


def _constant(text: str):
    return evaluate(parse_expression(text))


def _real(text: str, what: str) -> float:
    v = _constant(text)
    if isinstance(v, BNumber) or complex(v).imag != 0:
        raise ParseError(f"{what} must be a real number, got {text!r}", 0)
    return complex(v).real


def _point(text: str) -> BNumber:
    v = _constant(text)
    return v if isinstance(v, BNumber) else embed_complex(v)


def resolve_function(name: str, w: str | None = None, z0: str | None = None):
    """A catalog name, ``star-deriv-<catalog name>``, or an expression in ``z``."""
    star = False
    base = name
    if name.startswith("star-deriv-"):
        star, base = True, name[len("star-deriv-"):]
    if base in catalog.CODES:
        param = None
        if base == "power":
            if w is None:
                raise ParseError("--w is required for the power function", 0)
            param = complex(_constant(w))
        elif base == "const":
            if z0 is None:
                raise ParseError("--z0 is required for the constant function", 0)
            param = _point(z0)
        e = catalog.entry(base, param)
        return e.star_field() if star else e.function()
    F = expression_function(parse_expression(base))
    return star_derivative_field(F) if star else F


def parse_contour_piece(text: str) -> Contour:
    """Shorthand ``arc:R:T0:T1``, ``ray:T:R0:R1``, ``seg:R0:T0:R1:T1`` or ``rect:R0:R1:T0:T1``."""
    kind, *args = text.split(":")
    arity = {"arc": 3, "ray": 3, "seg": 4, "rect": 4}
    if kind not in arity:
        raise ParseError(f"unknown contour kind {kind!r}; expected one of {sorted(arity)}", 0)
    if len(args) != arity[kind]:
        raise ParseError(f"{kind} takes {arity[kind]} numbers, got {len(args)}", 0)
    v = [_real(a, f"{kind} argument") for a in args]
    if kind == "arc":
        return arc_contour(*v)
    if kind == "ray":
        return ray_contour(*v)
    if kind == "seg":
        return polyline([BNumber(v[0], v[1]), BNumber(v[2], v[3])])
    return rectangle(*v)


def _contour(args) -> Contour:
    if args.contour_file:
        try:
            text = Path(args.contour_file).read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError(f"cannot read contour file: {exc}", 0) from exc
        return make_contour(text)
    if not args.contour:
        raise ParseError("a contour is required (--contour or --contour-file)", 0)
    pieces = [parse_contour_piece(c) for c in args.contour]
    out = pieces[0]
    for p in pieces[1:]:
        out = out + p
    return out


def cmd_eval(args) -> dict:
    z = _point(args.at) if args.at else None
    return value_json(evaluate(parse_expression(args.expression), z))


def cmd_deriv(args) -> dict:
    F = resolve_function(args.fn, args.w, args.z0)
    return bjson(star_derivative(F, _point(args.at), args.cr_tol, args.fd_step))


def cmd_cr_check(args) -> dict:
    F = resolve_function(args.fn, args.w, args.z0)
    res = cr_check(F, _point(args.at), args.cr_tol, args.fd_step)
    return {"ok": res.ok, "rho1": _num(res.rho1), "rho2": _num(res.rho2)}


def cmd_integrate(args) -> dict:
    F = resolve_function(args.fn, args.w, args.z0)
    C = _contour(args)
    res = star_integral_detail(F, C, args.tol, args.backend)
    out = res.to_json()
    out["r"], out["theta"] = _num(out["r"]), _num(out["theta"])
    out["closed"] = C.is_closed()
    out["error"] = res.error
    return out


def cmd_ftc_check(args) -> dict:
    F = resolve_function(args.fn, args.w, args.z0)
    if F.kernel is not None and not F.kernel.star:
        dF = catalog.entry(catalog.NAMES[F.kernel.code], _catalog_param(F)).star_field()
    else:
        dF = star_derivative_field(F, args.fd_step)
    C = _contour(args)
    res = star_integral_detail(dF, C, args.tol, args.backend)
    ratio = ftc_ratio(F, C.start, C.end)
    return {
        "integral": bjson(res.value),
        "ftc_ratio": bjson(ratio),
        "match": approx_eq(res.value, ratio, FTC_TOL, FTC_TOL),
    }


def _catalog_param(F):
    code, param = F.kernel.code, F.kernel.param
    if code == catalog.CONST:
        return BNumber(math.exp(param.real), param.imag)
    if code == catalog.POWER:
        return param
    return None


def cmd_alpha(args) -> dict:
    sysm = alphacalc.get_system(args.system)
    a = _real(args.a, "operand")
    b = _real(args.b, "operand")
    return {"system": sysm.name, "op": args.op, "result": alphacalc.alpha_arith(sysm, args.op, a, b)}


def cmd_roots(args) -> dict:
    v = _constant(args.z)
    base = v if isinstance(v, BNumber) else embed_complex(v)
    if args.n < 1:
        raise ParseError("--n must be a positive integer", 0)
    rows = []
    for k in range(args.n):
        lift = BNumber(base.r, base.theta + TWO_PI * k)
        w = root_n(lift, args.n)
        rows.append({"lift": bjson(lift), "root": bjson(w), "projection": cjson(project(w))})
    return {"z": cjson(project(base)), "n": args.n, "roots": rows}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="starcalc",
        description="Multiplicative complex calculus on the Riemann surface of log.",
    )
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="quadrature tolerance")
    p.add_argument("--fd-step", type=float, default=DEFAULT_STEP, help="finite-difference step")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate an expression")
    e.add_argument("expression")
    e.add_argument("--at", help="value bound to z")

    def fn_args(sp):
        sp.add_argument("--fn", required=True,
                        help="catalog name, star-deriv-<name>, or an expression in z")
        sp.add_argument("--w", help="exponent for the power function")
        sp.add_argument("--z0", help="value of the constant function")

    def contour_args(sp):
        sp.add_argument("--contour", action="append",
                        help="arc:R:T0:T1, ray:T:R0:R1, seg:R0:T0:R1:T1 or rect:R0:R1:T0:T1; "
                             "repeat to chain pieces")
        sp.add_argument("--contour-file", help="JSON contour file")
        sp.add_argument("--backend", choices=("compiled", "python", "generic"),
                        help="kernel backend for catalog fields")

    for name, text in (("deriv", "star derivative at a point"),
                       ("cr-check", "Cauchy-Riemann check at a point")):
        sp = sub.add_parser(name, help=text)
        fn_args(sp)
        sp.add_argument("--at", required=True, help="point, e.g. b(2,0)")
        sp.add_argument("--cr-tol", type=float, default=None)

    for name, text in (("integrate", "star integral over a contour"),
                       ("ftc-check", "compare the integral of F* with F(end)/F(start)")):
        sp = sub.add_parser(name, help=text)
        fn_args(sp)
        contour_args(sp)

    a = sub.add_parser("alpha", help="alpha-arithmetic")
    a.add_argument("--system", choices=sorted(alphacalc.SYSTEMS), default="exp")
    a.add_argument("op", choices=("add", "sub", "mul", "div"))
    a.add_argument("a")
    a.add_argument("b")

    r = sub.add_parser("roots", help="n-th roots across sheets")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--z", required=True)
    return p


COMMANDS = {
    "eval": cmd_eval, "deriv": cmd_deriv, "cr-check": cmd_cr_check,
    "integrate": cmd_integrate, "ftc-check": cmd_ftc_check, "alpha": cmd_alpha,
    "roots": cmd_roots,
}


def run_command(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"starcalc: parse error: {exc}", file=stderr)
        return 2
    except (StarCalcError, ArithmeticError, ValueError) as exc:
        print(f"starcalc: {exc}", file=stderr)
        return 1
    print(json.dumps(out), file=stdout)
    return 0


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
