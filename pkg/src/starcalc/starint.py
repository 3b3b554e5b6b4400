"""Contour star integration.

For ``F = (R, Theta)`` the star integral along ``C`` is

    bexp( int_C P dr - Q dtheta  +  i * int_C M dr + N dtheta )

with ``P = lnR cos - Theta sin``, ``Q = r (lnR sin + Theta cos)``,
``M = lnR sin + Theta cos`` and ``N = r (lnR cos - Theta sin)``. The two
real line integrals are computed by adaptive Gauss-Kronrod quadrature and
the angle of the result is kept as is, so integrals that wind around the
origin land on the sheet they reach.
"""

from __future__ import annotations

import math
from typing import Callable, NamedTuple, Optional

from . import kernels
from .bnum import BNumber, branch_index, div
from .contour import Contour, LinearPiece
from .elemfn import bexp, blog
from .errors import BDomainError
from .quadrature import gk_adaptive
from .surfacefn import DEFAULT_STEP, SurfaceFunction, eval_at

DEFAULT_TOL = 1e-10


class Integrands(NamedTuple):
    P: Callable[[float, float], float]
    Q: Callable[[float, float], float]
    M: Callable[[float, float], float]
    N: Callable[[float, float], float]


def integrands(F: SurfaceFunction) -> Integrands:
    """The four real integrands attached to ``F``."""

    def parts(r, t):
        lnR, Th = F.log_value(r, t)
        return lnR, Th, math.cos(t), math.sin(t)

    def P(r, t):
        a, b, c, s = parts(r, t)
        return a * c - b * s

    def Q(r, t):
        a, b, c, s = parts(r, t)
        return r * a * s + r * b * c

    def M(r, t):
        a, b, c, s = parts(r, t)
        return a * s + b * c

    def N(r, t):
        a, b, c, s = parts(r, t)
        return r * a * c - r * b * s

    return Integrands(P, Q, M, N)


class IntegralResult(NamedTuple):
    value: BNumber
    exponent: complex
    error: float
    evaluations: int
    backend: str

    def to_json(self) -> dict:
        return {
            "r": self.value.r,
            "theta": self.value.theta,
            "branch": branch_index(self.value),
            "exponent": {"re": self.exponent.real, "im": self.exponent.imag},
        }


def _generic_piece(F: SurfaceFunction, piece, tol: float):
    def integrand(t):
        r, th = piece.point(t)
        vr, vt = piece.velocity(t)
        lnR, Th = F.log_value(r, th)
        c, s = math.cos(th), math.sin(th)
        P = lnR * c - Th * s
        M = lnR * s + Th * c
        return P * vr - r * M * vt, M * vr + r * P * vt

    (re, im), (e1, e2), nev = gk_adaptive(integrand, piece.t0, piece.t1, tol, 2)
    return re, im, max(e1, e2), nev


def star_integral_detail(F: SurfaceFunction, C: Contour, tol: float = DEFAULT_TOL,
                         backend: Optional[str] = None) -> IntegralResult:
    """Star integral with its raw exponent, error estimate and cost.

    ``backend`` picks the kernel for catalog fields on linear pieces:
    ``None`` (import-time default), ``"compiled"``, ``"python"``, or
    ``"generic"`` to bypass the kernels and evaluate ``F`` directly.
    """
    if not tol > 0:
        raise BDomainError("tolerance must be positive")
    kern = None
    if backend != "generic" and F.kernel is not None:
        kern = kernels.get_backend(backend)
    # Each of the two line integrals gets tol/2, split evenly over pieces.
    share = 0.5 * tol / len(C)
    re = im = err = 0.0
    nev = 0
    used = "generic"
    for piece in C:
        if kern is not None and isinstance(piece, LinearPiece):
            k = F.kernel
            a, b = piece.start, piece.end
            pr, pi_, e, n = kern.integrate_linear(
                k.code, k.star, k.param.real, k.param.imag,
                a.r, a.theta, b.r, b.theta, share,
            )
            used = kern.BACKEND
        else:
            pr, pi_, e, n = _generic_piece(F, piece, share)
        re += pr
        im += pi_
        err += e
        nev += n
    exponent = complex(re, im)
    return IntegralResult(bexp(exponent), exponent, err, nev, used)


def star_integral(F: SurfaceFunction, C: Contour, tol: float = DEFAULT_TOL,
                  backend: Optional[str] = None) -> BNumber:
    """``bexp(int P dr - Q dtheta + i int M dr + N dtheta)`` along ``C``."""
    return star_integral_detail(F, C, tol, backend).value


def ftc_ratio(F: SurfaceFunction, z1: BNumber, z2: BNumber) -> BNumber:
    """``F(z2) / F(z1)``: what the star integral of ``F*`` from z1 to z2 must equal."""
    return div(eval_at(F, z2), eval_at(F, z1))


def additive_recovery(z1: complex, z2: complex) -> complex:
    """``z1 - z2`` obtained as ``blog(bexp(z1) / bexp(z2))``.

    The imaginary part is not reduced, so the winding of a non-closed arc
    comes back as a full ``2*pi*i`` rather than a residue of it.
    """
    return blog(div(bexp(z1), bexp(z2)))


def green_residuals(F: SurfaceFunction, z: BNumber, step: float = DEFAULT_STEP):
    """``(Q_r + P_theta, N_r - M_theta)`` by central differences.

    Both vanish where ``F`` satisfies the polar Cauchy-Riemann conditions,
    which is what makes star integrals of analytic fields path independent.
    """
    P, Q, M, N = integrands(F)
    r, t = z.r, z.theta
    hr = step * max(1.0, r)
    ht = step
    if r - hr <= 0:
        raise BDomainError(f"r={r} is too close to 0 for step {step}")
    dr = (r + hr) - (r - hr)
    dt = (t + ht) - (t - ht)

    def d_r(f):
        return (f(r + hr, t) - f(r - hr, t)) / dr

    def d_t(f):
        return (f(r, t + ht) - f(r, t - ht)) / dt

    return d_r(Q) + d_t(P), d_r(N) - d_t(M)


__all__ = [
    "Integrands", "integrands", "IntegralResult", "star_integral", "star_integral_detail",
    "ftc_ratio", "additive_recovery", "green_residuals", "DEFAULT_TOL",
]
