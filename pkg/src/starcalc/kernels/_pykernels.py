"""Pure-Python kernels: catalog fields and their contour integrals.

Mirrors ``_ckernels.pyx`` one for one. A field is addressed by
``(code, star, param)`` with the codes of :mod:`starcalc.catalog`;
``param`` is the constant's log-value or the power exponent.
"""

from __future__ import annotations

import cmath
import math

from ..errors import BDomainError, QuadratureError
from ..quadrature import MAX_DEPTH, gk_adaptive

BACKEND = "python"


def _g(code, L, p):
    if code == 0:
        return p, 0j
    if code == 1:
        return L, 1.0 + 0j
    if code == 2:
        return p * L, p
    if code == 3:
        e = cmath.exp(L)
        return e, e
    if code == 4:
        if L == 0:
            raise BDomainError("log field is singular at (1, 0)")
        return cmath.log(L), 1.0 / L
    if code == 5:
        return cmath.cosh(L), cmath.sinh(L)
    if code == 6:
        return cmath.sinh(L), cmath.cosh(L)
    if code == 7:
        return cmath.cos(L), -cmath.sin(L)
    if code == 8:
        return cmath.sin(L), cmath.cos(L)
    raise BDomainError(f"unknown kernel code {code}")


def log_value(code: int, star: bool, pre: float, pim: float, r: float, theta: float) -> complex:
    """``ln R + i*Theta`` of the addressed field at ``(r, theta)``."""
    lr = math.log(r)
    L = complex(lr, theta)
    g, dg = _g(code, L, complex(pre, pim))
    if star:
        # g'(L) / l(z) with 1/l(z) = exp(-i theta) / r
        return dg * complex(math.cos(theta), -math.sin(theta)) / r
    return g


def integrate_linear(code: int, star: bool, pre: float, pim: float,
                     r0: float, th0: float, r1: float, th1: float,
                     tol: float, max_depth: int = MAX_DEPTH):
    """Line integrals of ``P dr - Q dtheta`` and ``M dr + N dtheta``.

    The path is linear in ``(r, theta)`` from ``(r0, th0)`` to ``(r1, th1)``.
    Returns ``(re, im, err, n_evaluations)``; ``tol`` bounds each part.
    """
    dr = r1 - r0
    dth = th1 - th0
    p = complex(pre, pim)

    def integrand(t):
        r = r0 + t * dr
        th = th0 + t * dth
        L = complex(math.log(r), th)
        g, dg = _g(code, L, p)
        c, s = math.cos(th), math.sin(th)
        h = dg * complex(c, -s) / r if star else g
        a, b = h.real, h.imag
        P = a * c - b * s
        M = a * s + b * c
        Q = r * M
        N = r * P
        return P * dr - Q * dth, M * dr + N * dth

    try:
        (re, im), (e1, e2), nev = gk_adaptive(integrand, 0.0, 1.0, tol, 2, max_depth)
    except OverflowError as exc:
        raise QuadratureError(f"non-finite integrand: {exc}") from exc
    return re, im, max(e1, e2), nev
