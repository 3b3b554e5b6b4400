"""Star differentiation of surface functions.

A surface function ``F = (R, Theta)`` is star differentiable at
``(r, theta)`` when the polar Cauchy-Riemann conditions

    r * (ln R)_r == Theta_theta      and      r * Theta_r == -(ln R)_theta

hold there. Its star derivative is then

    F*(z) = (exp((ln R)_r cos(theta) + Theta_r sin(theta)),
             Theta_r cos(theta) - (ln R)_r sin(theta))

which is ``bexp`` of the logarithmic derivative ``(log F)'``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

from . import catalog
from .bnum import BNumber, project
from .elemfn import bexp, blog
from .errors import BDomainError, NotStarDifferentiable
from .surfacefn import (
    DEFAULT_STEP,
    PartialsAt,
    SurfaceFunction,
    finite_difference_partials,
    partials_at,
)

CR_TOL_ANALYTIC = 1e-9
CR_TOL_FINITE_DIFF = 1e-5


class CRResult(NamedTuple):
    ok: bool
    rho1: float
    rho2: float

    def __bool__(self):
        return self.ok


def default_cr_tol(F: SurfaceFunction) -> float:
    return CR_TOL_ANALYTIC if F.partials is not None else CR_TOL_FINITE_DIFF


def cr_residuals(p: PartialsAt, r: float) -> tuple[float, float]:
    return r * p.lnR_r - p.Theta_theta, r * p.Theta_r + p.lnR_theta


def cr_check(F: SurfaceFunction, z: BNumber, tol: Optional[float] = None,
             step: float = DEFAULT_STEP) -> CRResult:
    """Polar Cauchy-Riemann residuals of ``F`` at ``z``."""
    if tol is None:
        tol = default_cr_tol(F)
    if tol <= 0:
        raise BDomainError("CR tolerance must be positive")
    p = partials_at(F, z, step)
    rho1, rho2 = cr_residuals(p, z.r)
    return CRResult(max(abs(rho1), abs(rho2)) <= tol, rho1, rho2)


def _star_exponent(p: PartialsAt, theta: float) -> complex:
    c, s = math.cos(theta), math.sin(theta)
    return complex(p.lnR_r * c + p.Theta_r * s, p.Theta_r * c - p.lnR_r * s)


def star_derivative(F: SurfaceFunction, z: BNumber, tol: Optional[float] = None,
                    step: float = DEFAULT_STEP) -> BNumber:
    """Star derivative of ``F`` at ``z``.

    Raises :class:`NotStarDifferentiable` when the CR residuals exceed
    ``tol`` (default depends on whether ``F`` carries analytic partials).
    """
    if tol is None:
        tol = default_cr_tol(F)
    p = partials_at(F, z, step)
    rho1, rho2 = cr_residuals(p, z.r)
    if max(abs(rho1), abs(rho2)) > tol:
        raise NotStarDifferentiable(
            f"{F.name} is not star differentiable at {z!r}: CR residuals ({rho1:.3g}, {rho2:.3g})",
            (rho1, rho2),
        )
    return bexp(_star_exponent(p, z.theta))


def star_derivative_field(F: SurfaceFunction, step: float = DEFAULT_STEP) -> SurfaceFunction:
    """``F*`` as a surface function, without the CR check.

    Partials of the result are left to finite differences; for catalog
    functions prefer :func:`starcalc.catalog.star_field`, which is exact.
    """

    def fld(r, theta):
        p = partials_at(F, BNumber(r, theta), step)
        w = _star_exponent(p, theta)
        return w.real, w.imag

    return SurfaceFunction(fld, None, F.domain, f"star({F.name})")


def catalog_star_derivative(name: str, param, z: BNumber) -> BNumber:
    """Closed-form star derivatives of the catalog functions.

    ``const`` gives ``(1, 0)``, lifted ``exp`` gives ``(e, 0)``; identity,
    ``power`` (``param`` = ``w``) and ``log`` give ``bexp(1/l(z))``,
    ``bexp(w/l(z))`` and ``bexp(1/(l(z) log z))``. The lifted trigonometric
    and hyperbolic functions give ``bexp(g'(log z)/l(z))``.
    """
    r, t = z.r, z.theta
    if name == "const":
        return BNumber(1.0, 0.0)
    if name == "exp":
        return BNumber(math.e, 0.0)
    if name == "identity":
        return BNumber(math.exp(math.cos(t) / r), -math.sin(t) / r)
    if name == "power":
        return bexp(complex(param) / project(z))
    if name == "log":
        lz = blog(z)
        if lz == 0:
            raise BDomainError("log has no star derivative at (1, 0)")
        return bexp(1.0 / (project(z) * lz))
    if name in ("cosh", "sinh", "cos", "sin"):
        e = catalog.entry(name)
        return bexp(e.dg(blog(z)) / project(z))
    raise BDomainError(f"no closed-form star derivative for {name!r}")


@dataclass(frozen=True)
class PolarComplexFunction:
    """Classical non-vanishing ``f`` with polar input and polar output.

    Give either rectangular parts ``u(r, theta), v(r, theta)`` or a
    continuous polar pair ``R(r, theta) > 0, Theta(r, theta)``. Partials are
    taken by central differences; with ``u, v`` the angle partials follow
    ``Theta_r = (u v_r - v u_r) / R**2`` and never see an ``atan2`` jump.
    """

    u: Optional[Callable[[float, float], float]] = None
    v: Optional[Callable[[float, float], float]] = None
    R: Optional[Callable[[float, float], float]] = None
    Theta: Optional[Callable[[float, float], float]] = None
    name: str = "f"

    def __post_init__(self):
        rect = self.u is not None and self.v is not None
        polar = self.R is not None and self.Theta is not None
        if not (rect or polar):
            raise BDomainError("PolarComplexFunction needs (u, v) or (R, Theta)")

    @classmethod
    def from_classical(cls, f: Callable[[complex], complex], name: str = "f"):
        def u(r, t):
            return f(cmath.rect(r, t)).real

        def v(r, t):
            return f(cmath.rect(r, t)).imag

        return cls(u=u, v=v, name=name)

    def value(self, r: float, theta: float) -> complex:
        if self.u is not None:
            w = complex(self.u(r, theta), self.v(r, theta))
        else:
            w = cmath.rect(self.R(r, theta), self.Theta(r, theta))
        if w == 0:
            raise BDomainError(f"{self.name} vanishes at ({r}, {theta})")
        return w

    def radial(self, r: float, theta: float, step: float = DEFAULT_STEP):
        """``(R, Theta, R_r, Theta_r)`` at ``(r, theta)``."""
        hr = step * max(1.0, r)
        if r - hr <= 0:
            raise BDomainError(f"r={r} is too close to 0 for step {step}")
        dr = (r + hr) - (r - hr)
        if self.R is not None and self.Theta is not None:
            R = self.R(r, theta)
            if not R > 0:
                raise BDomainError(f"{self.name} vanishes at ({r}, {theta})")
            R_r = (self.R(r + hr, theta) - self.R(r - hr, theta)) / dr
            T_r = (self.Theta(r + hr, theta) - self.Theta(r - hr, theta)) / dr
            return R, self.Theta(r, theta), R_r, T_r
        u, v = self.u(r, theta), self.v(r, theta)
        R = math.hypot(u, v)
        if R == 0:
            raise BDomainError(f"{self.name} vanishes at ({r}, {theta})")
        u_r = (self.u(r + hr, theta) - self.u(r - hr, theta)) / dr
        v_r = (self.v(r + hr, theta) - self.v(r - hr, theta)) / dr
        return R, math.atan2(v, u), (u * u_r + v * v_r) / R, (u * v_r - v * u_r) / (R * R)


def complex_derivative_polar(f: PolarComplexFunction, z: BNumber,
                             step: float = DEFAULT_STEP) -> complex:
    """``f'(z) = exp(i(Theta - theta)) * (R_r + i R Theta_r)``."""
    R, Th, R_r, T_r = f.radial(z.r, z.theta, step)
    return cmath.exp(1j * (Th - z.theta)) * complex(R_r, R * T_r)


def log_derivative(f: PolarComplexFunction, z: BNumber, step: float = DEFAULT_STEP) -> complex:
    """``f'(z)/f(z)`` from the radial partials of ``ln R`` and ``Theta``.

    The caller guarantees ``f`` does not cross a branch of the logarithm
    near ``z``; no crossing detection is attempted.
    """
    R, _, R_r, T_r = f.radial(z.r, z.theta, step)
    lnR_r = R_r / R
    c, s = math.cos(z.theta), math.sin(z.theta)
    return complex(lnR_r * c + T_r * s, T_r * c - lnR_r * s)


__all__ = [
    "CRResult", "cr_check", "star_derivative", "star_derivative_field",
    "catalog_star_derivative", "PolarComplexFunction", "complex_derivative_polar",
    "log_derivative", "finite_difference_partials",
]
