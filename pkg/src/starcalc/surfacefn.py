"""Functions from the log surface to itself as pairs of real fields.

A surface function maps ``(r, theta)`` to ``(R, Theta)``. Internally the
modulus is carried as ``ln R``: every downstream formula (the polar
Cauchy-Riemann residuals, the star derivative, the contour integrands)
consumes ``ln R`` rather than ``R``, and the log form does not overflow
for the exponential-type functions this library deals in.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field as dc_field
from typing import Callable, NamedTuple, Optional

from .bnum import BNumber
from .errors import BDomainError

log = logging.getLogger(__name__)

DEFAULT_STEP = 1e-6

Field = Callable[[float, float], "tuple[float, float]"]


class PartialsAt(NamedTuple):
    """First partials of ``ln R`` and ``Theta`` at one point."""

    lnR_r: float
    lnR_theta: float
    Theta_r: float
    Theta_theta: float


class KernelTag(NamedTuple):
    """Identifies a catalog field that the compiled kernels can evaluate.

    ``star`` selects the star-derivative field instead of the function
    itself; ``param`` is the constant's log-value or the power exponent.
    """

    code: int
    star: bool
    param: complex = 0j


def _always(r, theta):
    return True


@dataclass(frozen=True)
class SurfaceFunction:
    """Immutable bundle of pure evaluators describing ``F(r, theta)``.

    ``field(r, theta)`` returns ``(ln R, Theta)``. ``partials``, when
    given, returns the analytic :class:`PartialsAt`; otherwise central
    differences are used. ``domain`` is a predicate on ``(r, theta)``.
    """

    field: Field
    partials: Optional[Callable[[float, float], PartialsAt]] = None
    domain: Callable[[float, float], bool] = _always
    name: str = "F"
    kernel: Optional[KernelTag] = dc_field(default=None, compare=False)

    @classmethod
    def from_polar(cls, R, Theta, partials=None, domain=_always, name="F"):
        """Build from a positive modulus evaluator ``R`` and an angle ``Theta``."""

        def fld(r, theta):
            m = R(r, theta)
            if not m > 0:
                raise BDomainError(f"{name}: modulus must be positive, got {m} at ({r}, {theta})")
            return math.log(m), Theta(r, theta)

        return cls(fld, partials, domain, name)

    @classmethod
    def from_log(cls, h, partials=None, domain=_always, name="F", kernel=None):
        """Build from ``h(r, theta) = ln R + i*Theta`` returning a complex."""

        def fld(r, theta):
            w = h(r, theta)
            return w.real, w.imag

        return cls(fld, partials, domain, name, kernel)

    def in_domain(self, r: float, theta: float) -> bool:
        return r > 0 and bool(self.domain(r, theta))

    def log_value(self, r: float, theta: float) -> tuple[float, float]:
        """``(ln R, Theta)`` at ``(r, theta)`` with domain and finiteness checks."""
        if not self.in_domain(r, theta):
            raise BDomainError(f"{self.name}: ({r}, {theta}) is outside the domain")
        try:
            lnR, Th = self.field(r, theta)
        except (ZeroDivisionError, OverflowError, ValueError) as exc:
            if isinstance(exc, BDomainError):
                raise
            raise BDomainError(f"{self.name}: evaluation failed at ({r}, {theta}): {exc}") from exc
        lnR, Th = float(lnR), float(Th)
        if not (math.isfinite(lnR) and math.isfinite(Th)):
            raise BDomainError(f"{self.name}: non-finite value at ({r}, {theta})")
        return lnR, Th

    def R(self, r: float, theta: float) -> float:
        return math.exp(self.log_value(r, theta)[0])

    def Theta(self, r: float, theta: float) -> float:
        return self.log_value(r, theta)[1]

    def __call__(self, z: BNumber) -> BNumber:
        return eval_at(self, z)

    def __mul__(self, other: "SurfaceFunction") -> "SurfaceFunction":
        return _combine(self, other, +1)

    def __truediv__(self, other: "SurfaceFunction") -> "SurfaceFunction":
        return _combine(self, other, -1)


def _combine(f: SurfaceFunction, g: SurfaceFunction, sign: int) -> SurfaceFunction:
    if not isinstance(g, SurfaceFunction):
        return NotImplemented

    def fld(r, theta):
        a, b = f.field(r, theta)
        c, d = g.field(r, theta)
        return a + sign * c, b + sign * d

    partials = None
    if f.partials is not None and g.partials is not None:

        def partials(r, theta):
            p, q = f.partials(r, theta), g.partials(r, theta)
            return PartialsAt(*(x + sign * y for x, y in zip(p, q)))

    def dom(r, theta):
        return f.domain(r, theta) and g.domain(r, theta)

    op = "*" if sign > 0 else "/"
    return SurfaceFunction(fld, partials, dom, f"({f.name}{op}{g.name})")


def eval_at(F: SurfaceFunction, z: BNumber) -> BNumber:
    """``(R(r, theta), Theta(r, theta))`` as a b-number."""
    lnR, Th = F.log_value(z.r, z.theta)
    try:
        return BNumber(math.exp(lnR), Th)
    except OverflowError as exc:
        raise BDomainError(f"{F.name}: modulus overflows at {z!r}") from exc


def constant(z0: BNumber, name: str = "const") -> SurfaceFunction:
    lnR0, th0 = math.log(z0.r), z0.theta
    zero = PartialsAt(0.0, 0.0, 0.0, 0.0)
    return SurfaceFunction(lambda r, t: (lnR0, th0), lambda r, t: zero, name=name)


def finite_difference_partials(F: SurfaceFunction, r: float, theta: float,
                               step: float = DEFAULT_STEP) -> PartialsAt:
    """Central differences with ``h_r = step*max(1, r)`` and ``h_theta = step``."""
    if step <= 0:
        raise BDomainError("finite-difference step must be positive")
    hr = step * max(1.0, r)
    ht = step
    if r - hr <= 0:
        raise BDomainError(f"r={r} is too close to 0 for step {step}")
    lp, tp = F.log_value(r + hr, theta)
    lm, tm = F.log_value(r - hr, theta)
    lq, tq = F.log_value(r, theta + ht)
    ln, tn = F.log_value(r, theta - ht)
    # Exact stencil widths after rounding of r +/- hr.
    dr = (r + hr) - (r - hr)
    dt = (theta + ht) - (theta - ht)
    p = PartialsAt((lp - lm) / dr, (lq - ln) / dt, (tp - tm) / dr, (tq - tn) / dt)
    if not all(math.isfinite(x) for x in p):
        raise BDomainError(f"{F.name}: non-finite difference quotient at ({r}, {theta})")
    return p


def partials_at(F: SurfaceFunction, z: BNumber, step: float = DEFAULT_STEP,
                debug: bool = False) -> PartialsAt:
    """Partials of ``ln R`` and ``Theta`` at ``z``; analytic ones win when present.

    With ``debug`` set and analytic partials available, the finite-difference
    values are computed too and any divergence above ``1e-6`` is logged.
    """
    if not F.in_domain(z.r, z.theta):
        raise BDomainError(f"{F.name}: {z!r} is outside the domain")
    if F.partials is None:
        return finite_difference_partials(F, z.r, z.theta, step)
    p = PartialsAt(*(float(x) for x in F.partials(z.r, z.theta)))
    if not all(math.isfinite(x) for x in p):
        raise BDomainError(f"{F.name}: non-finite analytic partials at {z!r}")
    if debug:
        gap = partials_divergence(F, z, step)
        if gap > 1e-6:
            log.warning("%s: analytic and finite-difference partials differ by %.3g at %r",
                        F.name, gap, z)
    return p


def partials_divergence(F: SurfaceFunction, z: BNumber, step: float = DEFAULT_STEP) -> float:
    """Largest absolute gap between analytic and finite-difference partials."""
    if F.partials is None:
        return 0.0
    a = F.partials(z.r, z.theta)
    b = finite_difference_partials(F, z.r, z.theta, step)
    return max(abs(x - y) for x, y in zip(a, b))
