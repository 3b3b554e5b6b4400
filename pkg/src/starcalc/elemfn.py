"""Logarithm and exponential between the surface and the complex plane.

``blog`` and ``bexp`` are mutually inverse bijections, so the classical
branch ambiguity never arises: ``blog(bexp(2j*pi)) == 2j*pi``. The same
pair transports single-valued classical functions onto the surface
(``lift``) and back (``unlift``).
"""

from __future__ import annotations

import cmath
import math
from typing import Callable, Optional

from .bnum import BNumber
from .errors import BDomainError
from .surfacefn import KernelTag, PartialsAt, SurfaceFunction

__all__ = [
    "blog", "bexp", "lift", "unlift", "trig_hyp", "analytic_field",
    "CLASSICAL", "TRIG_HYP_KINDS",
]


def blog(z: BNumber) -> complex:
    """``ln r + i*theta``; no 2*pi collapse."""
    return complex(math.log(z.r), z.theta)


def bexp(z: complex) -> BNumber:
    """``(e**x, y)`` for ``z = x + iy``."""
    z = complex(z)
    try:
        return BNumber(math.exp(z.real), z.imag)
    except OverflowError as exc:
        raise BDomainError(f"bexp overflows at {z}") from exc


def _log_arg(r: float, theta: float) -> complex:
    return complex(math.log(r), theta)


def analytic_field(g: Callable[[complex], complex],
                   dg: Optional[Callable[[complex], complex]] = None,
                   name: str = "F", domain=None, kernel: Optional[KernelTag] = None,
                   ) -> SurfaceFunction:
    """Surface function with ``ln R + i*Theta = g(ln r + i*theta)``.

    When ``dg`` (the derivative of ``g``) is given the partials are exact:
    the chain rule through ``L = ln r + i*theta`` gives ``dL/dr = 1/r`` and
    ``dL/dtheta = i``.
    """

    def h(r, theta):
        return complex(g(_log_arg(r, theta)))

    partials = None
    if dg is not None:

        def partials(r, theta):
            d = complex(dg(_log_arg(r, theta)))
            return PartialsAt(d.real / r, -d.imag, d.imag / r, d.real)

    kwargs = {} if domain is None else {"domain": domain}
    return SurfaceFunction.from_log(h, partials, name=name, kernel=kernel, **kwargs)


def lift(f: Callable[[complex], complex], df: Optional[Callable[[complex], complex]] = None,
         name: Optional[str] = None) -> SurfaceFunction:
    """``z -> bexp(f(blog z))`` for a single-valued classical ``f``."""
    return analytic_field(f, df, name=name or f"lift({getattr(f, '__name__', 'f')})")


def unlift(F: SurfaceFunction) -> Callable[[complex], complex]:
    """Return link ``z -> blog(F(bexp z))``."""

    def f(z: complex) -> complex:
        return blog(F(bexp(z)))

    f.__name__ = f"unlift({F.name})"
    return f


def _identity(z):
    return z


def _one(z):
    return 1.0 + 0j


def _neg_sin(z):
    return -cmath.sin(z)


def _sec2(z):
    return 1.0 / cmath.cos(z) ** 2


def _sech2(z):
    return 1.0 / cmath.cosh(z) ** 2


def _inv(z):
    return 1.0 / z


def _half_inv_sqrt(z):
    return 0.5 / cmath.sqrt(z)


# Single-valued classical functions available for lifting, with derivatives.
CLASSICAL: dict[str, tuple[Callable, Callable]] = {
    "id": (_identity, _one),
    "exp": (cmath.exp, cmath.exp),
    "log": (cmath.log, _inv),
    "sqrt": (cmath.sqrt, _half_inv_sqrt),
    "sin": (cmath.sin, cmath.cos),
    "cos": (cmath.cos, _neg_sin),
    "tan": (cmath.tan, _sec2),
    "sinh": (cmath.sinh, cmath.cosh),
    "cosh": (cmath.cosh, cmath.sinh),
    "tanh": (cmath.tanh, _sech2),
}

TRIG_HYP_KINDS = ("cosh", "sinh", "cos", "sin")


def trig_hyp(kind: str, z: BNumber) -> BNumber:
    """Closed-form lifted ``cosh``, ``sinh``, ``cos`` or ``sin`` at ``z``."""
    lr, t = math.log(z.r), z.theta
    try:
        x, y = _trig_hyp_exponent(kind, lr, t)
    except OverflowError as exc:
        raise BDomainError(f"{kind} overflows at {z!r}") from exc
    return bexp(complex(x, y))


def _trig_hyp_exponent(kind, lr, t):
    if kind == "cosh":
        x, y = math.cosh(lr) * math.cos(t), math.sinh(lr) * math.sin(t)
    elif kind == "sinh":
        x, y = math.sinh(lr) * math.cos(t), math.cosh(lr) * math.sin(t)
    elif kind == "cos":
        x, y = math.cosh(t) * math.cos(lr), -math.sinh(t) * math.sin(lr)
    elif kind == "sin":
        x, y = math.cosh(t) * math.sin(lr), math.sinh(t) * math.cos(lr)
    else:
        raise BDomainError(f"unknown trigonometric kind {kind!r}; expected one of {TRIG_HYP_KINDS}")
    return x, y
