"""Named surface functions with known star derivatives.

Every entry is of the form ``ln R + i*Theta = g(L)`` with
``L = ln r + i*theta``. Its star derivative then has the log-value
``g'(L) * exp(-L) = g'(L) / l(z)``, which is again of this form, so both
the function and its star-derivative field come with exact partials.

The integer codes are shared with the compiled kernels.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

from .bnum import BNumber
from .elemfn import analytic_field, blog
from .errors import BDomainError
from .surfacefn import KernelTag, SurfaceFunction

CONST, IDENTITY, POWER, EXP, LOG, COSH, SINH, COS, SIN = range(9)

CODES = {
    "const": CONST, "identity": IDENTITY, "power": POWER, "exp": EXP, "log": LOG,
    "cosh": COSH, "sinh": SINH, "cos": COS, "sin": SIN,
}
NAMES = {v: k for k, v in CODES.items()}


def _zero(L):
    return 0j


def _log_domain(r, theta):
    # Excludes log z = 0 and the jump of atan2(theta, ln r) at theta = 0, r < 1.
    return not (theta == 0.0 and r <= 1.0)


def _star_log_domain(r, theta):
    return not (theta == 0.0 and r == 1.0)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    g: Callable[[complex], complex]
    dg: Callable[[complex], complex]
    d2g: Callable[[complex], complex]
    code: int
    param: complex = 0j

    def function(self) -> SurfaceFunction:
        dom = _log_domain if self.code == LOG else None
        return analytic_field(self.g, self.dg, name=self.label, domain=dom,
                              kernel=KernelTag(self.code, False, self.param))

    def star_field(self) -> SurfaceFunction:
        """Closed-form star derivative ``bexp(g'(L) / l(z))`` as a surface function."""
        dg, d2g = self.dg, self.d2g

        def k(L):
            return dg(L) * cmath.exp(-L)

        def dk(L):
            return (d2g(L) - dg(L)) * cmath.exp(-L)

        dom = _star_log_domain if self.code == LOG else None
        return analytic_field(k, dk, name=f"star({self.label})", domain=dom,
                              kernel=KernelTag(self.code, True, self.param))

    @property
    def label(self) -> str:
        if self.code == POWER:
            return f"power({self.param})"
        if self.code == CONST:
            return f"const({self.param})"
        return self.name


def entry(name: str, param=None) -> CatalogEntry:
    """Look up a catalog entry.

    ``param`` is the constant value (a :class:`BNumber`) for ``const`` and
    the complex exponent for ``power``.
    """
    if name not in CODES:
        raise BDomainError(f"unknown catalog function {name!r}; expected one of {sorted(CODES)}")
    code = CODES[name]
    if code == CONST:
        if not isinstance(param, BNumber):
            raise BDomainError("const requires a b-number parameter")
        c = blog(param)
        return CatalogEntry(name, lambda L: c, _zero, _zero, code, c)
    if code == POWER:
        if param is None:
            raise BDomainError("power requires a complex exponent")
        w = complex(param)
        return CatalogEntry(name, lambda L: w * L, lambda L: w, _zero, code, w)
    return _FIXED[name]


def _inv(L):
    return 1.0 / L


def _neg_inv2(L):
    return -1.0 / (L * L)


def _neg(f):
    def g(L):
        return -f(L)
    return g


def _identity(L):
    return L


def _one(L):
    return 1.0 + 0j


_FIXED = {
    "identity": CatalogEntry("identity", _identity, _one, _zero, IDENTITY),
    "exp": CatalogEntry("exp", cmath.exp, cmath.exp, cmath.exp, EXP),
    "log": CatalogEntry("log", cmath.log, _inv, _neg_inv2, LOG),
    "cosh": CatalogEntry("cosh", cmath.cosh, cmath.sinh, cmath.cosh, COSH),
    "sinh": CatalogEntry("sinh", cmath.sinh, cmath.cosh, cmath.sinh, SINH),
    "cos": CatalogEntry("cos", cmath.cos, _neg(cmath.sin), _neg(cmath.cos), COS),
    "sin": CatalogEntry("sin", cmath.sin, cmath.cos, _neg(cmath.sin), SIN),
}


def function(name: str, param=None) -> SurfaceFunction:
    return entry(name, param).function()


def star_field(name: str, param=None) -> SurfaceFunction:
    return entry(name, param).star_field()
