"""Points of the log surface and their multiplicative algebra.

A b-number ``(r, theta)`` carries a positive modulus and an unbounded
winding angle. Two b-numbers that project onto the same complex number
(for example ``(1, 0)`` and ``(1, 2*pi)``) are distinct, so the angle is
never reduced to a 2*pi window and equality is never modular.

Only multiplication, division and powers are defined; the surface has no
addition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Integral

from .errors import BDomainError

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True, slots=True)
class BNumber:
    """Immutable point ``(r, theta)`` with ``r > 0``."""

    r: float
    theta: float

    def __post_init__(self):
        r, theta = float(self.r), float(self.theta)
        if not (math.isfinite(r) and math.isfinite(theta)):
            raise BDomainError(f"b-number components must be finite, got ({r}, {theta})")
        if r <= 0.0:
            raise BDomainError(f"r must be > 0, got {r}")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "theta", theta)

    def __mul__(self, other):
        if isinstance(other, BNumber):
            return mul(self, other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, BNumber):
            return div(self, other)
        return NotImplemented

    def __pow__(self, w):
        return pow_complex(self, w)

    def __repr__(self):
        return f"BNumber(r={self.r!r}, theta={self.theta!r})"

    @property
    def branch(self) -> int:
        return branch_index(self)

    def project(self) -> complex:
        return project(self)

    def to_json(self) -> dict:
        return {"r": self.r, "theta": self.theta}

    @classmethod
    def from_json(cls, obj) -> "BNumber":
        try:
            return cls(obj["r"], obj["theta"])
        except (KeyError, TypeError) as exc:
            raise BDomainError(f"not a serialized b-number: {obj!r}") from exc


ONE = BNumber(1.0, 0.0)


def make_bnum(r: float, theta: float) -> BNumber:
    return BNumber(r, theta)


def principal_arg(z: complex) -> float:
    """Argument of ``z`` in the half-open window ``[-pi, pi)``."""
    a = math.atan2(z.imag, z.real)
    # atan2 returns +pi on the negative real axis (including -0.0 imag).
    if a >= math.pi:
        a -= TWO_PI
    return a


def embed_complex(z: complex) -> BNumber:
    """The unique preimage of ``z`` in the principal sheet."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise BDomainError(f"cannot embed non-finite complex {z}")
    if z == 0:
        raise BDomainError("zero is not a b-number")
    return BNumber(abs(z), principal_arg(z))


def embed_real(x: float) -> BNumber:
    x = float(x)
    if x == 0.0:
        raise BDomainError("zero is not a b-number")
    if x > 0:
        return BNumber(x, 0.0)
    return BNumber(-x, -math.pi)


def project(z: BNumber) -> complex:
    """Map ``(r, theta)`` to ``r * exp(i*theta)``; many-to-one."""
    return complex(z.r * math.cos(z.theta), z.r * math.sin(z.theta))


def mul(z1: BNumber, z2: BNumber) -> BNumber:
    return BNumber(z1.r * z2.r, z1.theta + z2.theta)


def div(z1: BNumber, z2: BNumber) -> BNumber:
    return BNumber(z1.r / z2.r, z1.theta - z2.theta)


def inverse(z: BNumber) -> BNumber:
    return BNumber(1.0 / z.r, -z.theta)


def pow_complex(z: BNumber, w) -> BNumber:
    """``z**w = bexp(w * blog(z))`` for any complex exponent ``w``.

    Real exponents take the ``(r**u, u*theta)`` route so that integer and
    rational powers agree exactly with repeated multiplication.
    """
    try:
        if isinstance(w, Integral):
            w = int(w)
            return BNumber(z.r**w, w * z.theta)
        w = complex(w)
        u, v = w.real, w.imag
        if v == 0.0:
            return BNumber(z.r**u, u * z.theta)
        ln_r = math.log(z.r)
        return BNumber(math.exp(u * ln_r - v * z.theta), u * z.theta + v * ln_r)
    except (OverflowError, ZeroDivisionError) as exc:
        raise BDomainError(f"power out of range: {z!r} ** {w}") from exc


def root_n(z: BNumber, n: int) -> BNumber:
    """The unique ``w`` on the surface with ``w**n == z``."""
    if isinstance(n, bool) or not isinstance(n, Integral) or n < 1:
        raise BDomainError(f"root order must be a positive integer, got {n!r}")
    n = int(n)
    if n == 1:
        return z
    if n == 2:
        return BNumber(math.sqrt(z.r), z.theta / 2)
    return BNumber(z.r ** (1.0 / n), z.theta / n)


def branch_index(z: BNumber) -> int:
    """Index ``n`` of the sheet ``[2*pi*n - pi, 2*pi*n + pi)`` holding ``z``."""
    n = math.floor((z.theta + math.pi) / TWO_PI)
    # Guard the half-open boundaries against rounding in the division.
    if z.theta < TWO_PI * n - math.pi:
        n -= 1
    elif z.theta >= TWO_PI * n + math.pi:
        n += 1
    return int(n)


def in_branch(z: BNumber, alpha: float) -> bool:
    """Whether ``z`` lies in the strip ``alpha - pi <= theta < alpha + pi``."""
    return alpha - math.pi <= z.theta < alpha + math.pi


def approx_eq(z1: BNumber, z2: BNumber, tol_r: float = 1e-12, tol_theta: float = 1e-12) -> bool:
    """Relative comparison on ``r``, absolute on ``theta``; never modular."""
    if tol_r <= 0 or tol_theta <= 0:
        raise BDomainError("tolerances must be positive")
    return (
        abs(z1.r - z2.r) <= tol_r * max(1.0, z1.r)
        and abs(z1.theta - z2.theta) <= tol_theta
    )


def classical_roots(c: complex, n: int) -> list[complex]:
    """The n de Moivre roots of nonzero ``c`` as projections of surface roots."""
    base = embed_complex(c)
    return [
        project(root_n(BNumber(base.r, base.theta + TWO_PI * k), n))
        for k in range(n)
    ]
