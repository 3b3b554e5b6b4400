"""Piecewise-smooth paths on the log surface.

A contour is a chain of pieces parameterized as ``t -> (r(t), theta(t))``.
Arcs, rays and straight segments in the ``(r, theta)`` half-plane are all
:class:`LinearPiece`; anything else is a :class:`CurvePiece` with explicit
derivative evaluators. The angle is never wrapped, so a full turn
``arc(a, -pi, pi)`` is not closed.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, Union

from .bnum import BNumber, approx_eq
from .errors import BDomainError

CLOSE_TOL = 1e-12


@dataclass(frozen=True)
class LinearPiece:
    """``(r, theta)`` moving linearly from ``start`` to ``end`` over ``t`` in [0, 1]."""

    start: BNumber
    end: BNumber

    t0 = 0.0
    t1 = 1.0

    @property
    def kind(self) -> str:
        if self.start.r == self.end.r:
            return "arc"
        if self.start.theta == self.end.theta:
            return "ray"
        return "segment"

    def point(self, t: float) -> tuple[float, float]:
        s, e = self.start, self.end
        return s.r + t * (e.r - s.r), s.theta + t * (e.theta - s.theta)

    def velocity(self, t: float) -> tuple[float, float]:
        return self.end.r - self.start.r, self.end.theta - self.start.theta

    def reversed(self) -> "LinearPiece":
        return LinearPiece(self.end, self.start)

    def to_spec(self) -> dict:
        if self.kind == "arc":
            return {"kind": "arc", "r": self.start.r,
                    "theta0": self.start.theta, "theta1": self.end.theta}
        return {"kind": "segment", "from": self.start.to_json(), "to": self.end.to_json()}


@dataclass(frozen=True)
class CurvePiece:
    """General smooth piece given by evaluators for ``r, theta`` and their derivatives."""

    r: Callable[[float], float]
    theta: Callable[[float], float]
    dr: Callable[[float], float]
    dtheta: Callable[[float], float]
    t0: float = 0.0
    t1: float = 1.0
    kind = "curve"

    def __post_init__(self):
        if not self.t1 > self.t0:
            raise BDomainError("curve parameter interval must have t1 > t0")
        for i in range(65):
            t = self.t0 + (self.t1 - self.t0) * i / 64
            if not self.r(t) > 0:
                raise BDomainError(f"curve leaves the surface: r({t}) = {self.r(t)}")

    @property
    def start(self) -> BNumber:
        return BNumber(self.r(self.t0), self.theta(self.t0))

    @property
    def end(self) -> BNumber:
        return BNumber(self.r(self.t1), self.theta(self.t1))

    def point(self, t: float) -> tuple[float, float]:
        return self.r(t), self.theta(t)

    def velocity(self, t: float) -> tuple[float, float]:
        return self.dr(t), self.dtheta(t)

    def reversed(self) -> "CurvePiece":
        a, b = self.t0, self.t1
        return CurvePiece(
            lambda t: self.r(a + b - t),
            lambda t: self.theta(a + b - t),
            lambda t: -self.dr(a + b - t),
            lambda t: -self.dtheta(a + b - t),
            a, b,
        )


Piece = Union[LinearPiece, CurvePiece]


class Contour:
    """Immutable chain of pieces whose consecutive endpoints coincide."""

    __slots__ = ("pieces",)

    def __init__(self, pieces: Iterable[Piece]):
        pieces = tuple(pieces)
        if not pieces:
            raise BDomainError("a contour needs at least one piece")
        for a, b in zip(pieces, pieces[1:]):
            if not approx_eq(a.end, b.start, CLOSE_TOL, CLOSE_TOL):
                raise BDomainError(f"pieces do not join: {a.end!r} != {b.start!r}")
        object.__setattr__(self, "pieces", pieces)

    def __setattr__(self, name, value):
        raise AttributeError("Contour is immutable")

    @property
    def start(self) -> BNumber:
        return self.pieces[0].start

    @property
    def end(self) -> BNumber:
        return self.pieces[-1].end

    def is_closed(self, tol: float = CLOSE_TOL) -> bool:
        """Endpoints equal on the surface; ``(a, -pi)`` and ``(a, pi)`` are not."""
        return approx_eq(self.start, self.end, tol, tol)

    def __add__(self, other: "Contour") -> "Contour":
        return Contour(self.pieces + other.pieces)

    def reversed(self) -> "Contour":
        return Contour(p.reversed() for p in reversed(self.pieces))

    def __len__(self):
        return len(self.pieces)

    def __iter__(self):
        return iter(self.pieces)

    def __repr__(self):
        return f"Contour({list(self.pieces)!r})"

    def to_spec(self) -> dict:
        if any(isinstance(p, CurvePiece) for p in self.pieces):
            raise BDomainError("curve pieces have no JSON form")
        return {"pieces": [p.to_spec() for p in self.pieces]}


def arc(radius: float, theta0: float, theta1: float) -> Contour:
    """Constant ``r``, angle running linearly from ``theta0`` to ``theta1``."""
    return Contour([LinearPiece(BNumber(radius, theta0), BNumber(radius, theta1))])


def ray(theta: float, r0: float, r1: float) -> Contour:
    return Contour([LinearPiece(BNumber(r0, theta), BNumber(r1, theta))])


def segment(z1: BNumber, z2: BNumber) -> Contour:
    return Contour([LinearPiece(z1, z2)])


def polyline(points: Sequence[BNumber]) -> Contour:
    """Vertices joined by pieces linear in ``(r, theta)``."""
    points = list(points)
    if len(points) < 2:
        raise BDomainError("a polyline needs at least two points")
    return Contour(LinearPiece(a, b) for a, b in zip(points, points[1:]))


def rectangle(r0: float, r1: float, theta0: float, theta1: float) -> Contour:
    """Closed counter-clockwise rectangle in the ``(r, theta)`` half-plane."""
    return polyline([
        BNumber(r0, theta0), BNumber(r1, theta0), BNumber(r1, theta1),
        BNumber(r0, theta1), BNumber(r0, theta0),
    ])


def make_contour(spec) -> Contour:
    """Contour from its JSON form (a dict, or a string holding one).

    ``{"pieces": [{"kind": "arc", "r": 2, "theta0": -pi, "theta1": pi},
    {"kind": "segment", "from": {"r": 1, "theta": 0}, "to": {...}},
    {"kind": "ray", "theta": 0, "r0": 1, "r1": 2},
    {"kind": "polyline", "points": [{"r": .., "theta": ..}, ...]}]}``
    """
    if isinstance(spec, str):
        try:
            spec = json.loads(spec)
        except json.JSONDecodeError as exc:
            raise BDomainError(f"contour spec is not valid JSON: {exc}") from exc
    if not isinstance(spec, dict) or not isinstance(spec.get("pieces"), list):
        raise BDomainError('contour spec must be an object with a "pieces" list')
    pieces: list[Piece] = []
    for i, p in enumerate(spec["pieces"]):
        try:
            pieces.extend(_pieces_from_spec(p))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, BDomainError):
                raise
            raise BDomainError(f"malformed contour piece #{i}: {p!r} ({exc})") from exc
    return Contour(pieces)


def _num(x) -> float:
    v = float(x)
    if not math.isfinite(v):
        raise BDomainError(f"non-finite number {x!r} in contour spec")
    return v


def _pieces_from_spec(p: dict) -> list[Piece]:
    kind = p["kind"]
    if kind == "arc":
        return list(arc(_num(p["r"]), _num(p["theta0"]), _num(p["theta1"])))
    if kind == "ray":
        return list(ray(_num(p["theta"]), _num(p["r0"]), _num(p["r1"])))
    if kind == "segment":
        return list(segment(BNumber.from_json(p["from"]), BNumber.from_json(p["to"])))
    if kind == "polyline":
        return list(polyline([BNumber.from_json(q) for q in p["points"]]))
    raise BDomainError(f"unknown contour piece kind {kind!r}")
