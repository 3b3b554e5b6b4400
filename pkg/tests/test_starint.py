import cmath
import math

import numpy as np
import pytest
from scipy import integrate

from starcalc import catalog
from starcalc.bnum import BNumber, approx_eq, branch_index, div, mul
from starcalc.contour import CurvePiece, Contour, arc, polyline, ray, rectangle, segment
from starcalc.elemfn import blog, lift
from starcalc.errors import BDomainError, StarCalcError
from starcalc.starint import (
    additive_recovery, ftc_ratio, green_residuals, integrands, star_integral, star_integral_detail,
)
from starcalc.surfacefn import SurfaceFunction, constant

PI = math.pi


def oracle_exponent(F, C):
    """int_C (ln R + i Theta) dz with dz = e^{i theta}(r' + i r theta') dt, by scipy."""
    total = 0j
    for p in C:
        def h(t):
            r, th = p.point(t)
            vr, vt = p.velocity(t)
            lnR, Th = F.log_value(r, th)
            return complex(lnR, Th) * cmath.exp(1j * th) * complex(vr, r * vt)
        re, _ = integrate.quad(lambda t: h(t).real, p.t0, p.t1, epsabs=1e-13, epsrel=1e-13, limit=400)
        im, _ = integrate.quad(lambda t: h(t).imag, p.t0, p.t1, epsabs=1e-13, epsrel=1e-13, limit=400)
        total += complex(re, im)
    return total


def test_integrands_examples():
    z = (1.7, 0.4)
    P, Q, M, N = integrands(constant(BNumber(1, 0)))
    assert P(*z) == Q(*z) == M(*z) == N(*z) == 0
    P, Q, M, N = integrands(catalog.function("identity"))
    r, t = z
    assert P(r, t) == pytest.approx(math.log(r) * math.cos(t) - t * math.sin(t), abs=1e-15)
    assert Q(r, t) == pytest.approx(r * M(r, t)) and N(r, t) == pytest.approx(r * P(r, t))


def test_star_field_P_is_radial_log_partial():
    F = catalog.function("power", 1.5 + 0.5j)
    D = catalog.star_field("power", 1.5 + 0.5j)
    P = integrands(D).P
    for r, t in [(0.8, 0.3), (2.5, -4.0), (1.1, 7.0)]:
        assert P(r, t) == pytest.approx(F.partials(r, t).lnR_r, abs=1e-13)


def test_unit_field_integrates_to_one():
    C = polyline([BNumber(1, 0), BNumber(3, 2), BNumber(0.5, -4)])
    assert star_integral(constant(BNumber(1, 0)), C) == BNumber(1.0, 0.0)


@pytest.mark.parametrize("a", [0.5, 1.0, 2.0, 10.0])
def test_identity_derivative_full_turn(a):
    res = star_integral(catalog.star_field("identity"), arc(a, -PI, PI))
    assert approx_eq(res, BNumber(1, 2 * PI), 1e-12, 1e-12)
    assert not approx_eq(res, BNumber(1, 0), 1e-3, 1e-3)


def test_log_derivative_arc():
    res = star_integral(catalog.star_field("log"), arc(math.e, -PI, PI))
    assert approx_eq(res, BNumber(1, 2 * math.atan(PI)), 1e-10, 1e-10)


def test_ftc_ratio_examples():
    ident = catalog.function("identity")
    assert approx_eq(ftc_ratio(ident, BNumber(1, 0), BNumber(math.e, PI / 2)), BNumber(math.e, PI / 2))
    for a in (0.5, 2.0):
        assert approx_eq(ftc_ratio(ident, BNumber(a, -PI), BNumber(a, PI)), BNumber(1, 2 * PI))
    L = catalog.function("log")
    assert approx_eq(ftc_ratio(L, BNumber(math.e, -PI), BNumber(math.e, PI)),
                     BNumber(1, 2 * math.atan(PI)), 1e-14, 1e-14)


def test_additive_recovery_examples():
    a = 3.0
    assert additive_recovery(complex(math.log(a), PI), complex(math.log(a), -PI)) == 2j * PI
    assert additive_recovery(1 + 2j, 1 + 2j) == 0
    assert additive_recovery(1 + 5j, 1 - 5j) == 10j


@pytest.mark.parametrize("F", [
    SurfaceFunction.from_polar(lambda r, t: r, lambda r, t: 2 * t, name="non-analytic"),
    SurfaceFunction(lambda r, t: (math.sin(r * t), r - t), name="wiggle"),
    catalog.star_field("identity"),
    lift(cmath.exp),
])
def test_against_complex_quadrature_oracle(F):
    C = polyline([BNumber(1, 0), BNumber(2, 1.5), BNumber(1.5, 4.0)]) + arc(1.5, 4.0, -1.0)
    curve = CurvePiece(lambda t: 1.5 + 0.5 * math.sin(t), lambda t: -1.0 + t,
                       lambda t: 0.5 * math.cos(t), lambda t: 1.0, 0.0, 2.0)
    C = C + Contour([curve])
    res = star_integral_detail(F, C, 1e-11)
    want = oracle_exponent(F, C)
    assert abs(res.exponent - want) <= 1e-9 * max(1.0, abs(want))


def test_concatenation_and_pointwise_rules():
    F, G = catalog.function("exp"), catalog.function("power", 0.5 - 1j)
    C1 = polyline([BNumber(1, 0), BNumber(2, 1)])
    C2 = arc(2, 1, 5)
    whole = star_integral(F, C1 + C2)
    assert approx_eq(whole, mul(star_integral(F, C1), star_integral(F, C2)), 1e-9, 1e-9)
    C = C1 + C2
    assert approx_eq(star_integral(F * G, C), mul(star_integral(F, C), star_integral(G, C)), 1e-9, 1e-9)
    assert approx_eq(star_integral(F / G, C), div(star_integral(F, C), star_integral(G, C)), 1e-9, 1e-9)


def test_reversal_inverts():
    F = catalog.star_field("cosh")
    C = polyline([BNumber(1.2, 0.2), BNumber(2.0, 1.0), BNumber(1.4, -0.5)])
    assert approx_eq(mul(star_integral(F, C), star_integral(F, C.reversed())), BNumber(1, 0), 1e-9, 1e-9)


@pytest.mark.parametrize("name,param", [("identity", None), ("power", 2 - 1j), ("exp", None), ("sin", None)])
def test_closed_rectangle_gives_one(name, param):
    D = catalog.star_field(name, param)
    res = star_integral(D, rectangle(0.7, 2.0, -1.0, 2.5))
    assert approx_eq(res, BNumber(1, 0), 1e-9, 1e-9)


def test_green_residuals_vanish_for_analytic_fields():
    for F in (catalog.star_field("identity"), catalog.function("exp"), catalog.star_field("log")):
        for z in (BNumber(1.3, 0.4), BNumber(2.5, -3.0), BNumber(0.6, 8.0)):
            a, b = green_residuals(F, z)
            assert abs(a) < 1e-6 and abs(b) < 1e-6
    bad = SurfaceFunction.from_polar(lambda r, t: r, lambda r, t: 2 * t)
    assert max(map(abs, green_residuals(bad, BNumber(1.3, 0.4)))) > 0.1


def test_winding_lands_on_later_sheets():
    res = star_integral(catalog.star_field("identity"), arc(1.0, 0.0, 6 * PI))
    assert branch_index(res) == 3
    assert abs(blog(res) - 6j * PI) < 1e-10


def test_errors():
    C = segment(BNumber(0.5, 0.0), BNumber(2.0, 0.0))
    # passes through the pole at (1, 0): either non-convergence or a hit on the singular point
    with pytest.raises(StarCalcError):
        star_integral(catalog.star_field("log"), C)
    with pytest.raises(BDomainError):
        star_integral(catalog.star_field("identity"), C, tol=0)
    with pytest.raises(BDomainError):
        star_integral(catalog.function("log"), ray(0.0, 0.5, 2.0), backend="generic")


def test_result_json():
    res = star_integral_detail(catalog.star_field("identity"), arc(2, -PI, PI))
    d = res.to_json()
    assert set(d) == {"r", "theta", "branch", "exponent"} and d["branch"] == 1


def test_linear_pieces_and_curve_pieces_agree():
    F = catalog.star_field("power", 1 + 2j)
    a = star_integral_detail(F, arc(1.5, 0.0, 3.0))
    c = CurvePiece(lambda t: 1.5, lambda t: t, lambda t: 0.0, lambda t: 1.0, 0.0, 3.0)
    b = star_integral_detail(F, Contour([c]))
    assert b.backend == "generic"
    assert abs(a.exponent - b.exponent) < 1e-10
    assert np.isfinite(a.error) and a.evaluations > 0
