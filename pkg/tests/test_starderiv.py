import cmath
import math

import numpy as np
import pytest

from starcalc import catalog
from starcalc.bnum import BNumber, approx_eq, branch_index, div, mul, project
from starcalc.elemfn import bexp
from starcalc.errors import BDomainError, NotStarDifferentiable
from starcalc.starderiv import (
    CR_TOL_ANALYTIC, CR_TOL_FINITE_DIFF, PolarComplexFunction, catalog_star_derivative,
    complex_derivative_polar, cr_check, default_cr_tol, log_derivative, star_derivative,
    star_derivative_field,
)
from starcalc.surfacefn import SurfaceFunction, constant

PI = math.pi


def points(n, seed, r=(0.5, 20.0), t=(-3 * PI, 3 * PI)):
    rng = np.random.default_rng(seed)
    return [BNumber(a, b) for a, b in zip(rng.uniform(*r, n), rng.uniform(*t, n))]


def fd_only(F):
    """Same field with analytic partials stripped."""
    return SurfaceFunction(F.field, None, F.domain, F.name + "/fd")


def test_default_tolerances():
    assert default_cr_tol(catalog.function("identity")) == CR_TOL_ANALYTIC == 1e-9
    assert default_cr_tol(fd_only(catalog.function("identity"))) == CR_TOL_FINITE_DIFF == 1e-5


def test_cr_check_examples():
    res = cr_check(constant(BNumber(3, 1)), BNumber(2, 0.5))
    assert res.ok and res.rho1 == 0 and res.rho2 == 0
    E = catalog.function("exp")
    assert cr_check(E, BNumber(1.7, 2.2))
    bad = SurfaceFunction.from_polar(lambda r, t: r, lambda r, t: 2 * t)
    res = cr_check(bad, BNumber(1.5, 0.3))
    assert not res and res.rho1 == pytest.approx(-1.0, abs=1e-8)


def test_star_derivative_examples():
    for z in points(10, 0):
        assert star_derivative(constant(BNumber(5, -2)), z) == BNumber(1.0, 0.0)
        assert approx_eq(star_derivative(catalog.function("exp"), z), BNumber(math.e, 0), 1e-12, 1e-12)
    assert approx_eq(star_derivative(catalog.function("identity"), BNumber(2, 0)),
                     BNumber(math.exp(0.5), 0), 1e-15, 1e-15)


def test_star_derivative_rejects_non_analytic():
    bad = SurfaceFunction.from_polar(lambda r, t: r, lambda r, t: 2 * t)
    with pytest.raises(NotStarDifferentiable) as info:
        star_derivative(bad, BNumber(1.5, 0.3))
    assert info.value.residuals[0] == pytest.approx(-1.0, abs=1e-8)


def test_catalog_closed_forms_examples():
    for z in points(10, 1):
        r, t = z.r, z.theta
        want = BNumber(math.exp(math.cos(t) / r), -math.sin(t) / r)
        assert approx_eq(catalog_star_derivative("identity", None, z), want, 1e-14, 1e-14)
        w = 0.5 - 1.5j
        assert approx_eq(catalog_star_derivative("power", w, z), bexp(w / project(z)), 1e-14, 1e-14)
    assert approx_eq(catalog_star_derivative("log", None, BNumber(math.e, 0)),
                     BNumber(math.exp(1 / math.e), 0), 1e-15, 1e-15)
    with pytest.raises(BDomainError):
        catalog_star_derivative("log", None, BNumber(1, 0))
    with pytest.raises(BDomainError):
        catalog_star_derivative("tan", None, BNumber(1, 0))


@pytest.mark.parametrize("name,param", [
    ("const", BNumber(2.0, -4.0)), ("identity", None), ("power", 1 + 2j), ("exp", None), ("log", None),
])
def test_definition_with_fd_matches_closed_form(name, param):
    F = fd_only(catalog.function(name, param))
    for z in points(100, 2):
        got = star_derivative(F, z)
        want = catalog_star_derivative(name, param, z)
        assert approx_eq(got, want, 1e-6, 1e-6)


@pytest.mark.parametrize("name", ["cosh", "sinh", "cos", "sin"])
def test_trig_star_derivative_matches_field(name):
    e = catalog.entry(name)
    for z in points(30, 3, r=(0.5, 3.0), t=(-2.0, 2.0)):
        a = star_derivative(e.function(), z)
        b = catalog_star_derivative(name, None, z)
        c = e.star_field()(z)
        assert approx_eq(a, b, 1e-10, 1e-10 * max(1, abs(b.theta)))
        assert approx_eq(c, b, 1e-12, 1e-12 * max(1, abs(b.theta)))


def test_product_quotient_constant_rules():
    F, G = catalog.function("exp"), catalog.function("power", 0.5 + 1j)
    z0 = constant(BNumber(4.0, 9.0))
    for z in points(100, 4, r=(0.5, 3.0)):
        fF, fG = star_derivative(F, z), star_derivative(G, z)
        assert approx_eq(star_derivative(F * G, z), mul(fF, fG), 1e-8, 1e-8)
        assert approx_eq(star_derivative(F / G, z), div(fF, fG), 1e-8, 1e-8)
        assert approx_eq(star_derivative(z0 * F, z), fF, 1e-8, 1e-8)


def test_product_rule_with_fd_partials():
    F, G = fd_only(catalog.function("identity")), fd_only(catalog.function("power", 2.0))
    for z in points(20, 5, r=(0.5, 3.0)):
        got = star_derivative(F * G, z)
        want = mul(star_derivative(F, z), star_derivative(G, z))
        assert approx_eq(got, want, 1e-6, 1e-6)


def test_star_derivative_field():
    F = catalog.function("power", 3.0)
    D = star_derivative_field(F)
    z = BNumber(1.2, 0.4)
    assert approx_eq(D(z), catalog_star_derivative("power", 3.0, z), 1e-12, 1e-12)


def test_complex_derivative_polar_examples():
    ident = PolarComplexFunction(R=lambda r, t: r, Theta=lambda r, t: t)
    assert abs(complex_derivative_polar(ident, BNumber(3, 1)) - 1) < 1e-9
    sq = PolarComplexFunction(R=lambda r, t: r * r, Theta=lambda r, t: 2 * t)
    z = BNumber(2, PI / 3)
    assert abs(complex_derivative_polar(sq, z) - 2 * project(z)) < 1e-8
    cube = PolarComplexFunction(R=lambda r, t: r ** 3, Theta=lambda r, t: 3 * t)
    z = BNumber(1, PI / 4)
    assert abs(complex_derivative_polar(cube, z) - 3 * project(z) ** 2) < 1e-8


def test_log_derivative_examples():
    ident = PolarComplexFunction.from_classical(lambda w: w)
    z = BNumber(1.3, 2.0)
    assert abs(log_derivative(ident, z) - 1 / project(z)) < 1e-8
    sq = PolarComplexFunction.from_classical(lambda w: w * w)
    z = BNumber(2, PI / 6)
    assert abs(log_derivative(sq, z) - 2 / project(z)) < 1e-8
    c = PolarComplexFunction.from_classical(lambda w: 3 - 2j)
    assert abs(log_derivative(c, z)) < 1e-12


def test_log_derivative_matches_polar_derivative_over_value():
    for f in (cmath.exp, lambda w: w ** 3 + 2, cmath.cosh):
        pf = PolarComplexFunction.from_classical(f)
        for z in points(20, 6, r=(0.3, 2.0), t=(-PI, PI)):
            val = pf.value(z.r, z.theta)
            want = complex_derivative_polar(pf, z) / val
            assert abs(log_derivative(pf, z) - want) <= 1e-8 * max(1, abs(want))


def test_vanishing_function_is_domain_error():
    f = PolarComplexFunction.from_classical(lambda w: w - 1)
    with pytest.raises(BDomainError):
        f.value(1.0, 0.0)
    with pytest.raises(BDomainError):
        PolarComplexFunction()


def test_identity_principality_condition():
    # the identity star derivative lies on sheet 0 iff -r*pi < sin(theta) <= r*pi
    for z in points(300, 7, r=(0.05, 1.0)):
        s = math.sin(z.theta)
        inside = -z.r * PI < s <= z.r * PI
        assert (branch_index(catalog_star_derivative("identity", None, z)) == 0) == inside


def test_log_star_derivative_complex_valued_region():
    # where r*pi*|log z| > 1 the log star derivative lands on sheet 0
    for z in points(300, 8, r=(0.2, 5.0), t=(-2 * PI, 2 * PI)):
        if z.r * PI * abs(complex(math.log(z.r), z.theta)) > 1:
            assert branch_index(catalog_star_derivative("log", None, z)) == 0
