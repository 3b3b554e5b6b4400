import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from starcalc.alphacalc import (
    EXP, IDENTITY, SYSTEMS, TANH, alpha_arith, alpha_derivative, alpha_integral, get_system, make_system,
    relativistic_add,
)
from starcalc.errors import BDomainError


def test_arith_examples():
    assert alpha_arith(EXP, "add", 2, 3) == 6
    assert alpha_arith(IDENTITY, "add", 2, 3) == 5
    assert alpha_arith(TANH, "add", 0.5, 0.5) == pytest.approx(0.8, abs=1e-15)
    assert alpha_arith(EXP, "mul", math.e, math.e ** 2) == pytest.approx(math.e ** 2)
    assert alpha_arith(EXP, "div", math.e ** 6, math.e ** 2) == pytest.approx(math.e ** 3)
    assert alpha_arith(EXP, "sub", 6, 3) == pytest.approx(2)


def test_arith_errors():
    with pytest.raises(BDomainError):
        alpha_arith(EXP, "add", -1, 2)
    with pytest.raises(BDomainError):
        alpha_arith(TANH, "add", 1.0, 0.0)
    with pytest.raises(BDomainError):
        alpha_arith(EXP, "div", 2, 1)
    with pytest.raises(BDomainError):
        alpha_arith(EXP, "pow", 2, 1)
    with pytest.raises(BDomainError):
        get_system("sigmoid")


@pytest.mark.parametrize("sys", list(SYSTEMS.values()), ids=list(SYSTEMS))
def test_transport_laws(sys):
    rng = np.random.default_rng(0)
    xs = [[sys.alpha(v) for v in row] for row in rng.uniform(-1.5, 1.5, (50, 3))]
    for a, b, c in xs:
        add = lambda x, y: alpha_arith(sys, "add", x, y)  # noqa: E731
        assert add(add(a, b), c) == pytest.approx(add(a, add(b, c)), abs=1e-10)
        assert add(a, b) == pytest.approx(add(b, a), abs=1e-10)
        assert add(a, sys.zero) == pytest.approx(a, abs=1e-10)
        assert alpha_arith(sys, "mul", a, sys.one) == pytest.approx(a, abs=1e-10)


def test_derivative_examples():
    assert alpha_derivative(EXP, lambda x: math.exp(2 * x), 0.3) == pytest.approx(math.e ** 2, rel=1e-8)
    assert alpha_derivative(IDENTITY, math.sin, 0.4) == pytest.approx(math.cos(0.4), abs=1e-9)
    assert alpha_derivative(EXP, lambda x: 7.0, 1.2) == 1.0


def test_exp_derivative_is_exp_of_log_derivative():
    rng = np.random.default_rng(1)
    for a, b, c in rng.uniform(0.5, 2.0, (20, 3)):
        f = lambda x: a + b * x * x + math.exp(c * x)  # noqa: E731
        df = lambda x: 2 * b * x + c * math.exp(c * x)  # noqa: E731
        x = rng.uniform(-1, 1)
        assert alpha_derivative(EXP, f, x) == pytest.approx(math.exp(df(x) / f(x)), rel=1e-8)


def test_integral_examples():
    assert alpha_integral(EXP, lambda x: math.e, 0.0, 1.0) == pytest.approx(math.e, rel=1e-14)
    assert alpha_integral(IDENTITY, math.cos, 0.0, 1.0) == pytest.approx(math.sin(1.0), abs=1e-12)


@pytest.mark.parametrize("sys,g", [
    (IDENTITY, lambda x: x ** 3 - x),
    (EXP, lambda x: 2.0 + math.sin(x)),
    (TANH, lambda x: 0.9 * math.tanh(x)),
])
def test_alpha_ftc(sys, g):
    a, b = -0.7, 1.3
    got = alpha_integral(sys, lambda x: alpha_derivative(sys, g, x), a, b)
    assert got == pytest.approx(alpha_arith(sys, "sub", g(b), g(a)), abs=1e-8)


def test_relativistic_examples():
    assert relativistic_add(0.5, 0.5) == pytest.approx(0.8, abs=1e-15)
    assert relativistic_add(0.0, 0.3) == 0.3
    assert relativistic_add(0.2, -0.7) == relativistic_add(-0.7, 0.2)
    assert relativistic_add(1.5e8, 1.5e8, 3e8) == pytest.approx(2.4e8)
    for bad in [(1.0, 0.0, 1.0), (0.1, 0.1, 0.0)]:
        with pytest.raises(BDomainError):
            relativistic_add(*bad)


@given(st.floats(-0.999, 0.999), st.floats(-0.999, 0.999), st.floats(0.5, 10.0))
def test_relativity_bridge(a, b, c):
    want = c * alpha_arith(TANH, "add", a, b)
    assert relativistic_add(a * c, b * c, c) == pytest.approx(want, abs=1e-12 * c)


def test_make_system_self_check():
    s = make_system("cube", lambda x: x ** 3, lambda y: math.copysign(abs(y) ** (1 / 3), y),
                    -math.inf, math.inf, tol=1e-9)
    assert alpha_arith(s, "add", 1.0, 8.0) == pytest.approx(27.0)
    with pytest.raises(BDomainError):
        make_system("bad", math.sin, math.asin, -1, 1)
    with pytest.raises(BDomainError):
        make_system("square", lambda x: x * x + 1, lambda y: math.sqrt(y - 1), 0, math.inf)
