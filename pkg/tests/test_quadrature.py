import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lek.errors import ConvergenceError, DomainError, NonFiniteError
from lek.quadrature import (LOG, SMOOTH, Algebraic, QuadResult, integrate, integrate_2d,
                            integrate_pv, integrate_sphere)
from lek.specfun import elliptic_k, elliptic_kp


def test_integrate_examples():
    r = integrate(lambda x: np.ones_like(x), 0.0, 1.0)
    assert isinstance(r, QuadResult) and r.value == pytest.approx(1.0, rel=1e-15)
    assert r.evals >= 1 and r.err_estimate >= 0
    r = integrate(lambda x: 1 / np.sqrt(x), 0.0, 1.0, (Algebraic(0.5), SMOOTH), tol=1e-13)
    assert r.value == pytest.approx(2.0, rel=1e-13)


def test_integrate_eq15_log_ends():
    def f(t, ta, tb):
        return elliptic_kp(np.sqrt(tb)) * elliptic_kp(np.sqrt(ta))
    r = integrate(f, 0.0, 1.0, (LOG, LOG), tol=1e-12, offsets=True)
    assert abs(r.value - math.pi ** 3 / 8) <= 1e-9


def test_integrate_errors():
    with pytest.raises(DomainError):
        integrate(lambda x: x, 1.0, 0.0)
    with pytest.raises(DomainError):
        integrate(lambda x: x, 0.0, 1.0, tol=0.0)
    with pytest.raises(DomainError):
        Algebraic(1.0)
    with pytest.raises(NonFiniteError):
        integrate(lambda x: np.where(x > 0.5, np.nan, x), 0.0, 1.0)
    with pytest.raises(ConvergenceError):
        integrate(lambda x: np.sin(1 / x), 0.0, 1.0, tol=1e-14, max_evals=5000)


def test_algebraic_hint_at_right_end():
    r = integrate(lambda x, xa, xb: xb ** -0.75, 0.0, 1.0, (SMOOTH, Algebraic(0.75)), tol=1e-12,
                  offsets=True)
    assert r.value == pytest.approx(4.0, rel=1e-11)


def test_complex_integrand():
    r = integrate(lambda x: np.exp(1j * x), 0.0, math.pi)
    assert abs(r.value - 2j) <= 1e-12


def test_pv_examples():
    r = integrate_pv(lambda x: np.ones_like(x), 0.3, -1.0, 1.0, tricomi=True)
    assert r.value == pytest.approx(math.log(1.3 / 0.7) / math.pi, rel=1e-13)
    r = integrate_pv(lambda x: x, 0.0, -1.0, 1.0, tricomi=True)
    assert r.value == pytest.approx(-2 / math.pi, rel=1e-13)

    def f(xi, xa, xb):
        return elliptic_kp(np.sqrt(xa / 2)) / np.sqrt(xa)
    r = integrate_pv(f, 0.4, -1.0, 1.0, 1e-10, (Algebraic(0.5), SMOOTH), tricomi=True, offsets=True)
    assert abs(r.value - elliptic_k(math.sqrt(0.7)) / math.sqrt(1.4)) <= 1e-7
    with pytest.raises(DomainError):
        integrate_pv(lambda x: x, 1.0, -1.0, 1.0)


def test_sphere_examples():
    assert integrate_sphere(lambda X, Y, Z: np.ones_like(X)).value == pytest.approx(1.0, rel=1e-14)
    assert integrate_sphere(lambda X, Y, Z: Z * Z, tol=1e-12).value == pytest.approx(1 / 3, rel=1e-12)


def test_sphere_eq35_integrand():
    s, t = 0.5, 0.25

    def g(X, Y, Z):
        # (1-sX^2)(1-tY^2) - Z^2 rewritten without cancellation
        r = (1 - s) * X * X + (1 - t) * Y * Y + s * t * X * X * Y * Y
        return 1 / np.sqrt(r)
    val = integrate_sphere(g, tol=1e-11, theta_breaks=(math.pi / 2,),
                           phi_breaks=(0.0, math.pi / 2, math.pi, 1.5 * math.pi)).value
    assert abs(val * math.pi / 2 - elliptic_k(math.sqrt(s)) * elliptic_k(math.sqrt(t))) <= 1e-8


def test_integrate_2d_examples():
    r = integrate_2d(lambda x, y: 1.0 + 0 * x * y, ((0, 1), (0, 1)))
    assert r.value == pytest.approx(1.0, rel=1e-13)
    lo = ((SMOOTH, LOG), (SMOOTH, LOG))

    def f(th, ph, tha, thb, pha, phb):
        # 1 - sin^2 th sin^2 ph = cos^2 th + sin^2 th cos^2 ph
        return 1 / np.sqrt(np.sin(thb) ** 2 + np.sin(th) ** 2 * np.sin(phb) ** 2)
    r = integrate_2d(f, ((0, math.pi / 2), (0, math.pi / 2)), lo, tol=1e-8, offsets=True)
    oracle = integrate(lambda th, ta, tb: elliptic_kp(np.sin(tb)), 0, math.pi / 2, (SMOOTH, LOG),
                       tol=1e-12, offsets=True)
    assert abs(r.value - oracle.value) <= 1e-8


def test_integrate_2d_dual_form():
    lam = 0.3

    def f(th, ph, tha, thb, pha, phb):
        # (1+l)^2 - (1-l)^2 sin^2 th - 4 l sin^2 ph with both cosines from offsets
        c1, c2 = np.sin(thb), np.sin(phb)
        return 1 / np.sqrt((1 - lam) ** 2 * c1 * c1 + 4 * lam * c2 * c2)
    r = integrate_2d(f, ((0, math.pi / 2), (0, math.pi / 2)), ((SMOOTH, LOG), (SMOOTH, LOG)),
                     tol=1e-8, offsets=True)
    ref = elliptic_k(math.sqrt(0.3)) * elliptic_k(math.sqrt(0.7))
    assert abs(r.value - ref) <= 1e-7 * ref


KNOWN = [
    (lambda x: np.exp(x), 0, 1, (SMOOTH, SMOOTH), math.e - 1),
    (lambda x: np.log(x), 0, 1, (LOG, SMOOTH), -1.0),
    (lambda x: x ** -0.3, 0, 1, (Algebraic(0.3), SMOOTH), 1 / 0.7),
    (lambda x: np.log(x) * np.log(1 - x), 0, 1, (LOG, LOG), 2 - math.pi ** 2 / 6),
    (lambda x: 1 / (1 + x * x), -1, 1, (SMOOTH, SMOOTH), math.pi / 2),
    (lambda x: np.sqrt(x), 0, 1, (Algebraic(0.5), SMOOTH), 2 / 3),
    (lambda x: np.cos(40 * x), 0, 1, (SMOOTH, SMOOTH), math.sin(40) / 40),
    (lambda x: 1 / np.sqrt(1 - x * x), -1, 1, (Algebraic(0.5), Algebraic(0.5)), math.pi),
    (lambda x: x ** 5, -2, 3, (SMOOTH, SMOOTH), (3 ** 6 - 2 ** 6) / 6),
    (lambda x: np.abs(x - 0.3), 0, 1, (SMOOTH, SMOOTH), 0.29),
]


@pytest.mark.parametrize("f, a, b, hints, ref", KNOWN)
@pytest.mark.parametrize("tol", [1e-6, 1e-10])
def test_error_estimate_honesty(f, a, b, hints, ref, tol):
    r = integrate(f, a, b, hints, tol=tol)
    err = abs(r.value - ref)
    assert err <= max(10 * r.err_estimate, 1e-14 * max(1.0, abs(ref)))
    assert err <= tol * 10


# ---------------------------------------------------------------- properties

@settings(max_examples=40, deadline=None)
@given(st.floats(-3, 3), st.floats(-3, 3), st.floats(0.1, 5))
def test_linearity(alpha, beta, w):
    def f(x):
        return np.exp(-w * x * x)

    def g(x):
        return np.cos(w * x) * x

    lhs = integrate(lambda x: alpha * f(x) + beta * g(x), -1, 2, tol=1e-12).value
    rhs = alpha * integrate(f, -1, 2, tol=1e-12).value + beta * integrate(g, -1, 2, tol=1e-12).value
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(alpha) + abs(beta))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.floats(-1, 1), min_size=3, max_size=3), st.floats(0.05, 0.95))
def test_pv_antisymmetry_even_f(c, x):
    def f(xi):
        return c[0] + c[1] * xi * xi + c[2] * np.cos(3 * xi)
    plus = integrate_pv(f, x, -1, 1, 1e-12, tricomi=True).value
    minus = integrate_pv(f, -x, -1, 1, 1e-12, tricomi=True).value
    assert abs(plus + minus) <= 1e-9


SPHERE_FUNCS = [
    lambda X, Y, Z: np.exp(X + 0.5 * Z),
    lambda X, Y, Z: X * X * Z * Z + Y,
    lambda X, Y, Z: 1 / (2 + X * Y - Z),
    lambda X, Y, Z: np.cos(2 * X) * np.sin(Z + Y),
    lambda X, Y, Z: (X - 0.3 * Z) ** 4,
]


@pytest.mark.parametrize("g", SPHERE_FUNCS)
def test_sphere_rotation_invariance(g):
    a = integrate_sphere(g, tol=1e-13).value
    b = integrate_sphere(lambda X, Y, Z: g(Z, Y, X), tol=1e-13).value
    assert abs(a - b) <= 1e-9
