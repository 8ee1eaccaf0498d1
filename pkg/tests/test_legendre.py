import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lek.errors import AccuracyWarning, DomainError, PoleError
from lek.legendre import (FRACTIONAL_TAGS, fractional_point, p_assoc1, p_fractional_closed, p_nu,
                          p_nu_laplace, p_nu_md, p_nu_offsets, q_nu, q_nu_offsets)
from lek.specfun import bessel_j0, elliptic_e, elliptic_k

# mpmath legenp/legenq (type 2) at 40 digits
P_REF = [(0.3, 0.4, 0.8654749964860446), (-0.5, -0.7, 1.5208951317069896),
         (2.7, 0.95, 0.7625832219679105), (-2.2, -0.3, -0.4623306754846569),
         (0.5 + 1.5j, 0.2, 1.227366845662521 - 2.052249782092596j),
         (-1.3 - 0.8j, -0.9, -1.0168876748924884 - 4.136774924295778j),
         (1.7 + 0.4j, 0.99, 0.977898036490275 - 0.008724521056704229j),
         (7.4, 0.1, -0.04657988105076414), (-0.25, -0.999, 2.647059554134847)]
Q_REF = [(0.3, 0.4, -0.1311321318741082), (-0.5, -0.7, 1.63525673226458),
         (2.7, 0.95, -0.16463786655632023), (-2.2, -0.3, 1.363950906373567),
         (0.5 + 1.5j, 0.2, -3.2359651985148012 - 1.808427520099903j),
         (-1.3 - 0.8j, -0.9, 6.292047637357235 - 1.3465978516208743j),
         (1.7 + 0.4j, 0.99, 1.205715889985388 - 0.19283071153409057j),
         (2.0005, 0.3, -0.5625559447800524), (3, -0.6, -0.48286631833491356)]
# P_nu(-1 + 1e-9), reached through offsets
P_NEAR_M1_REF = [(0.3, -4.717181357934883), (-0.5, 7.69959839156098),
                 (1.2 + 0.5j, 7.266116410867441 + 12.407120401069319j)]


@pytest.mark.parametrize("nu, x, ref", P_REF)
def test_p_nu_reference(nu, x, ref):
    assert abs(p_nu(nu, x) - ref) <= 1e-11 * max(1.0, abs(ref))


@pytest.mark.parametrize("nu, x, ref", Q_REF)
def test_q_nu_reference(nu, x, ref):
    assert abs(q_nu(nu, x) - ref) <= 1e-10 * max(1.0, abs(ref))


@pytest.mark.parametrize("nu, ref", P_NEAR_M1_REF)
def test_p_nu_offsets_near_minus_one(nu, ref):
    assert abs(p_nu_offsets(nu, 1e-9, 2 - 1e-9) - ref) <= 1e-11 * abs(ref)


def test_p_nu_examples():
    assert p_nu(0.37 + 2j, 1.0) == 1.0
    assert p_nu(1, 0.37) == pytest.approx(0.37, rel=1e-15)
    x = math.cos(math.pi / 3)
    assert p_nu(-0.5, x) == pytest.approx(2 / math.pi * elliptic_k(0.5), rel=1e-14)
    with pytest.raises(DomainError):
        p_nu(0.3, -1.0)
    with pytest.warns(AccuracyWarning):
        p_nu(0.3, -1 + 1e-13)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        p_nu(2, -1 + 1e-13)


def test_q_nu_examples():
    assert q_nu(0, 0.5) == pytest.approx(math.atanh(0.5), rel=1e-15)
    assert q_nu(1, 0.0) == pytest.approx(-1.0, rel=1e-15)
    assert q_nu(-0.5, 0.2) == pytest.approx(math.pi / 2 * p_nu(-0.5, -0.2), rel=1e-13)
    with pytest.raises(PoleError):
        q_nu(-2, 0.3)
    with pytest.raises(DomainError):
        q_nu(0.5, 1.0)
    with pytest.raises(DomainError):
        q_nu_offsets(0.5, 0.0, 2.0)


def test_q_integer_path_is_continuous():
    # 1e-3 inside the integer window versus just outside it
    for n in (0, 1, 3):
        for d in (1e-3, -1e-3):
            # quadratic through three formula-path points, extrapolated inward
            t = np.array([1.1, 1.2, 1.3]) * d
            coef = np.polyfit(t, [q_nu(n + v, 0.3) for v in t], 2)
            assert abs(q_nu(n + 0.999 * d, 0.3) - np.polyval(coef, 0.999 * d)) < 1e-10


def test_mehler_dirichlet():
    assert p_nu_md(0, 1.0) == pytest.approx(1.0, rel=1e-13)
    assert p_nu_md(-0.5, math.pi / 2) == pytest.approx(2 / math.pi * elliptic_k(1 / math.sqrt(2)),
                                                       rel=1e-12)
    nu = 0.7 + 0.3j
    assert abs(p_nu_md(nu, 2.0) - p_nu(nu, math.cos(2.0))) <= 1e-9
    with pytest.raises(DomainError):
        p_nu_md(0.5, 0.0)


def test_laplace_integral():
    assert p_nu_laplace(1.7 - 0.3j, 1.0) == pytest.approx(1.0, rel=1e-15)
    assert p_nu_laplace(2, 0.6) == pytest.approx(0.04, rel=1e-12)
    assert abs(p_nu_laplace(-0.25, 0.3) - p_nu(-0.25, 0.3)) <= 1e-10
    with pytest.raises(DomainError):
        p_nu_laplace(0.5, 0.0)


def test_p_assoc1():
    assert abs(p_assoc1(-0.5, 1e-6)) < 1e-6
    k = 1 / math.sqrt(2)
    assert p_assoc1(-0.5, math.pi / 2) == pytest.approx(
        2 / math.pi * (elliptic_e(k) - elliptic_k(k) / 2), rel=1e-13)
    theta, h = math.pi / 3, 1e-5
    x = math.cos(theta)
    fd = (p_nu(-0.25, x + h) - p_nu(-0.25, x - h)) / (2 * h)
    assert abs(p_assoc1(-0.25, theta) + math.sqrt(1 - x * x) * fd) <= 1e-6
    assert p_assoc1(-0.75, theta) == pytest.approx(p_assoc1(-0.25, theta), rel=1e-14)
    with pytest.raises(DomainError):
        p_assoc1(0.3, 1.0)


def test_fractional_examples():
    assert p_fractional_closed("P_half", 0.0) == pytest.approx(1.0, rel=1e-15)
    assert p_fractional_closed("P_sixth_unified", 1.0) == pytest.approx(1.0, rel=1e-15)
    p = 0.4
    x = 1 - 2 * 27 * p ** 2 * (1 + p) ** 2 / (4 * (1 + p + p * p) ** 3)
    assert abs(p_fractional_closed("P_third_a", p) - p_nu(-1 / 3, x)) <= 1e-9
    with pytest.raises(DomainError):
        p_fractional_closed("P_fifth", 0.3)


@pytest.mark.parametrize("tag", FRACTIONAL_TAGS)
def test_fractional_sweeps(tag):
    if tag == "P_sixth_unified":
        grid = np.linspace(-0.98, 1.0, 50)
    elif tag.endswith("_b"):
        grid = np.linspace(0.01, 0.98, 50)
    elif "sixth_" in tag or "third_" in tag:
        grid = np.linspace(0.0, 0.98, 50)
    else:
        grid = np.linspace(0.0, 3.0, 50)
    for v in grid:
        nu, x = fractional_point(tag, v)
        assert abs(p_fractional_closed(tag, v) - p_nu(nu, x)) <= 1e-9, (tag, v)


def test_endpoint_flux():
    for nu in (0.3, -0.5, 1.7, -2.2):
        x, h = -1 + 1e-4, 1e-7
        d = (p_nu(nu, x + h) - p_nu(nu, x - h)) / (2 * h)
        assert abs((1 - x * x) * d - 2 * math.sin(nu * math.pi) / math.pi) <= 1e-2


@pytest.mark.parametrize("nu, s", [(0.8, 1.0), (1.5, 0.5)])
def test_hansen_scaling_limit(nu, s):
    z = 1e-3
    assert abs(p_nu(nu / z, math.cos(s * z)) - bessel_j0(nu * s)) <= 1e-3


# ---------------------------------------------------------------- properties

degree = st.builds(complex, st.floats(-8, 8), st.floats(-4, 4)).filter(lambda z: abs(z) <= 8)
point = st.floats(-0.999, 1.0)


@settings(max_examples=200, deadline=None)
@given(degree, point)
def test_degree_reflection(nu, x):
    a, b = p_nu(nu, x), p_nu(-nu - 1, x)
    assert abs(a - b) <= 1e-10 * (1 + abs(a))


@settings(max_examples=100, deadline=None)
@given(st.builds(complex, st.floats(-3, 3), st.floats(-2, 2)), st.floats(-0.9, 0.95))
def test_three_term_recurrence(nu, x):
    lhs = (nu + 1) * p_nu(nu + 1, x)
    rhs = (2 * nu + 1) * x * p_nu(nu, x) - nu * p_nu(nu - 1, x)
    assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(lhs), abs((2 * nu + 1) * x * p_nu(nu, x)))


@settings(max_examples=60, deadline=None)
@given(st.floats(-3, 3).filter(lambda v: abs(v - round(v)) > 0.05), st.floats(-0.9, 0.9))
def test_q_three_term_recurrence(nu, x):
    lhs = (nu + 1) * q_nu(nu + 1, x)
    rhs = (2 * nu + 1) * x * q_nu(nu, x) - nu * q_nu(nu - 1, x)
    assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(lhs))


@settings(max_examples=60, deadline=None)
@given(st.builds(complex, st.floats(-3, 3), st.floats(-2, 2)), st.floats(-0.9, 0.9))
def test_derivative_relation(nu, x):
    h = 1e-6
    d = (p_nu(nu, x + h) - p_nu(nu, x - h)) / (2 * h)
    rhs = nu * x * p_nu(nu, x) - nu * p_nu(nu - 1, x)
    assert abs((x * x - 1) * d - rhs) <= 1e-6 * max(1.0, abs(rhs))


@settings(max_examples=60, deadline=None)
@given(st.builds(complex, st.floats(-3, 2), st.floats(-2, 2)), st.floats(-0.9, 0.9))
def test_legendre_ode(nu, x):
    h = 1e-4
    f = [p_nu(nu, x + d * h) for d in (-1, 0, 1)]
    d1 = (f[2] - f[0]) / (2 * h)
    d2 = (f[2] - 2 * f[1] + f[0]) / h ** 2
    res = (1 - x * x) * d2 - 2 * x * d1 + nu * (nu + 1) * f[1]
    assert abs(res) <= 1e-5 * max(1.0, abs(nu * (nu + 1) * f[1]))


@settings(max_examples=60, deadline=None)
@given(st.floats(-2.5, 2.5).filter(lambda v: abs(v - round(v)) > 1e-2), st.floats(-0.95, 0.95))
def test_q_definition(nu, x):
    q = math.pi * (math.cos(nu * math.pi) * p_nu(nu, x) - p_nu(nu, -x)) / (2 * math.sin(nu * math.pi))
    assert abs(q_nu(nu, x) - q) <= 1e-10 * max(1.0, abs(q))
