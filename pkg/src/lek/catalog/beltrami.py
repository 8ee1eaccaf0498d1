"""Rotation identities for complete elliptic integrals: kernels in the complementary modulus."""

import math

import numpy as np

from ..quadrature import LOG, SMOOTH, Algebraic, QuadResult, integrate_pv
from ..specfun import elliptic_ep, elliptic_k, elliptic_kp, inverse_modulus
from ._kernels import ec, kc, quad
from .core import IdentityCase

SUITE = "beltrami"
PI = math.pi
CATALAN = 0.91596559417721901505460351493238411
PV_TOL = 1e-11
PV_POINTS = tuple({"x": x} for x in (-0.9, -0.5, 0.0, 0.5, 0.9))


def _scaled(r, c):
    return QuadResult(c * r.value, abs(c) * r.err_estimate, r.evals)


def _kprime_moment(weight):
    """(2/pi) int_0^1 K(sqrt(1 - kappa^2)) weight(kappa) d kappa."""
    return _scaled(quad(lambda x, xa, xb: elliptic_kp(xa) * weight(xa), 0.0, 1.0, (LOG, SMOOTH)),
                   2 / PI)


def _eprime_moment(weight):
    return _scaled(quad(lambda x, xa, xb: elliptic_ep(xa) * weight(xa), 0.0, 1.0, (SMOOTH, SMOOTH)),
                   2 / PI)


def _k(k):
    return elliptic_kp(math.sqrt((1 - k) * (1 + k)))


def _e(k):
    return elliptic_ep(math.sqrt((1 - k) * (1 + k)))


def _eq23(k):
    return _kprime_moment(lambda c: 1 / (1 - k * k * c * c))


def _eq23p(xi):
    s = math.sqrt(1 - xi * xi)
    return _kprime_moment(lambda c: s / (1 - xi * xi + xi * xi * c * c))


def _eq23L(r):
    return _kprime_moment(lambda c: (1 + r) / ((1 + r) ** 2 - 4 * r * c * c))


def _eq23pL(eta):
    return _kprime_moment(lambda c: (1 - eta) / ((1 - eta) ** 2 + 4 * eta * c * c))


def _imag_lhs(xi):
    # K(i xi) both through the complex evaluator and through the rotation integral
    return [complex(elliptic_k(1j * xi)), _kprime_moment(lambda c: 1 / (1 + xi * xi * c * c))]


def _imag_rhs(xi):
    s = math.sqrt(1 + xi * xi)
    return _k(xi / s) / s


def _eq25(k):
    return _eprime_moment(lambda c: 1 / (1 - k * k * c * c))


def _eq25_rhs(k):
    return (_k(k) - _e(k)) / (k * k)


def _eq26(k):
    return _scaled(_eprime_moment(lambda c: 1 / (1 - k * k * c * c) ** 2), 2 * (1 - k * k))


def _eq26p(k):
    return _scaled(_eprime_moment(lambda c: 1 / (1 - k * k + k * k * c * c) ** 2), 2 * (1 - k * k))


def _eq27(xi):
    return _scaled(_eprime_moment(lambda c: 1 / (1 + xi * xi * c * c) ** 2), 2 * (1 + xi * xi))


def _eq27_rhs(xi):
    s = math.sqrt(1 + xi * xi)
    return s * _e(xi / s)


def _chain_k():
    def g(f, hints):
        return quad(f, 0.0, 1.0, hints)

    def w4(x, xa, xb):
        c = xa
        # kappa arccos(kappa)/sqrt(1-kappa^2) with arccos written through the gap to one
        ac = 2 * np.arcsin(np.sqrt(0.5 * xb))
        return elliptic_kp(c) * (c * ac / np.sqrt(xb * (1 + c)) - np.log(2 * c)) * 2 / PI

    def w3(x, xa, xb):
        # xi = sin(t) turns K(xi) xi / ((1 + sqrt(1-xi^2)) sqrt(1-xi^2)) d xi into K(sin t) sin t/(1+cos t) dt
        return kc(np.sin(xb) ** 2) * np.tan(0.5 * x)

    return [
        g(lambda x, xa, xb: elliptic_kp(xa) / (1 + xa), (LOG, SMOOTH)),
        quad(w3, 0.0, 0.5 * PI, (SMOOTH, LOG)),
        g(w4, (LOG, SMOOTH)),
        g(lambda x, xa, xb: kc(xb * (2 - xb)), (SMOOTH, LOG)),
    ]


def _chain_e():
    def w2(x, xa, xb):
        c = xa
        # [-c + (1 + c^2) artanh(c)]/c^3, series near zero to dodge cancellation
        small = c < 0.05
        cs = np.where(small, 0.05, c)
        bs = np.where(small, 0.95, xb)
        big = (-cs + (1 + cs * cs) * 0.5 * np.log((1 + cs) / bs)) / cs ** 3
        c2 = c * c
        ser = 4 / 3 + c2 * (8 / 15 + c2 * (12 / 35 + c2 * (16 / 63 + c2 * (20 / 99 + c2 * 24 / 143))))
        return elliptic_ep(c) * np.where(small, ser, big) * 2 / PI

    return [
        quad(w2, 0.0, 1.0, (SMOOTH, LOG)),
        quad(lambda x, xa, xb: (2 + xa) * elliptic_ep(xa) / (1 + xa) ** 2, 0.0, 1.0, (SMOOTH, SMOOTH)),
        quad(lambda x, xa, xb: ec(xb * (2 - xb)), 0.0, 1.0, (SMOOTH, SMOOTH)),
    ]


def _eq29_lhs(u):
    # k = sqrt(u) sin(theta) removes the inverse square root at k = sqrt(u)
    return quad(lambda t, ta, tb: kc(1 - u * np.sin(t) ** 2) / np.sqrt(1 - u * np.sin(t) ** 2),
                0.0, 0.5 * PI, (SMOOTH, SMOOTH))


def _eq29_rhs(u):
    return quad(lambda t, ta, tb: np.sin(t) * kc(np.sin(tb) ** 2) / np.sqrt(1 - u * np.sin(t) ** 2),
                0.0, 0.5 * PI, (SMOOTH, LOG))


def _eq30_lhs(u):
    # k^2 = u + (1 - u) sin^2(theta): the measure collapses to d theta
    return quad(lambda t, ta, tb: kc((1 - u) * np.sin(tb) ** 2), 0.0, 0.5 * PI, (SMOOTH, LOG))


def _eq30_rhs(u):
    return quad(lambda t, ta, tb: elliptic_kp(np.sin(ta)) / np.sqrt(1 - u * np.sin(t) ** 2),
                0.0, 0.5 * PI, (LOG, SMOOTH))


def _pv(f, x):
    # the K - 2E kernel has zero mean and a ~1e-12 rounding floor near xi = -1
    return integrate_pv(f, x, -1.0, 1.0, PV_TOL, (Algebraic(0.5), SMOOTH), tricomi=True,
                        offsets=True, rtol=0.1 * PV_TOL)


def _eq31_lhs(x):
    # K(sqrt((1 - xi)/2)) has complementary modulus sqrt((1 + xi)/2)
    return _pv(lambda s, sa, sb: elliptic_kp(np.sqrt(0.5 * sa)) / np.sqrt(sa), x)


def _eq31_rhs(x):
    return elliptic_kp(math.sqrt(0.5 * (1 - x))) / math.sqrt(1 + x)


def _eq32_lhs(x):
    def f(s, sa, sb):
        kp = np.sqrt(0.5 * sa)
        return (elliptic_kp(kp) - 2 * elliptic_ep(kp)) / np.sqrt(sa)
    return _pv(f, x)


def _eq32_rhs(x):
    kp = math.sqrt(0.5 * (1 - x))
    return (2 * elliptic_ep(kp) - elliptic_kp(kp)) / math.sqrt(1 + x)


def _unit(lo=0.0, hi=1.0, name="k"):
    return lambda rng: {name: float(rng.uniform(lo, hi))}


def k_beyond_one(t):
    """K(sqrt t) for t > 1 from int_0^1 dtau/(sqrt(1 - tau^2) sqrt(1 - t tau^2)), with
    sqrt(1 - t tau^2) = i sqrt(t tau^2 - 1) past tau = 1/sqrt t.

    Splitting there keeps both pieces real; factoring each radicand through
    the offsets from the split point avoids cancellation.
    """
    r = math.sqrt(t)
    c = 1.0 / r
    re = quad(lambda x, xa, xb: 1 / np.sqrt((1 - x) * (1 + x) * r * xb * (1 + r * x)), 0.0, c)
    im = quad(lambda x, xa, xb: 1 / np.sqrt(xb * (1 + x) * t * xa * (x + c)), c, 1.0)
    return complex(re.value, -im.value)


def _inverse_modulus(t):
    re, im = inverse_modulus(t)
    return complex(re, im)


def cases():
    k01 = "0 < k < 1"
    return [
        IdentityCase("eq23_beltrami", SUITE, "K(k) = (2/pi) int_0^1 K'(kappa)/(1 - k^2 kappa^2) dkappa",
                     k01, _eq23, _k, "tight", sampler=_unit(0.0, 0.999), fixed=({"k": 0.0},)),
        IdentityCase("eq23p_beltrami", SUITE,
                     "K(xi) = (2/pi) int_0^1 sqrt(1-xi^2) K'(kappa)/(1 - xi^2 (1 - kappa^2)) dkappa",
                     "0 < xi < 1", _eq23p, _k_named("xi"), "tight", sampler=_unit(0.001, 0.999, "xi")),
        IdentityCase("eq23L_beltrami", SUITE,
                     "K(r) = (2/pi) int_0^1 (1+r) K'(kappa)/((1+r)^2 - 4 r kappa^2) dkappa",
                     "0 < r < 1", _eq23L, _k_named("r"), "tight", sampler=_unit(0.001, 0.999, "r")),
        IdentityCase("eq23pL_beltrami", SUITE,
                     "K(eta) = (2/pi) int_0^1 (1-eta) K'(kappa)/((1-eta)^2 + 4 eta kappa^2) dkappa",
                     "0 < eta < 1", _eq23pL, _k_named("eta"), "tight",
                     sampler=_unit(0.001, 0.999, "eta")),
        IdentityCase("eq24_imag_modulus", SUITE,
                     "K(i xi) = K(xi/sqrt(1+xi^2))/sqrt(1+xi^2) = (2/pi) int_0^1 K'(kappa)/(1 + xi^2 kappa^2) dkappa",
                     "xi > 0", _imag_lhs, _imag_rhs, "tight", sampler=_unit(0.01, 5.0, "xi")),
        IdentityCase("eq25_ke", SUITE, "(K(k) - E(k))/k^2 = (2/pi) int_0^1 E'(kappa)/(1 - k^2 kappa^2) dkappa",
                     k01, _eq25, _eq25_rhs, "tight", sampler=_unit(0.01, 0.999)),
        IdentityCase("eq26_e", SUITE, "E(k) = (4(1-k^2)/pi) int_0^1 E'(kappa)/(1 - k^2 kappa^2)^2 dkappa",
                     k01, _eq26, _e, "tight", sampler=_unit(0.0, 0.999)),
        IdentityCase("eq26p_e", SUITE,
                     "E(k)/sqrt(1-k^2) = (4(1-k^2)/pi) int_0^1 E'(kappa)/(1 - k^2(1 - kappa^2))^2 dkappa",
                     k01, _eq26p, lambda k: _e(k) / math.sqrt(1 - k * k), "tight",
                     sampler=_unit(0.0, 0.99)),
        IdentityCase("eq27_e_imag", SUITE,
                     "sqrt(1+xi^2) E(xi/sqrt(1+xi^2)) = (4(1+xi^2)/pi) int_0^1 E'(kappa)/(1 + xi^2 kappa^2)^2 dkappa",
                     "xi > 0", _eq27, _eq27_rhs, "tight", sampler=_unit(0.01, 5.0, "xi")),
        IdentityCase("beltrami_chain_k", SUITE,
                     "int_0^1 K = int_0^1 K'(kappa)/(1+kappa) = int_0^1 K(xi) xi d xi/((1+sqrt(1-xi^2)) sqrt(1-xi^2)) = 2 G",
                     "parameter-free", _chain_k, lambda: 2 * CATALAN, "tight"),
        IdentityCase("beltrami_chain_e", SUITE,
                     "int_0^1 E = (2/pi) int E'(kappa)[(1+kappa^2) artanh(kappa) - kappa]/kappa^3 = int (2+kappa) E'/(1+kappa)^2 = G + 1/2",
                     "parameter-free", _chain_e, lambda: CATALAN + 0.5, "tight"),
        IdentityCase("eq29_duality", SUITE,
                     "int_0^sqrt(u) K(k) dk/(sqrt(1-k^2) sqrt(u-k^2)) = int_0^1 k K(k) dk/(sqrt(1-k^2) sqrt(1-u k^2))",
                     "0 < u < 1", _eq29_lhs, _eq29_rhs, "standard", sampler=_unit(0.001, 0.999, "u"),
                     fixed=({"u": 0.5},)),
        IdentityCase("eq30_duality", SUITE,
                     "int_sqrt(u)^1 k K(k) dk/(sqrt(1-k^2) sqrt(k^2-u)) = int_0^1 K'(kappa) dkappa/(sqrt(1-kappa^2) sqrt(1-u kappa^2))",
                     "0 < u < 1", _eq30_lhs, _eq30_rhs, "standard", sampler=_unit(0.001, 0.999, "u")),
        IdentityCase("eq31_pv", SUITE,
                     "PV int_-1^1 K(sqrt((1-xi)/2)) dxi/(pi (x - xi) sqrt(1+xi)) = K(sqrt((1+x)/2))/sqrt(1+x)",
                     "-1 < x < 1", _eq31_lhs, _eq31_rhs, "pv", fixed=PV_POINTS,
                     sampler=_unit(-0.95, 0.95, "x")),
        IdentityCase("eq32_pv", SUITE,
                     "PV int_-1^1 [K - 2E](sqrt((1-xi)/2)) dxi/(pi (x - xi) sqrt(1+xi)) = [2E - K](sqrt((1+x)/2))/sqrt(1+x)",
                     "-1 < x < 1", _eq32_lhs, _eq32_rhs, "pv", fixed=PV_POINTS,
                     sampler=_unit(-0.95, 0.95, "x")),
        IdentityCase("eq33_inverse_modulus", SUITE,
                     "K(sqrt z) = [K(sqrt(1/z)) - i K(sqrt((z-1)/z))]/sqrt z, z > 1",
                     "1 < t < 10", k_beyond_one, _inverse_modulus, "tight",
                     sampler=_unit(1.001, 10.0, "t"), fixed=({"t": 2.0},), componentwise=True),
    ]


def _k_named(name):
    return lambda **p: _k(p[name])
