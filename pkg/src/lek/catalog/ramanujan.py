"""Sphere representations of products of K and their one-dimensional shadows."""

import math

import numpy as np

from ..errors import BranchError, DomainError
from ..quadrature import LOG, SMOOTH, QuadResult, integrate_2d, integrate_pv, integrate_sphere
from ..specfun import elliptic_ep, elliptic_kp, inverse_modulus
from ._kernels import kc, landen_pair, quad
from .core import IdentityCase

SUITE = "ramanujan"
PI = math.pi
SPHERE_TOL = 1e-10
PV_TOL = 1e-11
PV_POINTS = tuple({"x": x} for x in (-0.9, -0.5, 0.0, 0.5, 0.9))


def _scaled(r, c):
    return QuadResult(c * r.value, abs(c) * r.err_estimate, r.evals)


def _ksq(t):
    """K(sqrt t) for 0 <= t < 1."""
    return kc(1 - t)


# ---------------------------------------------------------------- sphere forms

def _eq35(s, t):
    def g(X, Y, Z):
        # (1 - s X^2)(1 - t Y^2) - Z^2 rewritten with X^2 + Y^2 + Z^2 = 1
        X2, Y2 = X * X, Y * Y
        return 1 / np.sqrt((1 - s) * X2 + (1 - t) * Y2 + s * t * X2 * Y2)
    return _scaled(integrate_sphere(g, SPHERE_TOL), 0.5 * PI)


def _eq35p(s, t):
    def g(X, Y, Z):
        Y2, Z2 = Y * Y, Z * Z
        return 1 / np.sqrt((1 - s) * Y2 + (1 - t) * Z2 + s * t * Y2 * Z2)
    return _scaled(integrate_sphere(g, SPHERE_TOL, theta_breaks=(0.5 * PI,), phi_breaks=(0.0, PI)),
                   0.5 * PI)


def _kk(s, t):
    return _ksq(s) * _ksq(t)


def _st(rng):
    s, t = (float(v) for v in rng.uniform(0.0, 0.95, 2))
    return {"s": s, "t": t}


def _k_equator(Z):
    """K(sqrt(X^2 + Y^2)) = K(sin theta), written through |Z| = cos theta."""
    return elliptic_kp(np.abs(Z))


def _eq36(t):
    def g(X, Y, Z):
        return 2 * (2 - t) * _k_equator(Z) / ((2 - t) ** 2 - t * t * X * X)
    return integrate_sphere(g, SPHERE_TOL, theta_breaks=(0.5 * PI,))


def _eq36L(t):
    def g(X, Y, Z):
        return (1 + t) * _k_equator(Z) / ((1 + t) ** 2 - 4 * t * X * X)
    return integrate_sphere(g, SPHERE_TOL, theta_breaks=(0.5 * PI,))


def _k_squared(t):
    return _ksq(t) ** 2


def _t_unit(rng):
    return {"t": float(rng.uniform(0.0, 0.95))}


def _eq40_lhs(a):
    def g(X, Y, Z):
        return _k_equator(Z) * np.exp(a * np.abs(X))
    return integrate_sphere(g, SPHERE_TOL, theta_breaks=(0.5 * PI,), phi_breaks=(0.5 * PI, 1.5 * PI))


def _eq40_rhs(a):
    def f(k, ka, kb):
        return np.exp(a * k) * elliptic_kp(np.sqrt(0.5 * kb)) * elliptic_kp(np.sqrt(0.5 * (1 + k)))
    return _scaled(quad(f, 0.0, 1.0, (SMOOTH, LOG)), 2 / PI)


# ---------------------------------------------------------------- one-dimensional shadows

def _duality_members(u):
    """Both sides of the modular duality at parameter u, as theta integrals."""
    left = quad(lambda t, ta, tb: kc(1 - u * np.sin(t) ** 2) / np.sqrt(1 - u * np.sin(t) ** 2),
                0.0, 0.5 * PI, (SMOOTH, SMOOTH))
    right = quad(lambda t, ta, tb: np.sin(t) * kc(np.sin(tb) ** 2) / np.sqrt(1 - u * np.sin(t) ** 2),
                 0.0, 0.5 * PI, (SMOOTH, LOG))
    return [left, right]


def _eq38_rhs(u):
    _, b = landen_pair(u, 1 - u)
    return kc(b) ** 2 / (1 + math.sqrt(u))


def _eq39_lhs(u):
    return _duality_members(1 - u)


def _eq39_rhs(u):
    a, _ = landen_pair(u, 1 - u)
    return 2 * kc(a) ** 2 / (1 + math.sqrt(u))


def _kk_mu(x, xa, xb):
    """K(sqrt mu) K(sqrt(1 - mu)) from both offsets."""
    return kc(xb) * kc(xa)


def _eq41(t):
    return _scaled(quad(lambda m, ma, mb: _kk_mu(m, ma, mb) / (1 - m * t), 0.0, 1.0), 2 / PI)


def _eq41L(t):
    r = math.sqrt(t)
    return _scaled(quad(lambda m, ma, mb: _kk_mu(m, ma, mb) / ((1 + r) ** 2 - m * (1 - r) ** 2),
                        0.0, 1.0), 8 / PI)


def _sqr_comb_lhs(a, b):
    return quad(lambda p, pa, pb: 1 / np.sqrt((1 - a * np.cos(p) ** 2) * (1 - b * np.cos(p) ** 2)),
                0.0, 0.5 * PI, (SMOOTH, SMOOTH))


def _sqr_comb_rhs(a, b):
    return quad(lambda p, pa, pb: 1 / np.sqrt(1 - a - (b - a) * np.cos(p) ** 2),
                0.0, 0.5 * PI, (SMOOTH, SMOOTH))


def kik_lhs(t):
    """int_0^1 K'(kappa) / sqrt((2t-1)^2 - (1 - kappa^2)) d kappa on the footnote branches.

    For 0 < t < 1/2 the radicand kappa^2 - kappa0^2, kappa0^2 = 4t(1-t), is
    negative below kappa0 and the square root is taken with Im >= 0, so that
    piece contributes -i times a real integral. For t < 0 the radicand is
    positive throughout.
    """
    if t < 0:
        g = 4 * t * (t - 1)
        return quad(lambda c, ca, cb: elliptic_kp(ca) / np.sqrt(g + ca * ca), 0.0, 1.0,
                    (LOG, SMOOTH))
    if not 0 < t < 0.5:
        raise DomainError("kik_lhs needs t < 0 or 0 < t < 1/2")
    k0 = 2 * math.sqrt(t * (1 - t))
    if not 0 < k0 < 1:
        raise BranchError("branch point kappa0 left (0, 1)")
    # kappa = kappa0 sin(theta) below the branch point
    im = quad(lambda th, a, b: elliptic_kp(k0 * np.sin(th)), 0.0, 0.5 * PI, (LOG, SMOOTH))
    # kappa^2 = kappa0^2 + (1 - kappa0^2) sin^2(theta) above it; sqrt(1 - kappa0^2) = 1 - 2t
    c0 = 1 - 2 * t

    def re_f(th, a, b):
        kap = np.sqrt(k0 * k0 + c0 * c0 * np.sin(th) ** 2)
        return elliptic_kp(kap) * c0 * np.cos(th) / kap

    re = quad(re_f, 0.0, 0.5 * PI, (SMOOTH, SMOOTH))
    return QuadResult(re.value - 1j * im.value, re.err_estimate + im.err_estimate,
                      re.evals + im.evals)


def kik_rhs(t):
    if 0 < t < 0.5:
        return (_ksq(1 - t) - 1j * _ksq(t)) ** 2 / 2
    if t < 0:
        # K(sqrt(1-t)) past the cut with Im <= 0; K(sqrt t) at an imaginary modulus, real and positive
        re, im = inverse_modulus(1 - t)
        s = math.sqrt(1 - t)
        k_t = elliptic_kp(1 / s) / s
        return (complex(re, im) + 1j * k_t) ** 2 / 2
    raise DomainError("kik_rhs needs t < 0 or 0 < t < 1/2")


def _dual_members(lam):
    """Three one-dimensional integrals equal to K(sqrt lam) K(sqrt(1 - lam))."""
    c = 1 - 2 * lam
    u = c * c
    # k^2 = u + (1 - u) sin^2 theta, 1 - k^2 = (1 - u) cos^2 theta
    m1 = quad(lambda t, ta, tb: kc((1 - u) * np.sin(tb) ** 2), 0.0, 0.5 * PI, (SMOOTH, LOG))
    d = (1 - lam) / (1 + lam)

    def f3(t, ta, tb):
        mc = (1 - d * d) * np.sin(tb) ** 2
        return kc(mc) / np.sqrt(1 - mc)

    m3 = _scaled(quad(f3, 0.0, 0.5 * PI, (SMOOTH, LOG)), 1 / (1 + lam))
    m2 = quad(lambda t, ta, tb: elliptic_kp(np.sin(tb)) / np.sqrt(1 - u * np.cos(t) ** 2),
              0.0, 0.5 * PI, (SMOOTH, LOG))
    return [m1, m2, m3]


def _dual_rhs(lam):
    return _ksq(lam) * _ksq(1 - lam)


def _corner(p, q):
    """int_0^{pi/2} int_0^{pi/2} d theta d phi / sqrt(p cos^2 theta + q cos^2 phi).

    With a, b the distances to the singular corner, polar coordinates
    split the square into two triangles, and r = R(psi) v maps each onto a
    rectangle; the Jacobian r cancels the 1/r blow-up (a Duffy transform).
    """
    h = 0.5 * PI

    def tri(first):
        def f(psi, v):
            c, s = np.cos(psi), np.sin(psi)
            R = h / c
            r = R * v
            a, b = (r * c, r * s) if first else (r * s, r * c)
            return R * r / np.sqrt(p * np.sin(a) ** 2 + q * np.sin(b) ** 2)
        return integrate_2d(f, ((0.0, 0.25 * PI), (0.0, 1.0)), tol=1e-11)

    return tri(True) + tri(False)


def _eq45p(lam):
    return _corner((1 - lam) ** 2, 4 * lam)


def _eq45ps(u):
    return _corner(u, 1 - u)


def _eq45ps_rhs(u):
    a, b = landen_pair(u, 1 - u)
    return 2 / (1 + math.sqrt(u)) * kc(a) * kc(b)


# ---------------------------------------------------------------- principal values

def _pv(f, x):
    return integrate_pv(f, x, -1.0, 1.0, PV_TOL, (LOG, LOG), tricomi=True, offsets=True,
                        rtol=0.1 * PV_TOL)


def _halves(xa, xb):
    """Complementary moduli of sqrt((1 - xi)/2) and sqrt((1 + xi)/2)."""
    return np.sqrt(0.5 * xa), np.sqrt(0.5 * xb)


def _kk_xi(x, xa, xb):
    A, B = _halves(xa, xb)
    return elliptic_kp(A) * elliptic_kp(B)


def _k_plus_minus(x):
    A, B = _halves(1 + x, 1 - x)
    return elliptic_kp(B), elliptic_kp(A)  # K(sqrt((1+x)/2)), K(sqrt((1-x)/2))


def _eq46_lhs(x):
    return _pv(lambda s, sa, sb: 2 * _kk_xi(s, sa, sb), x)


def _eq46_rhs(x):
    kp_, km = _k_plus_minus(x)
    return kp_ ** 2 - km ** 2


def _eq46w_lhs(x):
    return _pv(lambda s, sa, sb: 2 * sa * _kk_xi(s, sa, sb), x)


def _eq46w_rhs(x):
    return (1 + x) * _eq46_rhs(x) - PI ** 2 / 2


def _eq46w2_lhs(x):
    return _pv(lambda s, sa, sb: 2 * sa * sb * _kk_xi(s, sa, sb), x)


def _eq46w2_rhs(x):
    return (1 - x) * (1 + x) * _eq46_rhs(x) + PI ** 2 * x / 2


def _eq47_lhs(x):
    def f(s, sa, sb):
        A, B = _halves(sa, sb)
        kA, kB = elliptic_kp(A), elliptic_kp(B)
        return kA * kB + kA * elliptic_ep(B) - kB * elliptic_ep(A)
    return _pv(f, x)


def _eq47_rhs(x):
    A, B = _halves(1 + x, 1 - x)
    kA, kB = elliptic_kp(A), elliptic_kp(B)
    eA, eB = elliptic_ep(A), elliptic_ep(B)
    # A, B are the complements of sqrt((1+x)/2), sqrt((1-x)/2): kp(A) = K(sqrt((1-x)/2))
    return -kA ** 2 + kA * eA + kB * eB


def _u(rng, lo=0.001, hi=0.999, name="u"):
    return {name: float(rng.uniform(lo, hi))}


def cases():
    sph = ("s, t in [0, 0.95)")
    return [
        IdentityCase("eq35_sphere", SUITE, "K(sqrt s) K(sqrt t) = (1/8) int_S2 d sigma / sqrt((1 - s X^2)(1 - t Y^2) - Z^2)",
                     sph, _eq35, _kk, "standard", sampler=_st, fixed=({"s": 0.0, "t": 0.0},)),
        IdentityCase("eq35p_sphere", SUITE, "K(sqrt s) K(sqrt t) = (1/8) int_S2 d sigma / sqrt((1 - s Y^2)(1 - t Z^2) - X^2)",
                     sph, _eq35p, _kk, "standard", sampler=_st),
        IdentityCase("eq36_sphere", SUITE, "K(sqrt t)^2 = int_S2 2(2-t) K(sqrt(X^2+Y^2)) / ((2-t)^2 - t^2 X^2) d sigma/4pi",
                     "t in [0, 0.95)", _eq36, _k_squared, "standard", sampler=_t_unit),
        IdentityCase("eq36L_sphere", SUITE, "K(sqrt t)^2 = int_S2 (1+t) K(sqrt(X^2+Y^2)) / ((1+t)^2 - 4 t X^2) d sigma/4pi",
                     "t in [0, 0.95)", _eq36L, _k_squared, "standard", sampler=_t_unit),
        IdentityCase("eq38_dual", SUITE,
                     "int_0^sqrt(u) K dk/(sqrt(1-k^2) sqrt(u-k^2)) = int_0^1 k K dk/(sqrt(1-k^2) sqrt(1-k^2 u)) = K(sqrt(2 sqrt u/(1+sqrt u)))^2/(1+sqrt u)",
                     "0 < u < 1", _duality_members, _eq38_rhs, "tight", sampler=_u),
        IdentityCase("eq39_dual", SUITE,
                     "the same pair at 1-u = 2 K(sqrt((1-sqrt u)/(1+sqrt u)))^2/(1+sqrt u)",
                     "0 < u < 1", _eq39_lhs, _eq39_rhs, "tight", sampler=_u),
        IdentityCase("eq40_sphere_kk", SUITE,
                     "int_S2 K(sqrt(X^2+Y^2)) f(|X|) d sigma/4pi = (2/pi) int_0^1 f(k) K(sqrt((1+k)/2)) K(sqrt((1-k)/2)) dk, f(k) = exp(a k)",
                     "a in [-2, 2]", _eq40_lhs, _eq40_rhs, "standard",
                     sampler=lambda rng: {"a": float(rng.uniform(-2, 2))}, fixed=({"a": 0.0},)),
        IdentityCase("eq41_kk", SUITE, "K(sqrt t)^2 = (2/pi) int_0^1 K(sqrt mu) K(sqrt(1-mu)) / (1 - mu t) d mu",
                     "0 < t < 1", _eq41, _k_squared, "tight", sampler=lambda r: _u(r, 0.0, 0.99, "t")),
        IdentityCase("eq41L_kk", SUITE,
                     "K(sqrt(1-t))^2 = (8/pi) int_0^1 K(sqrt mu) K(sqrt(1-mu)) / ((1+sqrt t)^2 - mu (1-sqrt t)^2) d mu",
                     "0 < t < 1", _eq41L, lambda t: _k_squared(1 - t), "tight",
                     sampler=lambda r: _u(r, 0.001, 0.999, "t")),
        IdentityCase("eq43_sqr_comb", SUITE,
                     "int_0^{pi/2} d phi/(sqrt(1 - a cos^2 phi) sqrt(1 - b cos^2 phi)) = int_0^{pi/2} d psi/sqrt(1 - a - (b-a) cos^2 psi)",
                     "a, b in (0, 1)", _sqr_comb_lhs, _sqr_comb_rhs, "tight",
                     sampler=lambda rng: {"a": float(rng.uniform(0, 1)), "b": float(rng.uniform(0, 1))}),
        IdentityCase("eq44p_kik", SUITE,
                     "int_0^1 K'(kappa)/sqrt((2t-1)^2 - (1-kappa^2)) dkappa = [K(sqrt(1-t)) - i K(sqrt t)]^2/2, Im sqrt >= 0",
                     "0 < t < 1/2", kik_lhs, kik_rhs, "standard", componentwise=True,
                     sampler=lambda r: _u(r, 0.002, 0.498, "t")),
        IdentityCase("eq44pp_kik", SUITE,
                     "int_0^1 K'(kappa)/sqrt((2t-1)^2 - (1-kappa^2)) dkappa = [K(sqrt(1-t)) + i K(sqrt t)]^2/2, Im K(sqrt(1-t)) <= 0",
                     "t < 0", kik_lhs, kik_rhs, "standard", componentwise=True, atol=1e-12,
                     sampler=lambda r: _u(r, -5.0, -0.001, "t")),
        IdentityCase("eq45_dual_forms", SUITE,
                     "int_{1-2l}^1 k K dk/(sqrt(1-k^2) sqrt(k^2-(1-2l)^2)) = K(sqrt l) K(sqrt(1-l)) = int_{(1-l)/(1+l)}^1 K dk/(sqrt(1-k^2) sqrt((1+l)^2 k^2 - (1-l)^2))",
                     "0 < lambda <= 1/2", _dual_members, _dual_rhs, "tight",
                     sampler=lambda r: _u(r, 0.001, 0.5, "lam"), fixed=({"lam": 0.3},)),
        IdentityCase("eq45p_corner", SUITE,
                     "K(sqrt l) K(sqrt(1-l)) = int_0^{pi/2} int_0^{pi/2} d theta d phi/sqrt((1+l)^2 - (1-l)^2 sin^2 theta - 4 l sin^2 phi)",
                     "0 < lambda <= 1/2", _eq45p, _dual_rhs, "standard",
                     sampler=lambda r: _u(r, 0.01, 0.5, "lam")),
        IdentityCase("eq45ps_corner", SUITE,
                     "int_0^{pi/2} int_0^{pi/2} d theta d phi/sqrt(1 - u sin^2 theta - (1-u) sin^2 phi) = 2/(1+sqrt u) K(sqrt((1-sqrt u)/(1+sqrt u))) K(sqrt(2 sqrt u/(1+sqrt u)))",
                     "0 < u < 1", _eq45ps, _eq45ps_rhs, "standard", sampler=lambda r: _u(r, 0.01, 0.99)),
        IdentityCase("eq46_pv", SUITE,
                     "PV int K(sqrt((1+xi)/2)) K(sqrt((1-xi)/2)) 2 dxi/(pi (x-xi)) = K(sqrt((1+x)/2))^2 - K(sqrt((1-x)/2))^2",
                     "-1 < x < 1", _eq46_lhs, _eq46_rhs, "pv", fixed=PV_POINTS,
                     sampler=lambda r: _u(r, -0.95, 0.95, "x"), atol=1e-9),
        IdentityCase("eq46_weighted", SUITE,
                     "PV int K K 2(1+xi) dxi/(pi (x-xi)) = (1+x)[K(sqrt((1+x)/2))^2 - K(sqrt((1-x)/2))^2] - pi^2/2",
                     "-1 < x < 1", _eq46w_lhs, _eq46w_rhs, "pv", fixed=PV_POINTS,
                     sampler=lambda r: _u(r, -0.95, 0.95, "x")),
        IdentityCase("eq46_weighted2", SUITE,
                     "PV int K K 2(1-xi^2) dxi/(pi (x-xi)) = (1-x^2)[K(sqrt((1+x)/2))^2 - K(sqrt((1-x)/2))^2] + pi^2 x/2",
                     "-1 < x < 1", _eq46w2_lhs, _eq46w2_rhs, "pv", fixed=PV_POINTS,
                     sampler=lambda r: _u(r, -0.95, 0.95, "x"), atol=1e-9),
        IdentityCase("eq47_pv", SUITE,
                     "PV int [K+K- + K- E+ - K+ E-] dxi/(pi (x-xi)) = -K(sqrt((1-x)/2))^2 + K E(sqrt((1-x)/2)) + K E(sqrt((1+x)/2))",
                     "-1 < x < 1", _eq47_lhs, _eq47_rhs, "pv", fixed=PV_POINTS,
                     sampler=lambda r: _u(r, -0.95, 0.95, "x")),
    ]
