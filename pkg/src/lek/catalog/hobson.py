"""Azimuthal coupling of Legendre functions and its elliptic specializations."""

import math

import numpy as np

from ..errors import ConvergenceError
from ..legendre import p_assoc1, p_nu, p_nu_offsets
from ..quadrature import LOG, SMOOTH, QuadResult
from ..specfun import bessel_j0, elliptic_kp
from ._kernels import kc, landen_pair, quad
from .core import IdentityCase, degree_sample

SUITE = "hobson"
PI = math.pi
BOUNDARY_MARGIN = 1e-3


def _offsets_rotated(t1, t2, phi):
    """1 + cos(Theta) and 1 - cos(Theta) for cos(Theta) = c1 c2 + s1 s2 cos(phi), cancellation-free."""
    s12 = math.sin(t1) * math.sin(t2)
    xa = 2 * math.cos(0.5 * (t1 + t2)) ** 2 + 2 * s12 * np.cos(0.5 * phi) ** 2
    xb = 2 * math.sin(0.5 * (t1 - t2)) ** 2 + 2 * s12 * np.sin(0.5 * phi) ** 2
    return xa, xb


def periodic_mean(g, tol=1e-14, n0=64, n_max=1 << 17):
    """(1/2pi) int_0^2pi g(phi) dphi for a smooth periodic g by the trapezoid rule.

    The node count doubles (reusing old nodes) until successive means agree.
    """
    n = n0
    phi = 2 * PI * np.arange(n) / n
    total = np.sum(g(phi))
    prev = total / n
    evals = n
    while n < n_max:
        new = 2 * PI * (np.arange(n) + 0.5) / n
        total = total + np.sum(g(new))
        evals += n
        n *= 2
        cur = total / n
        if abs(cur - prev) <= tol * max(1.0, abs(cur)):
            return QuadResult(cur, abs(cur - prev), evals)
        prev = cur
    raise ConvergenceError("trapezoid mean did not settle within the node cap")


def hobson_lhs(nu, theta1, theta2, m=0):
    nu = complex(nu)

    def g(phi):
        xa, xb = _offsets_rotated(theta1, theta2, phi)
        v = p_nu_offsets(nu, xa, xb)
        return v * np.cos(m * phi) if m else v

    return periodic_mean(g)


def hobson_rhs(nu, theta1, theta2):
    c1, c2 = math.cos(theta1), math.cos(theta2)
    if theta1 + theta2 <= PI:
        return p_nu(nu, c1) * p_nu(nu, c2)
    return p_nu(nu, -c1) * p_nu(nu, -c2)


def _hobson_sampler(rng):
    nu = degree_sample(rng, re=(-3.0, 2.0))
    while True:
        t1, t2 = (float(v) for v in rng.uniform(0.0, PI, 2))
        if abs(t1 + t2 - PI) >= BOUNDARY_MARGIN:
            return {"nu": nu, "theta1": t1, "theta2": t2}


def _boundary_lhs(nu, theta1):
    """Mean over phi with theta2 = pi - theta1: the rotated argument reaches -1 at phi = pi."""
    nu = complex(nu)
    s = math.sin(theta1) ** 2
    d = math.sin(theta1 - 0.5 * PI) ** 2 * 2

    def f(phi, pa, pb):
        # 1 + cos(Theta) = 2 s cos^2(phi/2), cos(phi/2) = sin(pb/2)
        xa = 2 * s * np.sin(0.5 * pb) ** 2
        xb = d + 2 * s * np.sin(0.5 * phi) ** 2
        return p_nu_offsets(nu, xa, xb) / PI

    return quad(f, 0.0, PI, (SMOOTH, LOG))


def _boundary_branches(nu, theta1):
    t2 = PI - theta1
    return [p_nu(nu, math.cos(theta1)) * p_nu(nu, math.cos(t2)),
            p_nu(nu, -math.cos(theta1)) * p_nu(nu, -math.cos(t2))]


def _assoc_lhs(nu, theta1, theta2):
    nu = complex(nu)
    r = hobson_lhs(nu, theta1, theta2, m=1)
    c = nu * (nu + 1)
    return QuadResult(c * r.value, abs(c) * r.err_estimate, r.evals)


def _assoc_rhs(nu, theta1, theta2):
    if theta1 + theta2 <= PI:
        return p_assoc1(nu, theta1) * p_assoc1(nu, theta2)
    return p_assoc1(nu, PI - theta1) * p_assoc1(nu, PI - theta2)


def _assoc_sampler(rng):
    nu = float(rng.choice([-0.5, -0.25, -0.75]))
    while True:
        t1, t2 = (float(v) for v in rng.uniform(0.02, PI - 0.02, 2))
        if abs(t1 + t2 - PI) >= BOUNDARY_MARGIN:
            return {"nu": nu, "theta1": t1, "theta2": t2}


# ---------------------------------------------------------------- elliptic forms

def _k_sin_half(xa, xb):
    """K(sin(Theta/2)) from 1 +- cos(Theta): the complementary parameter is (1 + cos)/2."""
    return kc(0.5 * xa)


def _eq7_lhs(theta1, theta2):
    def g(phi):
        xa, xb = _offsets_rotated(theta1, theta2, phi)
        return 0.5 * PI * _k_sin_half(xa, xb)
    return periodic_mean(g)


def _eq7_rhs(theta1, theta2):
    if theta1 + theta2 <= PI:
        return elliptic_kp(math.cos(0.5 * theta1)) * elliptic_kp(math.cos(0.5 * theta2))
    return elliptic_kp(math.sin(0.5 * theta1)) * elliptic_kp(math.sin(0.5 * theta2))


def _p_quarter_k(xa, xb):
    """K(sqrt(2s/(1+s))) / sqrt(1+s) with s = sin(Theta/2) = sqrt(xb/2)."""
    s = np.sqrt(0.5 * xb)
    _, mc = landen_pair(s * s, 0.5 * xa)
    return kc(mc) / np.sqrt(1 + s)


def _eq8_lhs(theta1, theta2):
    def g(phi):
        xa, xb = _offsets_rotated(theta1, theta2, phi)
        return 0.5 * PI * _p_quarter_k(xa, xb)
    return periodic_mean(g)


def _eq8_rhs(theta1, theta2):
    if theta1 + theta2 <= PI:
        c = [(1 - math.cos(t), 1 + math.cos(t)) for t in (theta1, theta2)]
    else:
        c = [(1 + math.cos(t), 1 - math.cos(t)) for t in (theta1, theta2)]
    return _p_quarter_k(c[0][1], c[0][0]) * _p_quarter_k(c[1][1], c[1][0])


def _angles(rng, lo=0.0, hi=PI):
    while True:
        t1, t2 = (float(v) for v in rng.uniform(lo, hi, 2))
        if abs(t1 + t2 - PI) >= BOUNDARY_MARGIN:
            return {"theta1": t1, "theta2": t2}


def _eq7d_lhs(theta):
    st2 = math.sin(theta) ** 2

    def f(phi, pa, pb):
        # 1 - sin^2(theta) cos^2(phi) = cos^2(theta) + sin^2(theta) sin^2(phi)
        return kc(math.cos(theta) ** 2 + st2 * np.sin(pa) ** 2)
    return quad(f, 0.0, 0.5 * PI, (LOG, SMOOTH))


def _eq7d_rhs(theta):
    return elliptic_kp(math.cos(0.5 * theta)) ** 2


def _eq7dd_lhs(theta):
    st2 = math.sin(theta) ** 2

    def f(phi, pa, pb):
        return kc(st2 * np.sin(pb) ** 2)
    return quad(f, 0.0, 0.5 * PI, (SMOOTH, LOG))


def _eq7dd_rhs(theta):
    return elliptic_kp(math.cos(0.5 * theta)) * elliptic_kp(math.sin(0.5 * theta))


def _eq8d_lhs(u):
    rho = math.sqrt(u * (1 - u))
    gap = (math.sqrt(1 - u) - math.sqrt(u)) ** 2  # 1 - 2 rho

    def f(phi, pa, pb):
        c = np.cos(phi)
        den = 1 + 2 * rho * c
        mc = (gap + 4 * rho * np.sin(0.5 * pa) ** 2) / den
        return kc(mc) / np.sqrt(den)
    return quad(f, 0.0, 0.5 * PI, (LOG, SMOOTH))


def _eq8d_rhs(u):
    a, b = landen_pair(u, 1 - u)
    return kc(b) ** 2 / (1 + math.sqrt(u))


def _eq8dd_lhs(u):
    q = 4 * u * (1 - u)

    def f(phi, pa, pb):
        c2 = np.sin(pb) ** 2
        R = np.sqrt(1 - q * c2)
        mc = q * c2 / (1 + R) ** 2  # (1 - R)/(1 + R)
        return kc(mc) / np.sqrt(1 + R)
    return quad(f, 0.0, 0.5 * PI, (SMOOTH, LOG))


def _eq8dd_rhs(u):
    a, b = landen_pair(u, 1 - u)
    return math.sqrt(2) / (1 + math.sqrt(u)) * kc(b) * kc(a)


def _eq9_prod(u):
    a, b = landen_pair(u, 1 - u)
    return kc(a) * kc(b) / (1 + math.sqrt(u))


def _eq9p_lhs(t):
    return 0.5 * (1 + t) * elliptic_kp(math.sqrt(t)) * elliptic_kp(math.sqrt(1 - t))


def _eq9p_rhs(t):
    r = math.sqrt(t)
    k = (1 - r) / (1 + r)
    kp = 2 * t ** 0.25 / (1 + r)
    return (1 + t) / (1 + r) ** 2 * elliptic_kp(kp) * elliptic_kp(k)


# ---------------------------------------------------------------- limits and Bessel analogues

def _flux_lhs(nu):
    """(1 - x^2) P_nu'(x) = (nu + 1)[x P_nu(x) - P_{nu+1}(x)] at 1 + x = 1e-13."""
    nu = complex(nu)
    xa = 1e-13
    xb = 2 - xa
    x = xa - 1
    return (nu + 1) * (x * p_nu_offsets(nu, xa, xb) - p_nu_offsets(nu + 1, xa, xb))


def _flux_rhs(nu):
    return 2 * np.sin(complex(nu) * PI) / PI


def _hansen_lhs(x):
    nu = 4000.5
    return p_nu(nu, math.cos(x / (nu + 0.5)))


def _hansen_rhs(x):
    return bessel_j0(x)


def _sonine_lhs(s, t):
    def g(phi):
        return bessel_j0(np.sqrt(s * s + t * t - 2 * s * t * np.cos(phi)))
    return periodic_mean(g)


def _sonine_rhs(s, t):
    return bessel_j0(s) * bessel_j0(t)


def cases():
    return [
        IdentityCase(
            "eq6_hobson", SUITE,
            "(1/2pi) int_0^2pi P_nu(cos t1 cos t2 + sin t1 sin t2 cos phi) dphi = P_nu(cos t1) P_nu(cos t2), t1+t2 <= pi; P_nu(-cos t1) P_nu(-cos t2) otherwise",
            "nu complex, theta1, theta2 in [0, pi), |theta1 + theta2 - pi| >= 1e-3",
            hobson_lhs, hobson_rhs, "tight", sampler=_hobson_sampler, atol=1e-12,
            fixed=({"nu": 0.3, "theta1": 1.1, "theta2": 0.0},)),
        IdentityCase(
            "eq6_boundary", SUITE, "both coupling branches agree with the mean on theta1 + theta2 = pi",
            "nu complex, theta1 in (0.05, pi - 0.05)",
            lambda nu, theta1: [_boundary_lhs(nu, theta1), _boundary_branches(nu, theta1)[1]],
            lambda nu, theta1: _boundary_branches(nu, theta1)[0], "pv",
            sampler=lambda rng: {"nu": degree_sample(rng), "theta1": float(rng.uniform(0.05, PI - 0.05))}),
        IdentityCase(
            "eq6m_hobson", SUITE,
            "(1/2pi) Gamma(nu+2)/Gamma(nu) int P_nu(cos Theta) cos(phi) dphi = P^1_nu(cos t1) P^1_nu(cos t2)",
            "nu in {-1/2, -1/4, -3/4}, theta1, theta2 in (0, pi)", _assoc_lhs, _assoc_rhs,
            "tight", sampler=_assoc_sampler, atol=1e-12),
        IdentityCase(
            "eq7_hobson", SUITE, "(1/4) int_0^2pi K(sin(Theta/2)) dphi = K(sin t1/2) K(sin t2/2), t1+t2 <= pi; K(cos t1/2) K(cos t2/2) otherwise",
            "theta1, theta2 in [0, pi)", _eq7_lhs, _eq7_rhs, "tight", sampler=_angles),
        IdentityCase(
            "eq7_dagger", SUITE, "K(sin(theta/2))^2 = int_0^{pi/2} K(sin theta cos phi) dphi",
            "theta in [0, pi/2]", _eq7d_lhs, _eq7d_rhs, "tight",
            sampler=lambda rng: {"theta": float(rng.uniform(0.0, 0.5 * PI))},
            fixed=({"theta": PI / 3},)),
        IdentityCase(
            "eq7_ddagger", SUITE, "K(sin(theta/2)) K(cos(theta/2)) = int_0^{pi/2} K(sqrt(1 - sin^2 theta cos^2 phi)) dphi",
            "theta in (0, pi/2]", _eq7dd_lhs, _eq7dd_rhs, "tight",
            sampler=lambda rng: {"theta": float(rng.uniform(0.02, 0.5 * PI))}),
        IdentityCase(
            "eq8_hobson", SUITE, "(1/4) int_0^2pi K(sqrt(2s/(1+s)))/sqrt(1+s) dphi, s = sin(Theta/2), factorizes",
            "theta1, theta2 in [0, pi)", _eq8_lhs, _eq8_rhs, "tight", sampler=_angles),
        IdentityCase(
            "eq8_dagger", SUITE,
            "K(sqrt(2 sqrt u/(1+sqrt u)))^2/(1+sqrt u) = int_0^{pi/2} K(sqrt(4 r cos phi/(1+2r cos phi)))/sqrt(1+2r cos phi) dphi, r = sqrt(u(1-u))",
            "u in [0, 1/2]", _eq8d_lhs, _eq8d_rhs, "tight",
            sampler=lambda rng: {"u": float(rng.uniform(0.0, 0.5))}, fixed=({"u": 0.3},)),
        IdentityCase(
            "eq8_ddagger", SUITE,
            "sqrt2/(1+sqrt u) K(sqrt(2 sqrt u/(1+sqrt u))) K(sqrt((1-sqrt u)/(1+sqrt u))) = int_0^{pi/2} K(sqrt(2R/(1+R)))/sqrt(1+R) dphi",
            "u in (0, 1)", _eq8dd_lhs, _eq8dd_rhs, "tight",
            sampler=lambda rng: {"u": float(rng.uniform(0.01, 0.99))}),
        IdentityCase(
            "eq9_symmetry", SUITE, "K(sqrt((1-sqrt u)/(1+sqrt u))) K(sqrt(2 sqrt u/(1+sqrt u)))/(1+sqrt u) is invariant under u -> 1-u",
            "u in (0, 1)", _eq9_prod, lambda u: _eq9_prod(1 - u), "tight",
            sampler=lambda rng: {"u": float(rng.uniform(0.001, 0.999))}, atol=0.0),
        IdentityCase(
            "eq9p_symmetry", SUITE,
            "(1+t)/2 K(sqrt(1-t)) K(sqrt t) = (1+t)/(1+sqrt t)^2 K((1-sqrt t)/(1+sqrt t)) K(2 t^(1/4)/(1+sqrt t))",
            "t in (0, 1)", _eq9p_lhs, _eq9p_rhs, "tight",
            sampler=lambda rng: {"t": float(rng.uniform(0.001, 0.999))}, atol=0.0),
        IdentityCase(
            "endpoint_flux", SUITE, "(1 - x^2) P_nu'(x) -> 2 sin(nu pi)/pi as x -> -1",
            "nu complex", _flux_lhs, _flux_rhs, "pv",
            sampler=lambda rng: {"nu": degree_sample(rng)}, atol=1e-9),
        IdentityCase(
            "hansen_limit", SUITE, "P_nu(cos(x/(nu+1/2))) -> J0(x) as nu -> infinity",
            "x in [0, 10], nu = 4000.5", _hansen_lhs, _hansen_rhs, "pv",
            sampler=lambda rng: {"x": float(rng.uniform(0.0, 10.0))}, atol=2e-6),
        IdentityCase(
            "sonine_gegenbauer", SUITE, "(1/2pi) int J0(sqrt(s^2 + t^2 - 2 s t cos phi)) dphi = J0(s) J0(t)",
            "s, t in [0, 10]", _sonine_lhs, _sonine_rhs, "tight",
            sampler=lambda rng: {"s": float(rng.uniform(0, 10)), "t": float(rng.uniform(0, 10))},
            atol=1e-12),
    ]
