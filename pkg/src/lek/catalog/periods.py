"""Closed evaluations of integrals of elliptic-integral products: special values of T,
the cubic Wan chain, quadruple products and the zeta representations."""

import math

import numpy as np

from ..specfun import ZETA3, ZETA5, cospi, gamma, polygamma2, sinpi
from .clebsch import richardson, t_direct_result, LIMIT_RADIUS
from ._kernels import ec, kc, landen_pair, legendre_moment, quad
from .core import IdentityCase, degree_sample

SUITE = "periods"
PI = math.pi
SQ2 = math.sqrt(2.0)
SQ3 = math.sqrt(3.0)


def _t01(g):
    """int_0^1 g(t, t, 1 - t) dt with logarithmic hints at both ends."""
    return quad(g, 0.0, 1.0)


def _w_third(p, pb):
    """w = p^3 (2+p)/(1+2p) and 1 - w = (1-p)(1+p)^3/(1+2p)."""
    d = 1 + 2 * p
    return p ** 3 * (2 + p) / d, pb * (1 + p) ** 3 / d


# ---------------------------------------------------------------- T special values

def _eq15():
    return [_t01(lambda t, ta, tb: 2 * kc(tb) * kc(ta)),
            _scaled(PI ** 2 / 4, 0.0, -0.5)]


def _eq16():
    def f(t, ta, tb):
        return 2 * (2 * ec(tb) - kc(tb)) * (2 * ec(ta) - kc(ta))
    return [_t01(f), _scaled(PI ** 2 / 4, 0.0, 0.5)]


def _eq17():
    return [_t01(lambda t, ta, tb: 2 * kc(ta) ** 2 * kc(tb)),
            _scaled(PI ** 3 / 8, -0.5, -0.5)]


def _scaled(c, mu, nu):
    r = t_direct_result(mu, nu, tol=1e-12)
    return type(r)(c * r.value, c * r.err_estimate, r.evals)


def _eq18():
    def f1(p, pa, pb):
        w, w1 = _w_third(p, pb)
        g = pb * (1 + p) * p * (2 + p) / (np.sqrt(3 + 6 * p) * (1 + p + p * p))
        return 13.5 * g * kc(w1) ** 2 * kc(w)

    def f2(p, pa, pb):
        w, w1 = _w_third(p, pb)
        g = pb * (1 + p) * p * (2 + p) / (np.sqrt(1 + 2 * p) * (1 + p + p * p))
        return 4.5 * g * kc(w) ** 2 * kc(w1)

    return [_t01(f1), _t01(f2), _scaled(PI ** 3 / 8, -1 / 3, -1 / 3)]


def _eq19():
    def f1(u, ua, ub):
        a, b = landen_pair(u, ub)
        return 4 / (1 + np.sqrt(u)) ** 1.5 * kc(a) ** 2 * kc(b)

    def f2(t, ta, tb):
        return 4 * SQ2 * tb * kc(tb) ** 2 * kc(ta) / (1 + t) ** 1.5

    def f3(u, ua, ub):
        a, b = landen_pair(u, ub)
        return (2 / (1 + np.sqrt(u))) ** 1.5 * kc(b) ** 2 * kc(a)

    def f4(t, ta, tb):
        return 4 * tb * kc(ta) ** 2 * kc(tb) / (1 + t) ** 1.5

    return [_t01(f1), _t01(f2), _t01(f3), _t01(f4), _scaled(PI ** 3 / 8, -0.25, -0.25)]


def _eq20():
    def fx(x, xa, xb):
        g = xa * xb / (3 + x * x) ** 1.75
        return 27 / (2 * SQ2) * kc(0.5 * xa) ** 2 * kc(0.5 * xb) * g

    def ft(t, ta, tb):
        return 6.75 * t * tb * kc(ta) ** 2 * kc(tb) / (1 - t + t * t) ** 1.75

    return [quad(fx, -1.0, 1.0), _t01(ft), _scaled(PI ** 3 / 8, -1 / 6, -1 / 6)]


def _landen_kk(u, ub):
    a, b = landen_pair(u, ub)
    return kc(b) * kc(a) / (1 + np.sqrt(u))


def _eq21():
    def f(u, ua, ub):
        return 2 * SQ2 * (2 * ec(ub) - kc(ub)) * _landen_kk(u, ub)
    return [_t01(f), _scaled(PI ** 3 / 8, 0.5, -0.75)]


def _eq22():
    def f(u, ua, ub):
        return 2 * SQ2 / 3 * (8 * (1 - 2 * u) * ec(ub) - (5 - 8 * u) * kc(ub)) * _landen_kk(u, ub)
    return [_t01(f), _scaled(PI ** 3 / 8, 1.5, -0.25)]


# ---------------------------------------------------------------- Wan chain

def _wan_members():
    # K(k) = kc(1 - k^2) with 1 - k^2 = (1 - k)(1 + k); K(sqrt(1 - k^2)) = kc(k^2)
    def K(k, kb):
        return kc(kb * (1 + k))

    def Kp(ka):
        return kc(ka * ka)

    return [
        quad(lambda k, ka, kb: Kp(ka) ** 3, 0.0, 1.0),
        quad(lambda k, ka, kb: 10 / 3 * K(k, kb) ** 3, 0.0, 1.0),
        quad(lambda k, ka, kb: 5 * K(k, kb) ** 3 * k, 0.0, 1.0),
        quad(lambda k, ka, kb: 3 * K(k, kb) ** 2 * Kp(ka), 0.0, 1.0),
        quad(lambda k, ka, kb: 2 * K(k, kb) * Kp(ka) ** 2, 0.0, 1.0),
        quad(lambda k, ka, kb: 6 * K(k, kb) ** 2 * Kp(ka) * k, 0.0, 1.0),
    ]


def wan_target():
    return gamma(0.25) ** 8 / (128 * PI ** 2)


# ---------------------------------------------------------------- quadruple products

def xpppp_direct(nu):
    return legendre_moment(nu, lambda x, xa, xb: x, (3, 1))


def xpppp_closed(nu):
    """sin(2 nu pi) cos(nu pi) / ((2 nu + 1)^2 pi), the nu -> -1/2 limit by extrapolation."""
    def f(z):
        return complex(sinpi(2 * z)) * complex(cospi(z)) / ((2 * z + 1) ** 2 * PI)
    nu = complex(nu)
    v = richardson(f, nu) if abs(nu + 0.5) < LIMIT_RADIUS else f(nu)
    return v.real if v.imag == 0 else v


def _half_members():
    def f(t, ta, tb):
        return 32 / PI ** 4 * (1 - 2 * t) * kc(tb) ** 3 * kc(ta)

    def g(t, ta, tb):
        return -32 / PI ** 4 * (1 - 2 * t) * kc(ta) ** 3 * kc(tb)

    return [xpppp_direct(-0.5), _t01(f), _t01(g)]


def _third_members():
    def weight(p, pb):
        q = 1 + p + p * p
        return pb * (1 + p) * p * (2 + p) / (1 + 2 * p) * (1 - 27 * p * p * (1 + p) ** 2 / (2 * q ** 3))

    def f(p, pa, pb):
        w, w1 = _w_third(p, pb)
        return 216 / (SQ3 * PI ** 4) * weight(p, pb) * kc(w1) ** 3 * kc(w)

    def g(p, pa, pb):
        w, w1 = _w_third(p, pb)
        return -72 / (SQ3 * PI ** 4) * weight(p, pb) * kc(w) ** 3 * kc(w1)

    return [xpppp_direct(-1 / 3), _t01(f), _t01(g)]


def _quarter_members():
    def f(u, ua, ub):
        a, b = landen_pair(u, ub)
        return 32 * SQ2 / PI ** 4 * (1 - 2 * u) / (1 + np.sqrt(u)) ** 2 * kc(b) ** 3 * kc(a)

    def g(u, ua, ub):
        a, b = landen_pair(u, ub)
        return -64 * SQ2 / PI ** 4 * (1 - 2 * u) / (1 + np.sqrt(u)) ** 2 * kc(a) ** 3 * kc(b)

    return [xpppp_direct(-0.25), _t01(f), _t01(g)]


def _sixth_members():
    def weight(t, tb):
        return t * tb * (1 + t) * (2 - t) * (1 - 2 * t) / (1 - t + t * t) ** 3

    def f(t, ta, tb):
        return 54 / PI ** 4 * weight(t, tb) * kc(tb) ** 3 * kc(ta)

    def g(t, ta, tb):
        return -54 / PI ** 4 * weight(t, tb) * kc(ta) ** 3 * kc(tb)

    return [xpppp_direct(-1 / 6), _t01(f), _t01(g)]


def xp4_direct(nu):
    return legendre_moment(nu, lambda x, xa, xb: x, (4, 0))


def xp4_closed(nu):
    """2 sin^4(pi z)[psi''(z+1) + psi''(-z) + 28 zeta(3)] / ((2z+1)^2 pi^4) at z -> nu.

    Removable at z = -1/2 and at the integers (where the value is 0).
    """
    nu = complex(nu)

    def f(z):
        z = complex(z)
        s = complex(sinpi(z))
        return (2 * s ** 4 * (complex(polygamma2(z + 1)) + complex(polygamma2(-z)) + 28 * ZETA3)
                / ((2 * z + 1) ** 2 * PI ** 4))

    n = round(nu.real)
    if nu == n:
        return 0.0
    if abs(nu + 0.5) < LIMIT_RADIUS or abs(nu - n) < LIMIT_RADIUS:
        v = richardson(f, nu)
    else:
        v = f(nu)
    return v.real if v.imag == 0 else v


def _zeta5_members():
    def f(t, ta, tb):
        return 8 / 93 * (2 * t - 1) * kc(tb) ** 4
    c = -PI ** 4 / 372
    d = xp4_direct(-0.5)
    return [type(d)(c * d.value, c * d.err_estimate, d.evals), _t01(f), c * xp4_closed(-0.5)]


def _zeta3_members():
    out = []
    for nu, c in ((-1 / 3, -PI ** 4 / 243), (-0.25, -PI ** 4 / 168), (-1 / 6, -2 * PI ** 4 / 189)):
        d = xp4_direct(nu)
        out.append(type(d)(c * d.value, c * d.err_estimate, d.evals))
    return out


def _alg_lhs():
    """2 [int_0^1 ds / (sqrt(1 - s^2) sqrt(1 - s^2/2))]^4, next to the gamma value."""
    inner = quad(lambda s, sa, sb: 1 / np.sqrt(sb * (1 + s) * (1 - 0.5 * s * s)), 0.0, 1.0)
    return [2 * inner.value ** 4, gamma(0.25) ** 8 / (128 * PI ** 2)]


def _alg_rhs():
    """int_0^1 [int_0^1 dt / (sqrt(1 - t^2) sqrt(1 - (1 - k^2) t^2))]^3 dk."""
    def kprime(k):
        # 1 - (1 - k^2) t^2 = (1 - t)(1 + t) + k^2 t^2 keeps every digit near t = 1
        return quad(lambda t, ta, tb: 1 / np.sqrt(tb * (1 + t) * (tb * (1 + t) + k * k * t * t)),
                    0.0, 1.0).value

    def outer(k, ka, kb):
        # below k = 1e-30 the k^2 scale drops under the node floor; that sliver
        # carries less than 1e-24 of the outer integral
        return np.array([kprime(max(v, 1e-30)) for v in np.ravel(ka)]) ** 3
    return quad(outer, 0.0, 1.0, tol=1e-12)


def _nu_any(rng):
    return {"nu": degree_sample(rng, avoid_int=0.0)}


def _const(v):
    return lambda: v


def cases():
    G14 = gamma(0.25)
    return [
        IdentityCase("eq15", SUITE, "(pi^2/4) T_{0,-1/2} = 2 int_0^1 K(sqrt t) K(sqrt(1-t)) dt = pi^3/4",
                     "parameter-free", _eq15, _const(PI ** 3 / 4), "tight"),
        IdentityCase("eq16", SUITE, "(pi^2/4) T_{0,1/2} = 2 int_0^1 [2E-K](sqrt t) [2E-K](sqrt(1-t)) dt = 0",
                     "parameter-free", _eq16, _const(0.0), "standard", atol=1e-8),
        IdentityCase("eq17", SUITE, "(pi^3/8) T_{-1/2,-1/2} = 2 int_0^1 K(sqrt(1-t))^2 K(sqrt t) dt = Gamma(1/4)^8/(192 pi^2)",
                     "parameter-free", _eq17, _const(G14 ** 8 / (192 * PI ** 2)), "standard"),
        IdentityCase("eq18", SUITE, "(pi^3/8) T_{-1/3,-1/3} = 3 sqrt3 Gamma(1/3)^9/(256 pi^2), two p-integral forms",
                     "parameter-free", _eq18,
                     _const(3 * SQ3 * gamma(1 / 3) ** 9 / (256 * PI ** 2)), "pv"),
        IdentityCase("eq19", SUITE, "(pi^3/8) T_{-1/4,-1/4} = [Gamma(1/8) Gamma(3/8)]^2/24, four integral forms",
                     "parameter-free", _eq19,
                     _const((gamma(0.125) * gamma(0.375)) ** 2 / 24), "pv"),
        IdentityCase("eq20", SUITE, "(pi^3/8) T_{-1/6,-1/6} = Gamma(1/4)^4/(8 sqrt(2 sqrt3)), x- and t-forms",
                     "parameter-free", _eq20,
                     _const(G14 ** 4 / (8 * math.sqrt(2 * SQ3))), "pv"),
        IdentityCase("eq21", SUITE, "(pi^3/8) T_{1/2,-3/4} = 2 sqrt2 int_0^1 (2E-K)(sqrt u) K K'/(1+sqrt u) du = sqrt2 pi",
                     "parameter-free", _eq21, _const(SQ2 * PI), "standard"),
        IdentityCase("eq22", SUITE, "(pi^3/8) T_{3/2,-1/4} = -sqrt2 pi/9",
                     "parameter-free", _eq22, _const(-SQ2 * PI / 9), "standard"),
        IdentityCase("eq49_wan_chain", SUITE,
                     "int K'^3 = 10/3 int K^3 = 5 int K^3 k = 3 int K^2 K' = 2 int K K'^2 = 6 int K^2 K' k = Gamma(1/4)^8/(128 pi^2)",
                     "parameter-free", _wan_members, wan_target, "standard"),
        IdentityCase("eq60_alg_id", SUITE,
                     "2 [int_0^1 ds/(sqrt(1-s^2) sqrt(1-s^2/2))]^4 = int_0^1 [int_0^1 dt/(sqrt(1-t^2) sqrt(1-(1-k^2)t^2))]^3 dk",
                     "parameter-free", _alg_lhs, _alg_rhs, "standard"),
        IdentityCase("eq52_xpppp", SUITE, "int_{-1}^1 x P_nu^3(x) P_nu(-x) dx = sin(2 nu pi) cos(nu pi)/((2nu+1)^2 pi)",
                     "nu complex, Re in [-3, 2], |Im| <= 2", xpppp_direct, xpppp_closed, "pv",
                     sampler=_nu_any, atol=1e-9),
        IdentityCase("eq52_half", SUITE, "int x P_{-1/2}^3 P_{-1/2}(-x) dx = -pi/2 and two K-forms",
                     "parameter-free", _half_members, _const(-PI / 2), "pv"),
        IdentityCase("eq52_third", SUITE, "int x P_{-1/3}^3 P_{-1/3}(-x) dx = -9 sqrt3/(4 pi) and two p-forms",
                     "parameter-free", _third_members, _const(-9 * SQ3 / (4 * PI)), "pv"),
        IdentityCase("eq52_quarter", SUITE, "int x P_{-1/4}^3 P_{-1/4}(-x) dx = -2 sqrt2/pi and two u-forms",
                     "parameter-free", _quarter_members, _const(-2 * SQ2 / PI), "pv"),
        IdentityCase("eq52_sixth", SUITE, "int x P_{-1/6}^3 P_{-1/6}(-x) dx = -27/(16 pi) and two t-forms",
                     "parameter-free", _sixth_members, _const(-27 / (16 * PI)), "pv"),
        IdentityCase("eq61_xp4", SUITE,
                     "int x P_nu^4 dx = lim 2 sin^4(pi z)[psi''(z+1) + psi''(-z) + 28 zeta3]/((2z+1)^2 pi^4)",
                     "nu complex, Re in [-3, 2], |Im| <= 2", xp4_direct, xp4_closed, "pv",
                     sampler=_nu_any, atol=1e-9),
        IdentityCase("eq61_zeta5", SUITE, "zeta(5) = -(pi^4/372) int x P_{-1/2}^4 dx = (8/93) int_0^1 (2t-1) K(sqrt t)^4 dt",
                     "parameter-free", _zeta5_members, _const(ZETA5), "pv"),
        IdentityCase("eq61_zeta3", SUITE,
                     "zeta(3) = -(pi^4/243) int x P_{-1/3}^4 = -(pi^4/168) int x P_{-1/4}^4 = -(2 pi^4/189) int x P_{-1/6}^4",
                     "parameter-free", _zeta3_members, _const(ZETA3), "pv"),
    ]
