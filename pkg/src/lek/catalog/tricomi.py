"""Finite Hilbert (Tricomi) transform identities.

T f(x) = PV int_{-1}^1 f(xi) dxi / (pi (x - xi)). Integrands here take the
offset triple (xi, 1 + xi, 1 - xi) throughout, so logarithmic endpoint
behaviour of P_nu is resolved without cancellation.
"""

import math

import numpy as np

from ..errors import DomainError
from ..legendre import p_nu_offsets, q_nu_offsets
from ..quadrature import LOG, SMOOTH, Algebraic, integrate, integrate_pv
from ..specfun import elliptic_ep, elliptic_kp, rgamma, sinpi
from ._kernels import quad
from .core import IdentityCase, degree_sample

SUITE = "tricomi"
PV_TOL = 1e-11

# A sqrt-type end (1 - xi^2)^(1/2) is made smooth by the same u^2 map that
# the algebraic hint applies to (x - a)^(-1/2).
SQRT_END = Algebraic(0.5)


def tricomi_transform(f, x, *, hints=(LOG, LOG), tol=PV_TOL):
    """(T f)(x) for f(xi, 1 + xi, 1 - xi) on (-1, 1); returns the value."""
    return integrate_pv(f, float(x), -1.0, 1.0, tol, hints, tricomi=True, offsets=True,
                        rtol=0.1 * tol).value


def _vectorized_transform(f, hints, tol):
    def tf(x, xa, xb):
        return np.array([tricomi_transform(f, xi, hints=hints, tol=tol) for xi in np.ravel(x)])
    return tf


def tricomi_pairing(f, g, *, hints=(SQRT_END, SQRT_END), tol=1e-10):
    """int f (T g) + int g (T f) over (-1, 1), zero for admissible f, g.

    Each side is a quadrature whose integrand calls a principal value at
    every node; hints describe the endpoint behaviour of f and g alike.
    """
    tf = _vectorized_transform(f, hints, 0.1 * tol)
    tg = _vectorized_transform(g, hints, 0.1 * tol)

    def h(x, xa, xb):
        return f(x, xa, xb) * tg(x, xa, xb) + g(x, xa, xb) * tf(x, xa, xb)

    return integrate(h, -1.0, 1.0, hints, tol=tol, offsets=True).value


def hpb_sides(f, g, x, *, hints=(SQRT_END, SQRT_END), tol=1e-9):
    """Both sides of T[f Tg + g Tf](x) = Tf(x) Tg(x) - f(x) g(x)."""
    inner = 1e-3 * tol
    tf = _vectorized_transform(f, hints, inner)
    tg = _vectorized_transform(g, hints, inner)

    def h(u, ua, ub):
        return f(u, ua, ub) * tg(u, ua, ub) + g(u, ua, ub) * tf(u, ua, ub)

    lhs = integrate_pv(h, float(x), -1.0, 1.0, tol, hints, tricomi=True, offsets=True).value
    xa, xb = np.array([1.0 + x]), np.array([1.0 - x])
    xs = np.array([float(x)])
    rhs = tf(xs, xa, xb)[0] * tg(xs, xa, xb)[0] - f(xs, xa, xb)[0] * g(xs, xa, xb)[0]
    return lhs, rhs


def sqrt_weighted_cubic(coeffs):
    """xi -> sqrt(1 - xi^2) (c0 + c1 xi + c2 xi^2 + c3 xi^3), offset form."""
    c = tuple(float(v) for v in coeffs)

    def f(x, xa, xb):
        return np.sqrt(xa * xb) * (c[0] + x * (c[1] + x * (c[2] + x * c[3])))
    return f


def _pair_params(rng):
    out = {f"a{i}": float(rng.uniform(-1, 1)) for i in range(4)}
    out.update({f"b{i}": float(rng.uniform(-1, 1)) for i in range(4)})
    return out


def _split(p):
    return ([p[f"a{i}"] for i in range(4)], [p[f"b{i}"] for i in range(4)])


def _parseval(**p):
    a, b = _split(p)
    return tricomi_pairing(sqrt_weighted_cubic(a), sqrt_weighted_cubic(b))


def _hpb_lhs(x, **p):
    a, b = _split(p)
    return hpb_sides(sqrt_weighted_cubic(a), sqrt_weighted_cubic(b), x)[0]


def _hpb_rhs(x, **p):
    a, b = _split(p)
    f, g = sqrt_weighted_cubic(a), sqrt_weighted_cubic(b)
    ts = [tricomi_transform(h, x, hints=(SQRT_END, SQRT_END), tol=1e-13) for h in (f, g)]
    xs, xa, xb = np.array([x]), np.array([1.0 + x]), np.array([1.0 - x])
    return ts[0] * ts[1] - f(xs, xa, xb)[0] * g(xs, xa, xb)[0]


def _hpb_params(rng):
    p = _pair_params(rng)
    p["x"] = float(rng.uniform(-0.95, 0.95))
    return p


# ------------------------------------------------------------ Legendre PVs

def _pv(f, x, hints=(LOG, LOG), scale=1.0):
    """scale * PV int f(xi)/(x - xi) dxi with f in offset form."""
    r = integrate_pv(f, float(x), -1.0, 1.0, PV_TOL, hints, offsets=True, rtol=0.1 * PV_TOL)
    return scale * r.value


def _p(nu, xa, xb):
    return p_nu_offsets(nu, xa, xb)


def tricomi_pnu_lhs(nu, x):
    """PV int 2 P_nu(xi) P_nu(-xi) / (pi (x - xi)) dxi."""
    nu = complex(nu)
    return _pv(lambda t, ta, tb: 2.0 * _p(nu, ta, tb) * _p(nu, tb, ta), x, scale=1 / math.pi)


def tricomi_pnu_rhs(nu, x):
    nu = complex(nu)
    return (_p(nu, 1 + x, 1 - x) ** 2 - _p(nu, 1 - x, 1 + x) ** 2) / complex(sinpi(nu))


def _s_pnu(rng):
    return {"nu": degree_sample(rng), "x": float(rng.uniform(-0.95, 0.95))}


def _p_n_members(n, x):
    return [_pv(lambda t, ta, tb, d=d: 0.5 * _p(d, ta, tb) ** 2, x) for d in (n, -n - 1)]


def _p_n_rhs(n, x):
    return _p(n, 1 + x, 1 - x) * float(q_nu_offsets(n, 1 + x, 1 - x)[0])


def _s_n_x(lo, hi):
    def draw(rng):
        return {"n": int(rng.integers(lo, hi + 1)), "x": float(rng.uniform(-0.95, 0.95))}
    return draw


def _half_int_lhs(n, x):
    nu = n + 0.5
    pv = _pv(lambda t, ta, tb: _p(nu, ta, tb) / (2.0 * np.sqrt(ta)), x)
    return [pv, (-1) ** (n + 1) * 0.5 * math.pi * _p(nu, 1 - x, 1 + x) / math.sqrt(1 + x)]


def _half_int_rhs(n, x):
    return float(q_nu_offsets(n + 0.5, 1 + x, 1 - x)[0]) / math.sqrt(1 + x)


def _triple_sides(n):
    nu = n + 0.5

    def cube(t, ta, tb):
        return _p(nu, ta, tb) ** 3 / np.sqrt(ta)

    def mixed(t, ta, tb):
        return 3.0 * _p(nu, ta, tb) * _p(nu, tb, ta) ** 2 / np.sqrt(ta)
    return quad(cube, -1.0, 1.0), quad(mixed, -1.0, 1.0)


def _kk(k, kb):
    """(K(k), E(k), K', E') from k and 1 - k, without forming 1 - k^2."""
    kp = np.sqrt(kb * (1.0 + k))
    return elliptic_kp(kp), elliptic_ep(kp), elliptic_kp(k), elliptic_ep(k)


def _triple_elliptic():
    def cube(k, ka, kb):
        _, _, K1, E1 = _kk(ka, kb)
        return (2 * E1 - K1) ** 3

    def mixed(k, ka, kb):
        K, E, K1, E1 = _kk(ka, kb)
        return 3.0 * (2 * E - K) ** 2 * (2 * E1 - K1)
    return quad(cube, 0.0, 1.0), quad(mixed, 0.0, 1.0)


def _vanishing():
    def f(k, ka, kb):
        K, E, K1, E1 = _kk(ka, kb)
        return K1 ** 2 * (K1 * K + K1 * E - 3 * K * E1) * ka
    return quad(f, 0.0, 1.0)


# --------------------------------------------------- generalized Neumann

def _neumann_hint(sigma):
    re = complex(sigma).real
    return Algebraic(-re) if re < 0 else LOG


def _check_neumann(nu, n):
    nu = complex(nu)
    if (nu - n).real <= -1:
        raise DomainError("needs Re(nu - n) > -1")
    if nu.imag == 0 and nu.real == round(nu.real) and nu.real < 0:
        raise DomainError("nu must not be a negative integer")
    return nu, nu - n


def neumann_lhs(nu, n, x):
    """PV int (1 + xi)^(nu - n) P_nu(xi) / (2 (x - xi)) dxi."""
    nu, sigma = _check_neumann(nu, n)
    sig = sigma.real if sigma.imag == 0 else sigma

    def f(t, ta, tb):
        return 0.5 * np.power(ta, sig) * _p(nu, ta, tb)
    return _pv(f, x, hints=(_neumann_hint(sigma), SMOOTH))


def neumann_rhs(nu, n, x):
    nu, sigma = _check_neumann(nu, n)
    sig = sigma.real if sigma.imag == 0 else sigma
    q = q_nu_offsets(nu, 1 + x, 1 - x)[0]
    return (1 + x) ** sig * q


def moment_lhs(sigma, nu):
    """int (1 + x)^sigma P_nu(x) dx."""
    sigma, nu = complex(sigma), complex(nu)
    sig = sigma.real if sigma.imag == 0 else sigma
    # tanh-sinh copes with (1+x)^s log(1+x) for Re s > -0.9; the skipped
    # sub-1e-100 sliver carries less than 1e-9 of the mass
    return quad(lambda t, ta, tb: np.power(ta, sig) * _p(nu, ta, tb), -1.0, 1.0,
                hints=(LOG, SMOOTH))


def moment_rhs(sigma, nu):
    """2^(sigma+1) Gamma(sigma+1)^2 / (Gamma(sigma+nu+2) Gamma(1+sigma-nu))."""
    sigma, nu = complex(sigma), complex(nu)
    g = 1.0 / complex(rgamma(sigma + 1))
    return 2 ** (sigma + 1) * g * g * complex(rgamma(sigma + nu + 2)) * complex(rgamma(1 + sigma - nu))


def _s_neumann(rng):
    n = int(rng.integers(0, 3))
    while True:
        sr = float(rng.uniform(-0.9, 1.5))
        si = float(rng.uniform(-1.0, 1.0)) if rng.random() < 0.5 else 0.0
        nu = complex(n + sr, si)
        # keep clear of the Q poles at negative integers
        if si == 0 and nu.real < 0 and abs(nu.real - round(nu.real)) < 1e-2:
            continue
        return {"nu": nu.real if si == 0 else nu, "n": n, "x": float(rng.uniform(-0.95, 0.95))}


def _s_moment(rng):
    """Half the draws use s = nu - n (right side zero for n >= 1), half a free s."""
    if rng.random() < 0.5:
        p = _s_neumann(rng)
        return {"sigma": complex(p["nu"]) - p["n"], "nu": p["nu"]}
    sigma = complex(rng.uniform(-0.9, 1.5), rng.uniform(-1, 1) if rng.random() < 0.5 else 0.0)
    return {"sigma": sigma.real if sigma.imag == 0 else sigma, "nu": degree_sample(rng)}


def _pn_poly(rng):
    n = int(rng.integers(0, 5))
    p = {"n": n, "x": float(rng.uniform(-0.95, 0.95))}
    p.update({f"c{i}": float(rng.uniform(-1, 1)) if i <= n else 0.0 for i in range(5)})
    return p


def _poly(p, t):
    return sum(p[f"c{i}"] * t ** i for i in range(5))


def _pn_p_lhs(n, x, **c):
    return _pv(lambda t, ta, tb: 0.5 * _p(n, ta, tb) * _poly(c, t), x)


def _pn_p_rhs(n, x, **c):
    return float(q_nu_offsets(n, 1 + x, 1 - x)[0]) * _poly(c, x)


def cases():
    same = {f"a{i}": v for i, v in enumerate((0.4, -0.3, 0.7, 0.2))}
    same.update({f"b{i}": v for i, v in enumerate((0.4, -0.3, 0.7, 0.2))})
    return [
        IdentityCase(
            "eq48_parseval", SUITE, "int f (T g) dx + int g (T f) dx = 0",
            "f, g = sqrt(1 - x^2) times random cubics with coefficients in (-1, 1)",
            _parseval, lambda **p: 0.0, "pv", sampler=_pair_params, fixed=(same,), atol=1e-8),
        IdentityCase(
            "eq58_hpb", SUITE, "T[f (T g) + g (T f)] = (T f)(T g) - f g",
            "f, g = sqrt(1 - x^2) times random cubics, x in (-0.95, 0.95)",
            _hpb_lhs, _hpb_rhs, "pv", sampler=_hpb_params, atol=1e-8),
        IdentityCase(
            "eq50_tricomi_pnu", SUITE,
            "PV int 2 P_nu(xi) P_nu(-xi) / (pi (x - xi)) dxi = ([P_nu(x)]^2 - [P_nu(-x)]^2) / sin(nu pi)",
            "nu complex in the degree envelope, >= 1e-2 from the integers; x in (-0.95, 0.95)",
            tricomi_pnu_lhs, tricomi_pnu_rhs, "pv", sampler=_s_pnu,
            fixed=({"nu": -0.5, "x": 0.5}, {"nu": 0.3, "x": 0.0}), atol=1e-9),
        IdentityCase(
            "eq51_tricomi_pn", SUITE,
            "PV int [P_n(xi)]^2 / (2 (x - xi)) dxi = PV int [P_{-n-1}(xi)]^2 / (2 (x - xi)) dxi = P_n(x) Q_n(x)",
            "n in {0..3}, x in (-0.95, 0.95)", _p_n_members, _p_n_rhs, "pv",
            sampler=_s_n_x(0, 3), fixed=({"n": 1, "x": 0.3},), atol=1e-9),
        IdentityCase(
            "eq_p_half_int_T", SUITE,
            "PV int P_{n+1/2}(xi)/sqrt(1+xi) dxi/(2(x-xi)) = Q_{n+1/2}(x)/sqrt(1+x) = (-1)^(n+1) (pi/2) P_{n+1/2}(-x)/sqrt(1+x)",
            "n in {-2..2}, x in (-0.95, 0.95)", _half_int_lhs, _half_int_rhs, "pv",
            sampler=_s_n_x(-2, 2), atol=1e-9),
        IdentityCase(
            "eq_triple_law", SUITE,
            "int [P_{n+1/2}(x)]^3/sqrt(1+x) dx = 3 int P_{n+1/2}(x) [P_{n+1/2}(-x)]^2/sqrt(1+x) dx",
            "n in {-1, 0, 1, 2}", lambda n: _triple_sides(n)[0], lambda n: _triple_sides(n)[1],
            "tight", sampler=lambda rng: {"n": int(rng.integers(-1, 3))}, atol=1e-11),
        IdentityCase(
            "eq_triple_law_elliptic", SUITE,
            "int_0^1 [2E(k') - K(k')]^3 dk = 3 int_0^1 [2E(k) - K(k)]^2 [2E(k') - K(k')] dk, k' = sqrt(1-k^2)",
            "parameter-free", lambda: _triple_elliptic()[0], lambda: _triple_elliptic()[1],
            "tight"),
        IdentityCase(
            "vanishing_kkke", SUITE,
            "int_0^1 K'^2 [K' K + K' E - 3 K E'] k dk = 0",
            "parameter-free", _vanishing, lambda: 0.0, "standard", atol=1e-7),
        IdentityCase(
            "eq54_neumann", SUITE,
            "PV int (1+xi)^(nu-n) P_nu(xi) dxi / (2 (x - xi)) = (1+x)^(nu-n) Q_nu(x)",
            "n in {0, 1, 2}, Re(nu - n) in (-0.9, 1.5), |Im nu| <= 1, x in (-0.95, 0.95)",
            neumann_lhs, neumann_rhs, "pv", sampler=_s_neumann,
            fixed=({"nu": 0.0, "n": 0, "x": 0.5}, {"nu": -0.3, "n": 0, "x": 0.2}), atol=1e-9),
        IdentityCase(
            "eq55_moment", SUITE,
            "int (1+x)^s P_nu(x) dx = 2^(s+1) G(s+1)^2 / (G(s+nu+2) G(1+s-nu)), s = nu - n",
            "Re s in (-0.9, 1.5), nu in the degree envelope; half the draws have s = nu - n, n in {0, 1, 2}",
            moment_lhs, moment_rhs, "standard", sampler=_s_moment,
            fixed=({"sigma": 0.0, "nu": 0.0},), atol=1e-10),
        IdentityCase(
            "eq_pn_p_T", SUITE,
            "PV int P_n(xi) p(xi) / (2 (x - xi)) dxi = Q_n(x) p(x), deg p <= n",
            "n in {0..4}, random p of degree n, x in (-0.95, 0.95)",
            _pn_p_lhs, _pn_p_rhs, "pv", sampler=_pn_poly, atol=1e-9),
    ]
