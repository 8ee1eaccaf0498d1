"""Clebsch-Gordan-type integrals T_{mu,nu} = int_{-1}^1 P_mu(x) P_nu(x) P_nu(-x) dx.

Three independent routes: direct quadrature, the gamma-quotient and
hypergeometric closed forms, and the three-term recursion in mu.
"""

from __future__ import annotations

import math

from ..errors import DomainError, PoleError
from ..legendre import p_nu_offsets
from ..quadrature import LOG, integrate
from ..specfun import cospi, gamma, pfq_unit, rgamma, sinpi

LIMIT_RADIUS = 1e-2
RICHARDSON_STEPS = (1e-3, 5e-4, 2.5e-4)


def _c(z):
    return complex(z)


def _ret(v):
    v = complex(v)
    return v.real if v.imag == 0 else v


# ---------------------------------------------------------------- quadrature

def t_direct_result(mu, nu, tol=1e-10):
    """QuadResult for the defining integral (both endpoints logarithmic)."""
    mu, nu = _c(mu), _c(nu)

    def f(x, xa, xb):
        return p_nu_offsets(mu, xa, xb) * p_nu_offsets(nu, xa, xb) * p_nu_offsets(nu, xb, xa)

    return integrate(f, -1.0, 1.0, (LOG, LOG), tol=tol, rtol=tol, offsets=True)


def t_direct(mu, nu, tol=1e-10):
    return _ret(t_direct_result(mu, nu, tol).value)


# ---------------------------------------------------------------- limits

def _dist_nonpos_int(w):
    """Distance from w to the set {0, -1, -2, ...}."""
    w = complex(w)
    n = min(0, round(w.real))
    return abs(w - n)


def richardson(f, z, steps=RICHARDSON_STEPS):
    """Limit of f at z from symmetric averages A(h) = [f(z+h) + f(z-h)]/2.

    A(h) = f(z) + c2 h^2 + c4 h^4 + ..., so two Richardson sweeps over the
    halving sequence h, h/2, h/4 remove the h^2 and h^4 terms.
    """
    z = complex(z)
    A = [0.5 * (complex(f(z + h)) + complex(f(z - h))) for h in steps]
    r = steps[0] / steps[1]
    B = [(r ** 2 * A[i + 1] - A[i]) / (r ** 2 - 1) for i in range(2)]
    return (r ** 4 * B[1] - B[0]) / (r ** 4 - 1)


class _Form:
    """prefactor(z) * prod Gamma(a z + b)^p / prod Gamma(c z + d)^q in one variable.

    ``num`` lists (a, b, power) for numerator gammas whose poles may cancel
    against zeros elsewhere; denominators are evaluated through 1/Gamma and
    never produce poles.
    """

    def __init__(self, pref, num, den, extra_singular=()):
        self.pref, self.num, self.den = pref, num, den
        self.extra = tuple(extra_singular)

    def raw(self, z):
        z = complex(z)
        v = complex(self.pref(z))
        for a, b, p in self.num:
            v *= complex(gamma(a * z + b)) ** p
        for a, b, p in self.den:
            v *= complex(rgamma(a * z + b)) ** p
        return v

    def near_singular(self, z):
        z = complex(z)
        d = [_dist_nonpos_int(a * z + b) / abs(a) for a, b, _ in self.num]
        d += [abs(z - s) for s in self.extra]
        return min(d, default=math.inf)

    def __call__(self, z):
        if self.near_singular(z) < LIMIT_RADIUS:
            return richardson(self.raw, z)
        return self.raw(z)


def _check_int(n, name, nonneg=True):
    if float(n) != int(n) or (nonneg and int(n) < 0):
        raise DomainError(f"{name} must be a {'non-negative ' if nonneg else ''}integer")
    return int(n)


def _t_mu_n(mu, n):
    n = _check_int(n, "n")
    form = _Form(lambda z: (-1) ** n * math.pi,
                 [(-0.5, n + 0.5, 1), (0.5, n + 1.0, 1)],
                 [(-0.5, 0.5, 2), (0.5, 1.0, 2), (-0.5, n + 1.0, 1), (0.5, n + 1.5, 1)])
    mu = complex(mu)
    if mu.imag == 0 and mu.real == round(mu.real):
        m = int(round(mu.real))
        m = m if m >= 0 else -m - 1
        # odd orders and orders beyond 2n vanish exactly
        if m % 2 == 1 or m > 2 * n:
            return 0.0
        mu = complex(m)
    return form(mu)


def _t_2m_nu(m, nu):
    m = _check_int(m, "m")
    form = _Form(lambda z: math.pi * complex(cospi(z)),
                 [(1.0, 0.5 - m, 1), (1.0, 1.0 + m, 1)],
                 [(0.0, 0.5 - m, 2), (0.0, m + 1.0, 2), (1.0, 1.0 - m, 1), (1.0, 1.5 + m, 1)])
    return form(nu)


def _t_2m_n_half(m, n):
    m = _check_int(m, "m")
    n = _check_int(n, "n", nonneg=False)
    if m - n <= 0 or m + n + 2 <= 0:
        return 0.0
    v = (-(-1) ** n / math.pi * complex(gamma(m + 0.5)) ** 2 * complex(gamma(m - n - 0.5))
         * complex(gamma(m + n + 1.5))
         * complex(rgamma(m + 1.0)) ** 2 * complex(rgamma(m - n)) * complex(rgamma(m + n + 2.0)))
    return v


_NU_NU = _Form(lambda z: (1 + 2 * complex(cospi(z))) / 3 * math.pi,
               [(0.5, 0.5, 1), (1.5, 1.0, 1)],
               [(-0.5, 0.5, 2), (0.5, 1.0, 3), (1.5, 1.5, 1)])

_TWO_NU_MINUS1 = _Form(lambda z: complex(sinpi(z)) * complex(sinpi(2 * z)) / (math.pi * z) ** 2,
                       [], [], extra_singular=(0.0,))

_TWO_NU_PLUS2 = _Form(lambda z: -complex(sinpi(z)) * complex(sinpi(2 * z))
                      / (math.pi * (z + 1)) ** 2, [], [], extra_singular=(-1.0,))

_ZERO_NU = _Form(lambda z: 2 * complex(cospi(z)) / (2 * z + 1), [], [], extra_singular=(-0.5,))


def _t_f43(mu, nu):
    mu, nu = complex(mu), complex(nu)
    for v, name in ((mu, "mu"), (nu, "nu")):
        if abs(v - round(v.real)) < 1e-12:
            raise DomainError(f"4F3 form needs non-integer {name}")
    a = [1.0, (1 - mu) / 2, (mu + 2) / 2]
    b = [(2 - mu) / 2, (mu + 3) / 2]
    s1 = pfq_unit(a + [-nu], b + [1 - nu])
    s2 = pfq_unit(a + [nu + 1], b + [nu + 2])
    pre = 2 / math.pi ** 2 * complex(sinpi(mu)) * complex(sinpi(nu)) / (mu * (mu + 1))
    return pre * (complex(s1) / nu - complex(s2) / (nu + 1))


def _t_f54(mu, nu):
    mu, nu = complex(mu), complex(nu)
    if abs(nu + 0.5) < LIMIT_RADIUS:
        raise DomainError("5F4 form excludes a neighbourhood of nu = -1/2")
    if abs(mu - round(mu.real)) < 1e-12 and mu.real in (0.0, -1.0):
        raise DomainError("5F4 form needs mu not in {0, -1}")
    common = [-nu, 1 + nu]
    den_common = [(1 - 2 * nu) / 2, (2 * nu + 3) / 2]
    s1 = pfq_unit([0.5, 0.5, -mu / 2] + common, [1.0, (2 - mu) / 2] + den_common)
    s2 = pfq_unit([0.5, 0.5, (1 + mu) / 2] + common, [1.0, (3 + mu) / 2] + den_common)
    pre = 2 / math.pi * complex(sinpi(mu)) * complex(cospi(nu)) / (2 * nu + 1)
    return pre * (complex(s1) / mu - complex(s2) / (mu + 1))


SELECTORS = {
    "mu_n": (("mu", "n"), _t_mu_n),
    "two_m_nu": (("m", "nu"), _t_2m_nu),
    "two_m_n_half": (("m", "n"), _t_2m_n_half),
    "nu_nu": (("nu",), _NU_NU),
    "two_nu_minus1": (("nu",), _TWO_NU_MINUS1),
    "two_nu_plus2": (("nu",), _TWO_NU_PLUS2),
    "zero_nu": (("nu",), _ZERO_NU),
    "f43": (("mu", "nu"), _t_f43),
    "f54": (("mu", "nu"), _t_f54),
}


def t_closed(selector, **params):
    """Closed-form value of a T family member.

    selector: one of SELECTORS. Parameters by name, e.g.
    ``t_closed("mu_n", mu=-0.5, n=1)`` or ``t_closed("nu_nu", nu=-0.5)``.
    Forms written as a limit are evaluated by symmetric Richardson
    extrapolation when the parameter is within 1e-2 of a cancelling pole.
    """
    if selector not in SELECTORS:
        raise DomainError(f"unknown selector {selector!r}")
    names, fn = SELECTORS[selector]
    if set(params) != set(names):
        raise DomainError(f"{selector} takes parameters {names}")
    try:
        v = fn(*(params[k] for k in names))
    except PoleError as exc:
        raise PoleError(f"{selector}: uncancelled gamma pole ({exc})") from exc
    return _ret(v)


def t_mu_nu_degree(selector, **params):
    """(mu, nu) that the closed form ``selector`` describes."""
    p = params
    return {
        "mu_n": lambda: (p["mu"], p["n"]),
        "two_m_nu": lambda: (2 * p["m"], p["nu"]),
        "two_m_n_half": lambda: (2 * p["m"], p["n"] + 0.5),
        "nu_nu": lambda: (p["nu"], p["nu"]),
        "two_nu_minus1": lambda: (2 * complex(p["nu"]) - 1, p["nu"]),
        "two_nu_plus2": lambda: (2 * complex(p["nu"]) + 2, p["nu"]),
        "zero_nu": lambda: (0, p["nu"]),
        "f43": lambda: (p["mu"], p["nu"]),
        "f54": lambda: (p["mu"], p["nu"]),
    }[selector]()


def recursion_terms(mu, nu, tol=1e-10):
    """(left side, source term) of the three-term recursion in mu, T from quadrature."""
    mu, nu = complex(mu), complex(nu)
    c = (2 * nu + 1) ** 2
    tp = complex(t_direct(mu + 1, nu, tol))
    tm = complex(t_direct(mu - 1, nu, tol))
    left = (mu + 1) ** 2 * ((mu + 1) ** 2 - c) * tp - mu ** 2 * (mu ** 2 - c) * tm
    src = 4 * (2 * mu + 1) * complex(sinpi(mu)) * complex(sinpi(nu)) / math.pi ** 2
    return _ret(left), _ret(src)


def t_recursion_residual(mu, nu, tol=1e-10):
    left, src = recursion_terms(mu, nu, tol)
    return float(abs(complex(left) - complex(src)))
