"""Elliptic and Legendre building blocks written from accurate complements.

Integrands near a modulus of one lose everything if 1 - k^2 is formed by
subtraction, so every helper here takes the complementary parameter
mc = 1 - m directly: kc(mc) = K(sqrt(1 - mc)), ec(mc) = E(sqrt(1 - mc)).
"""

import numpy as np

from ..legendre import p_nu_offsets
from ..quadrature import LOG, integrate
from ..specfun import elliptic_ep, elliptic_kp

QUAD_TOL = 1e-13


def kc(mc):
    return elliptic_kp(np.sqrt(mc))


def ec(mc):
    return elliptic_ep(np.sqrt(np.clip(mc, 0.0, 1.0)))


def quad(f, a, b, hints=(LOG, LOG), tol=QUAD_TOL, **kw):
    """Offset-aware quadrature at a relative tolerance; f(x, xa, xb)."""
    return integrate(f, a, b, hints, tol=tol, rtol=tol, offsets=True, **kw)


def landen_pair(u, ub):
    """For 0 < u < 1 with ub = 1 - u: (a, b) = (2 sqrt u/(1 + sqrt u), (1 - sqrt u)/(1 + sqrt u)).

    a + b = 1; b is formed as ub / (1 + sqrt u)^2 so it stays accurate as u -> 1.
    """
    r = np.sqrt(u)
    return 2 * r / (1 + r), ub / (1 + r) ** 2


def legendre_moment(nu, weight, powers):
    """int_{-1}^1 weight(x, 1+x, 1-x) P_nu(x)^p P_nu(-x)^q dx with (p, q) = powers."""
    n_plus, n_minus = powers
    nu = complex(nu)

    def f(x, xa, xb):
        v = weight(x, xa, xb)
        if n_plus:
            v = v * p_nu_offsets(nu, xa, xb) ** n_plus
        if n_minus:
            v = v * p_nu_offsets(nu, xb, xa) ** n_minus
        return v

    return quad(f, -1.0, 1.0)
