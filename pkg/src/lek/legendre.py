"""Legendre functions P_nu, Q_nu of arbitrary complex degree on (-1, 1].

P_nu(x) = 2F1(-nu, nu+1; 1; (1-x)/2). For (1-x)/2 <= 0.9 the Gauss series is
summed directly. Closer to x = -1 the function is expanded around the
logarithmic singularity in s = (1+x)/2 (the degenerate c = a + b case of the
hypergeometric connection formulas), which is the same information as the
P/Q connection written out as a single convergent series. Both series are
only ever summed at degrees with real part in [-1/2, 3/2); larger degrees
are reached by the three-term recurrence.

Functions taking ``xa, xb`` instead of ``x`` expect xa = 1 + x and xb = 1 - x
supplied by the caller to full relative accuracy, e.g. from the endpoint
offsets of ``quadrature.integrate``.
"""

import math
import warnings

import numpy as np

from . import quadrature
from .errors import AccuracyWarning, DomainError, PoleError
from .specfun import (EULER_GAMMA, _prep, _out, cospi, digamma, elliptic_ep, elliptic_kp,
                      sinpi)

_MAX_TERMS = 4000
_Q_STEP = 1e-3
_SPLIT = 0.9  # Gauss series for (1-x)/2 <= _SPLIT, endpoint expansion beyond

FRACTIONAL_TAGS = ("P_half", "P_quarter", "P_sixth_a", "P_sixth_b", "P_third_a", "P_third_b",
                   "P_sixth_unified", "P_pos_half", "P_three_half", "P_pos_quarter",
                   "P_three_quarter")


def _degree(nu):
    nu = complex(nu)
    if not (math.isfinite(nu.real) and math.isfinite(nu.imag)):
        raise DomainError("degree must be finite")
    return nu


def _integer_degree(nu):
    if nu.imag == 0 and nu.real == round(nu.real):
        return int(round(nu.real))
    return None


def _legendre_int(m, x):
    """P_m(x) for integer m >= 0 by the three-term recurrence."""
    p0 = np.ones_like(x)
    if m == 0:
        return p0
    p1 = x.copy()
    for n in range(1, m):
        p0, p1 = p1, ((2 * n + 1) * x * p1 - n * p0) / (n + 1)
    return p1


def _gauss_series(nu, t):
    term = np.ones(t.shape, dtype=complex)
    total = term.copy()
    lim = abs(nu) + 2
    for n in range(_MAX_TERMS):
        term = term * ((n - nu) * (n + nu + 1) / (n + 1) ** 2) * t
        total = total + term
        if n > lim and np.all(np.abs(term) <= 1e-17 * np.maximum(1.0, np.abs(total))):
            return total
    raise ArithmeticError("Gauss series for P_nu did not converge")


def _log_series(nu, s):
    """P_nu(-1 + 2 s) from the expansion about the singular endpoint x = -1."""
    sp = complex(sinpi(nu))
    cp = complex(cospi(nu))
    psi1 = digamma(nu + 1)
    ls = np.log(s)
    c = 1.0 + 0j
    pw = np.ones(s.shape)
    harm = 0.0
    up = 0j
    down = 0j
    d = -2 * EULER_GAMMA - 2 * psi1
    total = sp * (d - ls) - np.pi * cp
    lim = abs(nu) + 2
    for n in range(1, _MAX_TERMS):
        c *= (n - 1 - nu) * (n + nu) / (n * n)
        pw = pw * s
        harm += 1.0 / n
        up += 1.0 / (nu + n)
        down += 1.0 / (nu + 1 - n)
        d = 2 * (harm - EULER_GAMMA) - 2 * psi1 - up + down
        term = c * pw * (sp * (d - ls) - np.pi * cp)
        total = total + term
        if n > lim and np.all(np.abs(term) <= 1e-17 * np.maximum(1.0, np.abs(total))):
            return -total / np.pi
    raise ArithmeticError("logarithmic series for P_nu did not converge")


def _p_series(nu, t, t1):
    out = np.empty(t.shape, dtype=complex)
    gauss = t <= _SPLIT
    if np.any(gauss):
        out[gauss] = _gauss_series(nu, t[gauss])
    if not np.all(gauss):
        out[~gauss] = _log_series(nu, t1[~gauss])
    return out


def _p(nu, t, t1):
    """P_nu at the point with (1-x)/2 = t and (1+x)/2 = t1 (arrays)."""
    m = _integer_degree(nu)
    if m is not None:
        if m < 0:
            m = -m - 1
        return _legendre_int(m, t1 - t)
    if nu.real < -0.5:
        nu = -nu - 1
    # Large degrees: the series lose digits to cancellation, so sum them at
    # nu0 = nu - k, nu0 + 1 with Re nu0 in [-1/2, 1/2) and climb the degree
    # recurrence, which is neutrally stable on (-1, 1).
    k = int(math.floor(nu.real + 0.5))
    nu0 = nu - k
    out = _p_series(nu0, t, t1)
    if k > 0:
        x = t1 - t
        p0, out = out, _p_series(nu0 + 1, t, t1)
        v = nu0 + 1
        for _ in range(k - 1):
            p0, out = out, ((2 * v + 1) * x * out - v * p0) / (v + 1)
            v += 1
    if nu.imag == 0:
        return out.real
    return out


def p_nu(nu, x):
    """Legendre function of the first kind P_nu(x), -1 < x <= 1, complex nu.

    Real degree gives real values. Warns (AccuracyWarning) when x is within
    1e-12 of -1 and nu is not close to an integer, because x alone then no
    longer resolves the logarithmic endpoint; use ``p_nu_offsets`` there.
    """
    nu = _degree(nu)
    x, scalar = _prep(x)
    if np.iscomplexobj(x):
        raise DomainError("x must be real")
    x = x.astype(float)
    if np.any((x <= -1) | (x > 1)):
        raise DomainError("P_nu(x) needs -1 < x <= 1")
    n = round(nu.real)
    if abs(nu - n) > 1e-3 and np.any(1.0 + x < 1e-12):
        warnings.warn("P_nu evaluated within 1e-12 of x = -1; pass offsets for full accuracy",
                      AccuracyWarning, stacklevel=2)
    xx = np.atleast_1d(x)
    val = _p(nu, 0.5 * (1.0 - xx), 0.5 * (1.0 + xx))
    return _out(val.reshape(x.shape) if not scalar else val[0], scalar)


def p_nu_offsets(nu, xa, xb):
    """P_nu(x) given xa = 1 + x > 0 and xb = 1 - x >= 0 (xa + xb = 2)."""
    nu = _degree(nu)
    xa = np.asarray(xa, dtype=float)
    xb = np.asarray(xb, dtype=float)
    if np.any(xa <= 0) or np.any(xb < 0):
        raise DomainError("offsets must satisfy 1 + x > 0 and 1 - x >= 0")
    shape = np.broadcast(xa, xb).shape
    xa, xb = (np.broadcast_to(v, shape).ravel() for v in (xa, xb))
    val = _p(nu, 0.5 * xb, 0.5 * xa).reshape(shape)
    return val.item() if val.ndim == 0 else val


def _q_formula(nu, t, t1):
    return np.pi * (complex(cospi(nu)) * _p(nu, t, t1) - _p(nu, t1, t)) / (2 * complex(sinpi(nu)))


def _q_int(n, t, t1):
    q0 = 0.5 * (np.log(t1) - np.log(t))
    if n == 0:
        return q0
    x = t1 - t
    q1 = x * q0 - 1.0
    for k in range(1, n):
        q0, q1 = q1, ((2 * k + 1) * x * q1 - k * q0) / (k + 1)
    return q1


def _q(nu, t, t1):
    n = round(nu.real)
    if nu.imag == 0 and nu.real == n and n < 0:
        raise PoleError("Q_nu has poles at negative integer degrees")
    delta = nu - n
    if abs(delta) > _Q_STEP or n < 0:
        val = _q_formula(nu, t, t1)
    else:
        qn = _q_int(n, t, t1)
        if delta == 0:
            return qn
        # Lagrange interpolation through nu = n + k h, k = -2..2, with the
        # middle value from the exact integer path.
        nodes = [k * _Q_STEP for k in (-2, -1, 0, 1, 2)]
        vals = [qn if k == 0 else _q_formula(n + h, t, t1) for k, h in zip((-2, -1, 0, 1, 2), nodes)]
        val = 0
        for i, (hi, vi) in enumerate(zip(nodes, vals)):
            w = 1.0
            for j, hj in enumerate(nodes):
                if j != i:
                    w *= (delta - hj) / (hi - hj)
            val = val + w * vi
    if nu.imag == 0:
        return np.real(val)
    return val


def q_nu(nu, x):
    """Legendre function of the second kind Q_nu(x), -1 < x < 1.

    Uses Q = pi [cos(nu pi) P_nu(x) - P_nu(-x)] / (2 sin(nu pi)) away from
    the integers. Within 1e-3 of an integer n >= 0 the exact Q_n (from
    artanh and the three-term recurrence) is corrected by interpolating the
    formula at n +- 1e-3, n +- 2e-3.
    """
    nu = _degree(nu)
    x, scalar = _prep(x)
    if np.iscomplexobj(x):
        raise DomainError("x must be real")
    if np.any(np.abs(x) >= 1):
        raise DomainError("Q_nu(x) needs -1 < x < 1")
    xx = np.atleast_1d(x.astype(float))
    val = np.asarray(_q(nu, 0.5 * (1.0 - xx), 0.5 * (1.0 + xx)))
    return _out(val.reshape(x.shape) if not scalar else val[0], scalar)


def q_nu_offsets(nu, xa, xb):
    """Q_nu(x) given accurate xa = 1 + x > 0 and xb = 1 - x > 0."""
    nu = _degree(nu)
    xa = np.atleast_1d(np.asarray(xa, dtype=float))
    xb = np.atleast_1d(np.asarray(xb, dtype=float))
    if np.any(xa <= 0) or np.any(xb <= 0):
        raise DomainError("Q_nu needs -1 < x < 1")
    return np.asarray(_q(nu, 0.5 * xb, 0.5 * xa))


def p_nu_md(nu, theta, tol=1e-13):
    """P_nu(cos theta) by quadrature of the Mehler-Dirichlet integral.

    The substitution beta = theta (1 - u^2) absorbs the inverse square root
    at beta = theta, leaving a smooth integrand on [0, 1].
    """
    nu = _degree(nu)
    theta = float(theta)
    if not 0.0 < theta < np.pi:
        raise DomainError("Mehler-Dirichlet form needs 0 < theta < pi")
    half = nu + 0.5

    def f(u):
        beta = theta * (1.0 - u * u)
        den = np.sin(0.5 * (theta + beta)) * (0.5 * theta) * np.sinc(theta * u * u / (2 * np.pi))
        return (2.0 / np.pi) * theta * np.cos(half * beta) / np.sqrt(den)

    r = quadrature.integrate(f, 0.0, 1.0, tol=tol, rtol=tol)
    return r.value.real if nu.imag == 0 else complex(r.value)


def p_nu_laplace(nu, z, tol=1e-15, max_nodes=1 << 16):
    """P_nu(z) = (1/2pi) int_0^2pi (z + i sqrt(1-z^2) cos phi)^nu dphi, 0 < z <= 1.

    Periodic trapezoid rule with node doubling.
    """
    nu = _degree(nu)
    z = float(z)
    if not 0.0 < z <= 1.0:
        raise DomainError("Laplace form implemented for 0 < z <= 1")
    w = math.sqrt((1.0 - z) * (1.0 + z))
    n = 8
    prev = None
    while n <= max_nodes:
        phi = 2 * np.pi * np.arange(n) / n
        val = np.mean(np.exp(nu * np.log(z + 1j * w * np.cos(phi))))
        if prev is not None and abs(val - prev) <= tol * max(1.0, abs(val)):
            return val.real if nu.imag == 0 else complex(val)
        prev = val
        n *= 2
    from .errors import ConvergenceError
    raise ConvergenceError("Laplace trapezoid rule did not converge")


def _quarter_moduli(theta):
    """For s = sin(theta/2): (s, m, m') with m^2 = 2s/(1+s), m'^2 = (1-s)/(1+s)."""
    s = np.sin(0.5 * theta)
    one_minus_s = 2.0 * np.sin(0.25 * (np.pi - theta)) ** 2
    return s, np.sqrt(2 * s / (1 + s)), np.sqrt(one_minus_s / (1 + s)), one_minus_s


def p_assoc1(nu, theta):
    """Order-one associated function P^1_nu(cos theta) for nu in {-1/2, -1/4, -3/4}.

    Sign convention P^1_nu(x) = -(1 - x^2)^(1/2) dP_nu/dx.
    """
    theta, scalar = _prep(theta)
    if np.any((theta <= 0) | (theta >= np.pi)):
        raise DomainError("p_assoc1 needs 0 < theta < pi")
    theta = theta.astype(float)
    nu = complex(nu)
    if nu == -0.5:
        c = np.cos(0.5 * theta)
        E, K = elliptic_ep(c), elliptic_kp(c)
        val = 2.0 / (np.pi * np.sin(theta)) * (E - K * c * c)
    elif nu in (-0.25, -0.75):
        s, m, mp, oms = _quarter_moduli(theta)
        E, K = elliptic_ep(mp), elliptic_kp(mp)
        val = np.sqrt(1 + s) / (np.pi * np.sin(theta)) * (E - K * oms)
    else:
        raise DomainError("closed forms exist only for nu = -1/2, -1/4, -3/4")
    return _out(np.asarray(val), scalar)


def _sixth_third_w(p):
    return 27 * p ** 2 * (1 + p) ** 2 / (4 * (1 + p + p * p) ** 3)


def fractional_point(tag, param):
    """(nu, x) at which the closed form ``tag`` evaluates P_nu."""
    param = float(param)
    if tag in ("P_half", "P_quarter", "P_pos_half", "P_three_half", "P_pos_quarter",
               "P_three_quarter"):
        nu = {"P_half": -0.5, "P_quarter": -0.25, "P_pos_half": 0.5, "P_three_half": 1.5,
              "P_pos_quarter": 0.25, "P_three_quarter": 0.75}[tag]
        return nu, math.cos(param)
    if tag in ("P_sixth_a", "P_sixth_b", "P_third_a", "P_third_b"):
        w = _sixth_third_w(param)
        nu = -1.0 / 6 if "sixth" in tag else -1.0 / 3
        return nu, (1 - 2 * w) if tag.endswith("_a") else (2 * w - 1)
    if tag == "P_sixth_unified":
        x = param
        return -1.0 / 6, x * (9 - x * x) / (3 + x * x) ** 1.5
    raise DomainError(f"unknown closed-form tag {tag!r}")


def p_fractional_closed(tag, param):
    """Elliptic-integral closed form of a fractional-degree Legendre function.

    Angle tags (P_half, P_quarter, P_pos_half, P_three_half, P_pos_quarter,
    P_three_quarter) take theta in [0, pi); the signature-6 and -3 tags
    (P_sixth_a/b, P_third_a/b) take p in [0, 1); P_sixth_unified takes
    x in (-1, 1]. ``fractional_point`` gives the matching (nu, x).
    """
    if tag not in FRACTIONAL_TAGS:
        raise DomainError(f"unknown closed-form tag {tag!r}")
    v = float(param)
    two_pi = 2.0 / np.pi
    if tag in ("P_half", "P_pos_half", "P_three_half"):
        if not 0.0 <= v < np.pi:
            raise DomainError("theta must lie in [0, pi)")
        c = math.cos(0.5 * v)
        K = elliptic_kp(c)
        if tag == "P_half":
            return two_pi * K
        E = elliptic_ep(c)
        if tag == "P_pos_half":
            return two_pi * (2 * E - K)
        ct = math.cos(v)
        return 2.0 / (3 * np.pi) * (8 * ct * E - (4 * ct + 1) * K)
    if tag in ("P_quarter", "P_pos_quarter", "P_three_quarter"):
        if not 0.0 <= v < np.pi:
            raise DomainError("theta must lie in [0, pi)")
        s, m, mp, _ = _quarter_moduli(v)
        K = elliptic_kp(mp)
        r = math.sqrt(1 + s)
        if tag == "P_quarter":
            return two_pi * K / r
        E = elliptic_ep(mp)
        if tag == "P_pos_quarter":
            return two_pi * (2 * r * E - K / r)
        return 2.0 / (3 * np.pi) * (2 * r * E - (1 - 2 * math.cos(v)) / r * K)
    if tag == "P_sixth_unified":
        if not -1.0 < v <= 1.0:
            raise DomainError("x must lie in (-1, 1]")
        # K(sqrt((1-x)/2)) through its complementary modulus sqrt((1+x)/2)
        return two_pi * math.sqrt(math.sqrt(3 + v * v) / 2) * elliptic_kp(math.sqrt(0.5 * (1 + v)))
    if not 0.0 <= v < 1.0 or (v == 0.0 and tag.endswith("_b")):
        raise DomainError("p must lie in [0, 1), and p > 0 for the x -> -1 forms")
    p = v
    q = 1 + p + p * p
    d = 1 + 2 * p
    if tag == "P_sixth_a":
        return two_pi * math.sqrt(q / d) * elliptic_kp(math.sqrt((1 - p * p) / d))
    if tag == "P_sixth_b":
        return two_pi * math.sqrt(q / d) * elliptic_kp(math.sqrt(p * (2 + p) / d))
    if tag == "P_third_a":
        return two_pi * q / math.sqrt(d) * elliptic_kp(math.sqrt((1 - p) * (1 + p) ** 3 / d))
    # P_third_b
    return two_pi * q / math.sqrt(3 * d) * elliptic_kp(math.sqrt(p ** 3 * (2 + p) / d))
