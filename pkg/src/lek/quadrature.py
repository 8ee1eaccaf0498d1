"""Numerical integration engine.

* ``integrate``: adaptive 15-point Gauss-Kronrod with endpoint hints.  An
  algebraic hint ``Algebraic(alpha)`` for a (x-a)^-alpha endpoint is removed
  by the substitution x = a + L u^(1/(1-alpha)); a logarithmic hint ``LOG``
  sends the adjacent half-interval to a tanh-sinh rule.
* ``integrate_pv``: Cauchy principal value by subtracting the singularity.
* ``integrate_sphere``: product rule on the unit sphere, normalized by 4 pi.
* ``integrate_2d``: iterated 1-D integration.

Integrands are called with numpy arrays of abscissae and must be vectorized.
With ``offsets=True`` an integrand is called as ``f(x, xa, xb)`` where
``xa = x - a`` and ``xb = b - x`` are computed without cancellation; this is
what makes endpoint-singular integrands evaluable arbitrarily close to the
endpoint.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import roots_legendre

from .errors import ConvergenceError, DomainError, NonFiniteError

SMOOTH = "smooth"
LOG = "log"


@dataclass(frozen=True)
class Algebraic:
    """Endpoint behaviour (x - a)^-alpha with 0 < alpha < 1."""

    alpha: float

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise DomainError("algebraic hint needs 0 < alpha < 1")


@dataclass(frozen=True)
class QuadResult:
    value: complex
    err_estimate: float
    evals: int

    def __add__(self, other):
        return QuadResult(self.value + other.value, self.err_estimate + other.err_estimate,
                          self.evals + other.evals)


def _norm_hint(h):
    if h is None or h == SMOOTH:
        return SMOOTH
    if h == LOG:
        return LOG
    if isinstance(h, Algebraic):
        return h
    if isinstance(h, (tuple, list)) and len(h) == 2 and h[0] in ("alg", "algebraic"):
        return Algebraic(float(h[1]))
    raise DomainError(f"unknown endpoint hint {h!r}")


# Gauss-Kronrod 7/15 abscissae and weights on [-1, 1]
_XGK = np.array([
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0])
_WGK = np.array([
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714])
_WG = np.array([
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327])

_X15 = np.concatenate([-_XGK[:7], [0.0], _XGK[6::-1]])
_W15 = np.concatenate([_WGK[:7], [_WGK[7]], _WGK[6::-1]])
_W7 = np.zeros(15)
_W7[[1, 3, 5]] = _WG[:3]
_W7[7] = _WG[3]
_W7[[9, 11, 13]] = _WG[2::-1]
_EPS = np.finfo(float).eps


class _Budget:
    def __init__(self, max_evals):
        self.max_evals = max_evals
        self.evals = 0

    def charge(self, n):
        self.evals += n
        if self.evals > self.max_evals:
            raise ConvergenceError(f"quadrature exceeded {self.max_evals} evaluations")


def _checked(vals):
    vals = np.asarray(vals)
    if not np.all(np.isfinite(vals)):
        raise NonFiniteError("integrand returned a non-finite value")
    return vals


def _gk_adaptive(phi, u0, u1, tol, rtol, budget):
    """Batch-adaptive GK15 of phi(u, ua, ub) over [u0, u1]."""
    lo = np.array([u0], dtype=float)
    hi = np.array([u1], dtype=float)
    span = u1 - u0
    done_val = 0.0
    done_err = 0.0
    while True:
        h = 0.5 * (hi - lo)
        ua = (lo - u0)[:, None] + h[:, None] * (1.0 + _X15)[None, :]
        ub = (u1 - hi)[:, None] + h[:, None] * (1.0 - _X15)[None, :]
        u = np.where(ua <= ub, u0 + ua, u1 - ub)
        budget.charge(u.size)
        fv = _checked(phi(u.ravel(), ua.ravel(), ub.ravel())).reshape(u.shape)
        rk = fv @ _W15
        rg = fv @ _W7
        mean = 0.5 * rk
        resasc = (np.abs(fv - mean[:, None]) @ _W15) * h
        resabs = (np.abs(fv) @ _W15) * h
        val = rk * h
        err = np.abs((rk - rg) * h)
        with np.errstate(divide="ignore", invalid="ignore"):
            scaled = resasc * np.minimum(1.0, (200.0 * err / resasc) ** 1.5)
        err = np.where((resasc != 0) & (err != 0), scaled, err)
        err = np.maximum(err, 50.0 * _EPS * resabs)
        total_val = done_val + val.sum()
        total_err = done_err + err.sum()
        goal = max(tol, rtol * abs(total_val))
        if total_err <= goal:
            return total_val, total_err
        width = hi - lo
        ok = (err <= goal * width / span) | (width <= 1e-15 * max(abs(u0), abs(u1), span))
        if np.all(ok):
            return total_val, total_err
        done_val = done_val + val[ok].sum()
        done_err = done_err + err[ok].sum()
        lo, hi = lo[~ok], hi[~ok]
        mid = 0.5 * (lo + hi)
        lo, hi = np.concatenate([lo, mid]), np.concatenate([mid, hi])


_TS_TMAX = 6.1


def _tanh_sinh(fo, c, d, tol, rtol, budget, floor, max_level=12):
    """Tanh-sinh rule on [c, d] for fo(x, xa, xb) with local offsets.

    Nodes closer than floor to either end are skipped; a plain f(x) cannot
    resolve them anyway. Offsets below 1e-100 L are never used: their weight
    is negligible for any integrable endpoint behaviour.
    """
    L = d - c
    floor = max(floor, 1e-100 * L)

    def level_sum(t):
        u = 0.5 * np.pi * np.sinh(t)
        with np.errstate(over="ignore"):
            da = L / (1.0 + np.exp(-2.0 * u))
            db = L / (1.0 + np.exp(2.0 * u))
            w = L * np.pi * np.cosh(t) / (np.exp(u) + np.exp(-u)) ** 2
        x = np.where(da <= db, c + da, d - db)
        keep = (da > floor) & (db > floor) & (w > 0)
        if not np.any(keep):
            return 0.0
        budget.charge(int(keep.sum()))
        fv = _checked(fo(x[keep], da[keep], db[keep]))
        return np.sum(w[keep] * fv)

    h = 1.0
    k = np.arange(-int(_TS_TMAX), int(_TS_TMAX) + 1, dtype=float)
    total = h * level_sum(k * h)
    for level in range(1, max_level + 1):
        h *= 0.5
        m = int(np.ceil(_TS_TMAX / h))
        kk = np.arange(-m, m + 1)
        kk = kk[kk % 2 == 1]
        new = 0.5 * total + h * level_sum(kk * h)
        err = abs(new - total)
        total = new
        if level >= 3 and err <= max(tol, rtol * abs(total)):
            return total, err
    raise ConvergenceError("tanh-sinh rule did not converge")


def _segment(fo, c, d, hc, hd, tol, rtol, budget, floor):
    """Integrate fo(x, xa, xb) over [c, d]; offsets are relative to c and d."""
    L = d - c
    if hc == LOG or hd == LOG:
        return _tanh_sinh(fo, c, d, tol, rtol, budget, floor)
    if isinstance(hc, Algebraic) and isinstance(hd, Algebraic):
        raise DomainError("split the interval before applying two algebraic hints")
    if isinstance(hc, Algebraic) or isinstance(hd, Algebraic):
        at_left = isinstance(hc, Algebraic)
        q = 1.0 / (1.0 - (hc if at_left else hd).alpha)

        def phi(u, ua, ub):
            near = L * u ** q
            far = -L * np.expm1(q * np.log1p(-np.minimum(ub, 1.0)))
            far = np.where(ub >= 1.0, L, far)
            jac = L * q * u ** (q - 1.0)
            if at_left:
                x = np.where(near <= far, c + near, d - far)
                return fo(x, near, far) * jac
            x = np.where(near <= far, d - near, c + far)
            return fo(x, far, near) * jac

        return _gk_adaptive(phi, 0.0, 1.0, tol, rtol, budget)

    def phi(u, ua, ub):
        return fo(u, ua, ub)

    return _gk_adaptive(phi, c, d, tol, rtol, budget)


def _engine(fo, a, b, hints, tol, rtol, max_evals, breakpoints=(), plain=False, budget=None):
    """Integrate fo(x, xa, xb) on [a, b] with xa, xb the offsets from a and b."""
    if not (np.isfinite(a) and np.isfinite(b)) or not a < b:
        raise DomainError("integration needs finite a < b")
    if tol <= 0:
        raise DomainError("tol must be positive")
    ha, hb = (_norm_hint(h) for h in hints)
    pts = [a] + sorted(p for p in breakpoints if a < p < b) + [b]
    if len(pts) == 2 and ha != SMOOTH and hb != SMOOTH:
        pts = [a, 0.5 * (a + b), b]
    segs = list(zip(pts[:-1], pts[1:]))
    floor = 8.0 * _EPS * max(abs(a), abs(b), 1.0) if plain else 0.0
    budget = budget or _Budget(max_evals)
    start = budget.evals
    value = 0.0
    err = 0.0
    for i, (c, d) in enumerate(segs):
        hc = ha if i == 0 else SMOOTH
        hd = hb if i == len(segs) - 1 else SMOOTH
        off_a = c - a
        off_b = b - d

        def local(x, xa, xb, off_a=off_a, off_b=off_b):
            return fo(x, off_a + xa, off_b + xb)

        v, e = _segment(local, c, d, hc, hd, tol / len(segs), rtol, budget, floor)
        value = value + v
        err += e
    return QuadResult(value, float(err), budget.evals - start)


def _wrap(f, offsets):
    if offsets:
        return f
    return lambda x, xa, xb: f(x)


def integrate(f, a, b, hints=(SMOOTH, SMOOTH), tol=1e-10, *, rtol=0.0, offsets=False,
              breakpoints=(), max_evals=1_000_000):
    """Integrate f over [a, b].

    hints: pair of endpoint behaviours, each SMOOTH, LOG or Algebraic(alpha).
    tol is absolute; rtol (default 0) optionally relaxes it relative to the
    value. Returns a QuadResult.
    """
    return _engine(_wrap(f, offsets), a, b, hints, tol, rtol, max_evals, breakpoints,
                   plain=not offsets)


def integrate_pv(f, x0, a, b, tol=1e-8, hints=(SMOOTH, SMOOTH), *, tricomi=False,
                 offsets=False, rtol=0.0, max_evals=1_000_000):
    """Principal value of the integral of f(xi)/(x0 - xi) over [a, b].

    Computed as the regular integral of [f(xi) - f(x0)]/(x0 - xi) plus
    f(x0) log((x0 - a)/(b - x0)).  With tricomi=True the result is divided
    by pi, the finite Hilbert transform normalization.
    """
    if not a < x0 < b:
        raise DomainError("principal value needs a < x0 < b")
    F = _wrap(f, offsets)
    f0 = np.asarray(F(np.array([x0]), np.array([x0 - a]), np.array([b - x0])))[0]
    left_b = b - x0
    right_a = x0 - a
    ha, hb = hints

    def left(x, xa, xb):
        return (F(x, xa, left_b + xb) - f0) / xb

    def right(x, xa, xb):
        return -(F(x, right_a + xa, xb) - f0) / xa

    drop = not offsets
    r1 = _engine(left, a, x0, (ha, SMOOTH), 0.5 * tol, rtol, max_evals, plain=drop)
    r2 = _engine(right, x0, b, (SMOOTH, hb), 0.5 * tol, rtol, max_evals, plain=drop)
    value = r1.value + r2.value + f0 * np.log((x0 - a) / (b - x0))
    err = r1.err_estimate + r2.err_estimate
    evals = r1.evals + r2.evals + 1
    if tricomi:
        value = value / np.pi
        err = err / np.pi
    return QuadResult(value, err, evals)


@lru_cache(maxsize=32)
def _gl(n):
    x, w = roots_legendre(n)
    return x, w


def _graded_panel_rule(lo, hi, n, grade_lo, grade_hi):
    """Gauss-Legendre on [lo, hi], optionally graded toward either end.

    The map v -> v - sin(2 pi v)/(2 pi) flattens the integrand at a graded
    end, so logarithmic or square-root behaviour there no longer stalls the
    rule. Ungraded ends keep plain Gauss-Legendre.
    """
    x, w = _gl(n)
    v = 0.5 * (x + 1.0)
    dv = 0.5 * w
    if grade_lo and grade_hi:
        psi = v - np.sin(2 * np.pi * v) / (2 * np.pi)
        dpsi = 1.0 - np.cos(2 * np.pi * v)
    elif grade_lo:
        psi = v - np.sin(np.pi * v) / np.pi
        dpsi = 1.0 - np.cos(np.pi * v)
    elif grade_hi:
        psi = v + np.sin(np.pi * (1.0 - v)) / np.pi
        dpsi = 1.0 - np.cos(np.pi * (1.0 - v))
    else:
        psi, dpsi = v, np.ones_like(v)
    L = hi - lo
    return lo + L * psi, dv * dpsi * L


def _axis_rule(panels, n):
    xs, ws = [], []
    for lo, hi, glo, ghi in panels:
        x, w = _graded_panel_rule(lo, hi, n, glo, ghi)
        xs.append(x)
        ws.append(w)
    return np.concatenate(xs), np.concatenate(ws)


def _theta_panels(breaks):
    inner = sorted(t for t in breaks if 0 < t < np.pi)
    edges = [0.0] + inner + [np.pi]
    return [(lo, hi, i > 0, i < len(edges) - 2)
            for i, (lo, hi) in enumerate(zip(edges[:-1], edges[1:]))]


def _phi_panels(breaks):
    pts = sorted({float(np.mod(p, 2 * np.pi)) for p in breaks})
    ends = pts[1:] + [pts[0] + 2 * np.pi]
    return [(lo, hi, True, True) for lo, hi in zip(pts, ends)]


def integrate_sphere(g, tol=1e-8, *, theta_breaks=(), phi_breaks=None, n_start=16,
                     max_theta=2048, max_phi=4096):
    """Surface integral of g(X, Y, Z) over the unit sphere with measure d sigma / 4 pi.

    Spherical coordinates with the bounded combination g sin(theta). The
    theta axis uses Gauss-Legendre panels split at theta_breaks (graded
    toward each break); phi uses the periodic trapezoid rule, or graded
    panels between phi_breaks (non-smooth azimuths) when given. Nodes double until two successive
    values differ by at most tol.
    """
    tpanels = _theta_panels(theta_breaks)
    ppanels = _phi_panels(phi_breaks) if phi_breaks else None
    n = n_start
    prev = None
    evals = 0
    while True:
        th, wt = _axis_rule(tpanels, max(4, n // len(tpanels)))
        m = 2 * n
        if ppanels is None:
            ph = 2 * np.pi * np.arange(m) / m
            wp = np.full(m, 2 * np.pi / m)
        else:
            ph, wp = _axis_rule(ppanels, max(4, m // len(ppanels)))
        st = np.sin(th)[:, None]
        X = st * np.cos(ph)[None, :]
        Y = st * np.sin(ph)[None, :]
        Z = np.broadcast_to(np.cos(th)[:, None], X.shape)
        vals = _checked(g(X, Y, Z))
        evals += X.size
        val = np.einsum("i,ij,j->", wt * np.sin(th), vals, wp) / (4 * np.pi)
        if prev is not None:
            err = abs(val - prev)
            if err <= tol:
                return QuadResult(val, float(err), evals)
        prev = val
        n *= 2
        if n > max_theta or 2 * n > max_phi:
            raise ConvergenceError("sphere rule did not converge within the node cap")


def integrate_2d(f, rect, hints=((SMOOTH, SMOOTH), (SMOOTH, SMOOTH)), tol=1e-8, *,
                 offsets=False, max_evals=5_000_000):
    """Iterated integral over rect = ((x0, x1), (y0, y1)).

    The inner integral (over y) runs at tolerance tol/10. With offsets=True
    f is called as f(x, y, xa, xb, ya, yb).
    """
    (x0, x1), (y0, y1) = rect
    hx, hy = hints
    budget = _Budget(max_evals)

    def outer(x, xa, xb):
        out = []
        for xi, xai, xbi in zip(np.atleast_1d(x), np.atleast_1d(xa), np.atleast_1d(xb)):
            if offsets:
                def inner(y, ya, yb, xi=xi, xai=xai, xbi=xbi):
                    return f(xi, y, xai, xbi, ya, yb)
            else:
                def inner(y, ya, yb, xi=xi):
                    return f(xi, y)
            r = _engine(inner, y0, y1, hy, tol / 10.0, 0.0, max_evals, plain=not offsets,
                        budget=budget)
            out.append(r.value)
        return np.array(out)

    r = _engine(outer, x0, x1, hx, tol, 0.0, max_evals, plain=not offsets, budget=budget)
    return QuadResult(r.value, r.err_estimate, budget.evals)
