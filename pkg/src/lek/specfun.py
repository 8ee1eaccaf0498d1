"""Scalar special functions.

Complete elliptic integrals by the arithmetic-geometric mean, complex
log-gamma (Lanczos), digamma and trigamma-derivative psi'', hypergeometric
series at unit argument, Bessel J0, and the Landen / inverse-modulus
transformations of K.

Most functions accept scalars or numpy arrays and return the same shape.
"""

import math

import numpy as np

from .errors import DivergenceError, DomainError, PoleError

ZETA3 = 1.2020569031595942853997381615114
ZETA5 = 1.0369277551433699263313654864570
EULER_GAMMA = 0.57721566490153286060651209008240
GAMMA_QUARTER = 3.6256099082219083119306851558677

_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def _prep(x):
    arr = np.asarray(x)
    if not np.all(np.isfinite(arr)):
        raise DomainError("non-finite argument")
    return arr, arr.ndim == 0


def _out(arr, scalar):
    if scalar:
        v = arr.item() if isinstance(arr, np.ndarray) else arr
        return v
    return arr


def sinpi(z):
    """sin(pi z) with exact zeros at the integers (real or complex z)."""
    z = np.asarray(z)
    n = np.round(z.real)
    s = np.sin(np.pi * (z - n))
    return np.where(np.fmod(n, 2.0) == 0.0, s, -s)


def cospi(z):
    """cos(pi z) with exact zeros at the half-integers."""
    z = np.asarray(z)
    n = np.round(z.real)
    r = z - n
    c = np.where(r == 0.5, 0.0, np.where(r == -0.5, 0.0, np.cos(np.pi * r)))
    return np.where(np.fmod(n, 2.0) == 0.0, c, -c)


# ---------------------------------------------------------------- elliptic

def agm(a, b):
    """Arithmetic-geometric mean, elementwise.

    For complex input the geometric mean takes the root closer to the
    arithmetic mean at every step, which gives the analytic branch.
    """
    a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
    dtype = np.result_type(a, b, float)
    a = a.astype(dtype)
    b = b.astype(dtype)
    cplx = np.iscomplexobj(a)
    for _ in range(64):
        if np.all(np.abs(a - b) <= 1e-16 * np.abs(a)):
            break
        an = 0.5 * (a + b)
        bn = np.sqrt(a * b)
        if cplx:
            bn = np.where(np.abs(an - bn) > np.abs(an + bn), -bn, bn)
        if np.array_equal(an, a) and np.array_equal(bn, b):
            break
        a, b = an, bn
    return 0.5 * (a + b)


def _k_of_kp(kp):
    """K at complementary modulus kp, i.e. K(sqrt(1 - kp^2)). No checks."""
    kp = np.asarray(kp)
    small = np.abs(kp) ** 2 < 1e-8
    with np.errstate(divide="ignore", invalid="ignore"):
        safe = np.where(small, 1.0, kp)
        out = np.pi / (2.0 * agm(1.0, safe))
        if np.any(small):
            q = np.where(small, kp, 1.0)
            q2 = q * q
            L = np.log(4.0 / q)
            series = L + 0.25 * q2 * (L - 1.0) + (9.0 / 64.0) * q2 * q2 * (L - 7.0 / 6.0)
            out = np.where(small, series, out)
    return out


def _ke_of_kp(kp):
    """(K, E) at real complementary modulus kp in [0, 1]. No checks."""
    kp = np.asarray(kp, dtype=float)
    small = kp * kp < 1e-8
    b0 = np.where(small, 1.0, kp)
    a = np.ones_like(b0)
    b = b0.copy()
    total = 0.5 * (1.0 - b0 * b0)
    weight = 0.5
    # c_{n+1} = c_n^2 / (4 a_{n+1}) instead of (a_n - b_n)/2, which stalls at ulp noise
    c = 0.5 * (1.0 - b0)
    for _ in range(64):
        weight *= 2.0
        total = total + weight * c * c
        a, b = 0.5 * (a + b), np.sqrt(a * b)
        if np.all(np.abs(c) <= 1e-17 * np.abs(a)):
            break
        c = c * c / (4.0 * (0.5 * (a + b)))
    K = np.pi / (2.0 * a)
    E = K * (1.0 - total)
    if np.any(small):
        with np.errstate(divide="ignore", invalid="ignore"):
            q = np.where(small, kp, 1.0)
            q2 = q * q
            L = np.log(4.0 / q)
            Ks = L + 0.25 * q2 * (L - 1.0) + (9.0 / 64.0) * q2 * q2 * (L - 7.0 / 6.0)
            Es = 1.0 + 0.5 * q2 * (L - 0.5) + (3.0 / 16.0) * q2 * q2 * (L - 13.0 / 12.0)
            Es = np.where(q == 0.0, 1.0, Es)
        K = np.where(small, Ks, K)
        E = np.where(small, Es, E)
    return K, E


def elliptic_k(k):
    r"""Complete elliptic integral of the first kind K(k).

    Real k must satisfy |k| < 1. Complex k is accepted anywhere off the
    cuts (-inf, -1] and [1, inf).
    """
    k, scalar = _prep(k)
    if np.iscomplexobj(k):
        on_cut = (k.imag == 0) & (np.abs(k.real) >= 1)
        if np.any(on_cut):
            raise DomainError("K(k) is undefined on the cut |k| >= 1")
        kp = np.sqrt(1.0 - k * k)
        return _out(_k_of_kp(kp), scalar)
    if np.any(np.abs(k) >= 1):
        raise DomainError("K(k) requires |k| < 1 for real k")
    kp = np.sqrt((1.0 - k) * (1.0 + k))
    return _out(_k_of_kp(kp), scalar)


def elliptic_kp(kp):
    """K(sqrt(1 - kp^2)), i.e. K evaluated from its complementary modulus.

    Accurate when the modulus itself is close to 1, which is where the
    catalog integrands need it. Real kp > 1 gives K at an imaginary modulus.
    """
    kp, scalar = _prep(kp)
    if np.iscomplexobj(kp):
        if np.any((kp.imag == 0) & (kp.real <= 0)):
            raise DomainError("complementary modulus on the cut")
    elif np.any(kp <= 0):
        raise DomainError("complementary modulus must be positive")
    return _out(_k_of_kp(kp), scalar)


def elliptic_e(k):
    """Complete elliptic integral of the second kind E(k) for real |k| <= 1."""
    k, scalar = _prep(k)
    if np.iscomplexobj(k) or np.any(np.abs(k) > 1):
        raise DomainError("E(k) requires real |k| <= 1")
    kp = np.sqrt(np.clip((1.0 - k) * (1.0 + k), 0.0, None))
    return _out(_ke_of_kp(kp)[1], scalar)


def elliptic_ep(kp):
    """E(sqrt(1 - kp^2)) for real kp in [0, 1]."""
    kp, scalar = _prep(kp)
    if np.iscomplexobj(kp) or np.any((kp < 0) | (kp > 1)):
        raise DomainError("complementary modulus must lie in [0, 1]")
    return _out(_ke_of_kp(kp)[1], scalar)


def elliptic_ke(k):
    """Return (K(k), E(k)) from one AGM run, real |k| < 1."""
    k, scalar = _prep(k)
    if np.iscomplexobj(k) or np.any(np.abs(k) >= 1):
        raise DomainError("requires real |k| < 1")
    K, E = _ke_of_kp(np.sqrt((1.0 - k) * (1.0 + k)))
    return _out(K, scalar), _out(E, scalar)


def elliptic_derivatives(k):
    """(dK/dk, dE/dk) for 0 < k < 1."""
    k, scalar = _prep(k)
    if np.iscomplexobj(k) or np.any((k <= 0) | (k >= 1)):
        raise DomainError("derivatives need 0 < k < 1")
    K, E = _ke_of_kp(np.sqrt((1.0 - k) * (1.0 + k)))
    dK = E / (k * (1.0 - k) * (1.0 + k)) - K / k
    dE = (E - K) / k
    return _out(dK, scalar), _out(dE, scalar)


def landen_descend(t):
    """Modulus 2 t^(1/4) / (1 + sqrt t) of the Landen map K(sqrt t)(1+sqrt t) = K(k2)."""
    t, scalar = _prep(t)
    if np.iscomplexobj(t) or np.any((t < 0) | (t >= 1)):
        raise DomainError("Landen map needs 0 <= t < 1")
    return _out(2.0 * t ** 0.25 / (1.0 + np.sqrt(t)), scalar)


def inverse_modulus(t):
    """Real and imaginary parts of K(sqrt t) for t > 1.

    Branch: K(sqrt z) = [K(sqrt(1/z)) - i K(sqrt((z-1)/z))] / sqrt z.
    """
    t, scalar = _prep(t)
    if np.iscomplexobj(t) or np.any(t <= 1):
        raise DomainError("inverse modulus needs real t > 1")
    r = np.sqrt(t)
    re = _k_of_kp(np.sqrt((t - 1.0) / t)) / r
    im = -_k_of_kp(1.0 / r) / r
    return _out(re, scalar), _out(im, scalar)


# ---------------------------------------------------------------- gamma family

_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_LANCZOS_G = 7.0


def _is_nonpositive_int(z):
    z = np.asarray(z)
    return (np.imag(z) == 0) & (np.real(z) <= 0) & (np.real(z) == np.round(np.real(z)))


def _lngamma_right(z):
    z = z - 1.0
    x = np.full_like(z, _LANCZOS[0])
    for i, c in enumerate(_LANCZOS[1:], 1):
        x = x + c / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * np.log(t) - t + np.log(x)


def ln_gamma(z):
    """log Gamma(z) for complex z; exp of the result is Gamma(z).

    Lanczos approximation (g = 7, nine coefficients) in Re z >= 1/2 and the
    reflection formula elsewhere.
    """
    z, scalar = _prep(z)
    if np.any(_is_nonpositive_int(z)):
        raise PoleError("Gamma has a pole at non-positive integers")
    z = z.astype(complex)
    left = z.real < 0.5
    zr = np.where(left, 1.0 - z, z)
    out = _lngamma_right(zr)
    if np.any(left):
        refl = np.log(np.pi) - np.log(sinpi(z)) - out
        out = np.where(left, refl, out)
    return _out(out, scalar)


def gamma(z):
    """Gamma(z); real input gives real output."""
    zz, scalar = _prep(z)
    val = np.exp(ln_gamma(zz))
    if not np.iscomplexobj(zz):
        val = np.real(val)
    return _out(val, scalar)


def rgamma(z):
    """1/Gamma(z), equal to zero at the poles of Gamma."""
    zz, scalar = _prep(z)
    poles = _is_nonpositive_int(zz)
    safe = np.where(poles, 1.0, zz)
    val = np.exp(-np.asarray(ln_gamma(safe)))
    if not np.iscomplexobj(zz):
        val = np.real(val)
    val = np.where(poles, 0.0, val)
    return _out(val, scalar)


_BERN = (1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6)


def digamma(z):
    """psi(z) = d/dz log Gamma(z) for a complex scalar."""
    z = complex(z)
    if z.imag == 0 and z.real <= 0 and z.real == round(z.real):
        raise PoleError("digamma pole")
    if z.real < 0.5:
        return digamma(1.0 - z) - np.pi * complex(cospi(z)) / complex(sinpi(z))
    acc = 0.0
    while z.real < 10.0:
        acc -= 1.0 / z
        z += 1.0
    zi2 = 1.0 / (z * z)
    s = 0.0
    p = zi2
    for k, b in enumerate(_BERN, 1):
        s += b / (2 * k) * p
        p *= zi2
    return acc + np.log(z) - 0.5 / z - s


def polygamma2(z):
    """psi''(z), the third derivative of log Gamma.

    Upward recurrence psi''(z) = psi''(z+1) - 2/z^3 until Re z >= 12, then the
    asymptotic series. Real input gives a real result.
    """
    zz, scalar = _prep(z)
    if np.any(_is_nonpositive_int(zz)):
        raise PoleError("psi'' has poles at non-positive integers")
    real_in = not np.iscomplexobj(zz)
    w = zz.astype(complex)
    acc = np.zeros_like(w)
    while True:
        low = w.real < 12.0
        if not np.any(low):
            break
        acc = np.where(low, acc - 2.0 / w ** 3, acc)
        w = np.where(low, w + 1.0, w)
    wi = 1.0 / w
    wi2 = wi * wi
    s = -wi2 - wi2 * wi
    p = wi2 * wi2
    for k, b in enumerate(_BERN, 1):
        s = s - (2 * k + 1) * b * p
        p = p * wi2
    out = acc + s
    if real_in:
        out = out.real
    return _out(out, scalar)


# ---------------------------------------------------------------- pFq at 1

def _as_int_nonpos(a):
    if a.imag == 0 and a.real <= 0 and a.real == round(a.real):
        return int(-round(a.real))
    return None


def _tail_extrapolate(checkpoints, s):
    """Limit of partial sums S_N whose tails behave like N^-s (d0 + d1/N + ...).

    checkpoints holds S_N at N = N0, 2 N0, 4 N0, ...; each sweep removes one
    power N^-(s+j).  Returns (estimate, error estimate).
    """
    row = list(checkpoints)
    prev = None
    j = 0
    while len(row) > 1:
        f = 2.0 ** (-(s + j))
        row = [(row[i + 1] - f * row[i]) / (1.0 - f) for i in range(len(row) - 1)]
        if len(row) == 1:
            break
        prev = row[-2]
        j += 1
    est = row[-1]
    err = abs(est - prev) if prev is not None else abs(est)
    return est, err


def pfq_unit(numerators, denominators, *, max_terms=100_000):
    """Generalized hypergeometric series pFq(a; b; 1).

    Terminating series are summed exactly. Otherwise terms are accumulated
    by their ratio with compensated summation, stopping once three
    consecutive terms fall below 1e-16 of the running sum. At unit argument
    the terms usually decay only algebraically, like n^-(s+1) with
    s = sum(b) - sum(a); the partial sums at N0, 2N0, ..., 64N0 are then
    extrapolated in the known tail powers. Raises DivergenceError when
    neither route reaches 1e-12 relative accuracy within max_terms terms.
    """
    a = [complex(x) for x in numerators]
    b = [complex(x) for x in denominators]
    stop = None
    for x in a:
        m = _as_int_nonpos(x)
        if m is not None:
            stop = m if stop is None else min(stop, m)
    for x in b:
        m = _as_int_nonpos(x)
        if m is not None and (stop is None or m < stop):
            raise PoleError("denominator parameter hits a pole before termination")
    s = None
    if stop is None:
        if len(a) > len(b) + 1:
            raise DivergenceError("pFq with p > q+1 diverges at unit argument")
        if len(a) == len(b) + 1:
            s = sum(b) - sum(a)
            if s.real <= 0:
                raise DivergenceError("unit-argument series needs Re(sum b - sum a) > 0")

    scale = max([abs(x) for x in a + b] + [1.0])
    n0 = 64 * max(1, int(math.ceil(scale / 8.0)))
    marks = {n0 * 2 ** i: i for i in range(7)}
    checkpoints = []
    term = 1.0 + 0j
    total = 1.0 + 0j
    comp = 0j
    small = 0
    n = 0
    limit = stop if stop is not None else max_terms
    while n < limit:
        r = 1.0 + 0j
        for x in a:
            r *= x + n
        for x in b:
            r /= x + n
        r /= n + 1
        term *= r
        n += 1
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        if stop is not None:
            continue
        if abs(term) < 1e-16 * abs(total):
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
        if s is not None and (n + 1) in marks:
            checkpoints.append(total)
            if len(checkpoints) == 7:
                est, err = _tail_extrapolate(checkpoints, s)
                if err <= 1e-12 * max(abs(est), 1e-300):
                    return est
    if stop is not None:
        return total
    raise DivergenceError(f"pFq did not converge within {max_terms} terms")


# ---------------------------------------------------------------- Bessel J0

def bessel_j0(x):
    """Bessel function J0(x), real x.

    Power series for |x| <= 12, Hankel asymptotic expansion beyond.
    """
    x, scalar = _prep(x)
    x = np.abs(x.astype(float))
    out = np.empty_like(x)
    near = x <= 12.0
    if np.any(near):
        xs = x[near]
        q = -0.25 * xs * xs
        term = np.ones_like(xs)
        s = np.ones_like(xs)
        for k in range(1, 80):
            term = term * q / (k * k)
            s = s + term
            if np.all(np.abs(term) < 1e-17 * np.maximum(np.abs(s), 1e-3)):
                break
        out[near] = s
    far = ~near
    if np.any(far):
        xf = x[far]
        P = np.zeros_like(xf)
        Q = np.zeros_like(xf)
        ak = np.ones_like(xf)
        prev = np.full_like(xf, np.inf)
        done = np.zeros(xf.shape, dtype=bool)
        for k in range(0, 40):
            mag = np.abs(ak)
            done |= mag > prev
            contrib = np.where(done, 0.0, ak)
            sgn = (-1) ** (k // 2)
            if k % 2 == 0:
                P = P + sgn * contrib
            else:
                Q = Q - sgn * contrib
            prev = np.where(done, prev, mag)
            ak = ak * (2 * k + 1) ** 2 / ((k + 1) * 8.0 * xf)
        ph = xf - 0.25 * np.pi
        out[far] = np.sqrt(2.0 / (np.pi * xf)) * (P * np.cos(ph) - Q * np.sin(ph))
    return _out(out, scalar)
