"""T_{mu,nu} identities: reflections, recursion, and closed forms against quadrature."""

import math

from .clebsch import recursion_terms, t_closed, t_direct_result
from .core import IdentityCase, degree_sample

SUITE = "cg"


def _reflections(mu, nu):
    mu, nu = complex(mu), complex(nu)
    return [t_direct_result(-mu - 1, nu), t_direct_result(mu, -nu - 1),
            t_direct_result(-mu - 1, -nu - 1)]


def _td(mu, nu):
    return t_direct_result(mu, nu)


def _pair(rng, avoid_half=False, real=False):
    return {"mu": degree_sample(rng, complex_part=not real),
            "nu": degree_sample(rng, complex_part=not real, avoid_half=avoid_half)}


def _near(rng, centres, radius=5e-3):
    """A point within ``radius`` of one of ``centres`` half of the time."""
    c = centres[int(rng.integers(len(centres)))]
    return float(c + rng.uniform(-radius, radius))


def _s_mu_n(rng):
    n = int(rng.integers(0, 4))
    if rng.random() < 0.5:
        mu = _near(rng, [2 * n + 1.0, 2 * n + 3.0, -2.0 * n - 2])
    else:
        mu = degree_sample(rng)
    return {"mu": mu, "n": n}


def _s_2m_nu(rng):
    m = int(rng.integers(0, 3))
    nu = _near(rng, [m - 0.5, m + 0.5, -0.5]) if rng.random() < 0.5 else degree_sample(rng)
    return {"m": m, "nu": nu}


def _s_2m_n_half(rng):
    return {"m": int(rng.integers(0, 4)), "n": int(rng.integers(-2, 4))}


def _s_nu_nu(rng):
    if rng.random() < 0.5:
        return {"nu": _near(rng, [-0.5, -2 / 3, -1 / 3 - 1, -4 / 3 + 0.0])}
    return {"nu": degree_sample(rng, avoid_int=0.0)}


def _s_two_nu_minus1(rng):
    return {"nu": _near(rng, [0.0]) if rng.random() < 0.5 else degree_sample(rng, re=(-1.5, 1.5))}


def _s_two_nu_plus2(rng):
    return {"nu": _near(rng, [-1.0]) if rng.random() < 0.5 else degree_sample(rng, re=(-2.0, 0.5))}


def _s_zero_nu(rng):
    return {"nu": _near(rng, [-0.5]) if rng.random() < 0.5 else degree_sample(rng, avoid_int=0.0)}


def _s_mn(rng):
    return {"m": int(rng.integers(0, 7)), "n": int(rng.integers(0, 4))}


def _closed(selector, degree):
    def rhs(**p):
        return t_closed(selector, **p)

    def lhs(**p):
        mu, nu = degree(**p)
        return t_direct_result(mu, nu)
    return lhs, rhs


def _recursion(mu, nu):
    return recursion_terms(mu, nu)[0]


def _source(mu, nu):
    return recursion_terms(mu, nu)[1]


def cases():
    mk = []

    def add(cid, anchor, domain, selector, degree, sampler, tol="standard", atol=1e-10):
        lhs, rhs = _closed(selector, degree)
        mk.append(IdentityCase(cid, SUITE, anchor, domain, lhs, rhs, tol, sampler=sampler,
                               atol=atol))

    mk.append(IdentityCase(
        "eq11_symmetry", SUITE, "T_{mu,nu} = T_{-mu-1,nu} = T_{mu,-nu-1} = T_{-mu-1,-nu-1}",
        "mu, nu complex in the degree envelope", _reflections, _td, "tight", sampler=_pair,
        atol=1e-10))
    mk.append(IdentityCase(
        "eq12_recursion", SUITE,
        "(mu+1)^2[(mu+1)^2-(2nu+1)^2] T_{mu+1,nu} - mu^2[mu^2-(2nu+1)^2] T_{mu-1,nu} = 4(2mu+1) sin(mu pi) sin(nu pi)/pi^2",
        "mu, nu complex in the degree envelope", _recursion, _source, "pv",
        sampler=_pair, atol=1e-6))
    add("eq13_f43", "T = (2/pi^2) sin(mu pi) sin(nu pi)/(mu(mu+1)) [4F3(..,-nu;..,1-nu)/nu - 4F3(..,nu+1;..,nu+2)/(nu+1)]",
        "mu, nu non-integer", "f43", lambda mu, nu: (mu, nu),
        lambda rng: _pair(rng), "pv", 1e-9)
    add("eq13s_f54", "T = (2/pi) sin(mu pi) cos(nu pi)/(2nu+1) [5F4(1/2,1/2,-mu/2,-nu,1+nu;..)/mu - 5F4(1/2,1/2,(1+mu)/2,..)/(mu+1)]",
        "mu, nu non-integer, |nu + 1/2| >= 1e-2", "f54", lambda mu, nu: (mu, nu),
        lambda rng: _pair(rng, avoid_half=True), "pv", 1e-9)
    add("eq13_Tmun", "T_{mu,n} = (-1)^n pi G((2n+1-mu)/2) G((2n+2+mu)/2) / (G((1-mu)/2)^2 G((mu+2)/2)^2 G((2n+2-mu)/2) G((2n+3+mu)/2))",
        "mu complex, n in {0..3}", "mu_n", lambda mu, n: (mu, n), _s_mu_n)
    add("eq13_T2mnu", "T_{2m,nu} = pi cos(nu pi) G(nu+1/2-m) G(nu+1+m) / (G(1/2-m)^2 G(m+1)^2 G(nu+1-m) G(nu+3/2+m))",
        "m in {0,1,2}, nu complex", "two_m_nu", lambda m, nu: (2 * m, nu), _s_2m_nu)
    add("eq13_T2mnhalf", "T_{2m,n+1/2} = -((-1)^n/pi) G(m+1/2)^2 G(m-n-1/2) G(m+n+3/2) / (G(m+1)^2 G(m-n) G(m+n+2))",
        "m in {0..3}, n in {-2..3}", "two_m_n_half", lambda m, n: (2 * m, n + 0.5), _s_2m_n_half)
    add("eq13_Tnunu", "T_{nu,nu} = lim (1+2cos(pi z))/3 pi G((z+1)/2) G((3z+2)/2) / (G((1-z)/2)^2 G((z+2)/2)^3 G((3z+3)/2))",
        "nu complex, including points near removable singularities", "nu_nu",
        lambda nu: (nu, nu), _s_nu_nu)
    add("eq13_T2nu1", "T_{2nu-1,nu} = lim sin(pi z) sin(2 pi z)/(pi z)^2",
        "nu complex", "two_nu_minus1", lambda nu: (2 * complex(nu) - 1, nu), _s_two_nu_minus1)
    add("eq13_T2nu2", "T_{2nu+2,nu} = -lim sin(pi z) sin(2 pi z)/(pi (z+1))^2",
        "nu complex", "two_nu_plus2", lambda nu: (2 * complex(nu) + 2, nu), _s_two_nu_plus2)
    add("eq13_Tmn", "T_{m,n} for integers (squared 3-j value), zero for odd m or m > 2n",
        "m in {0..6}, n in {0..3}", "mu_n", lambda mu, n: (mu, n),
        lambda rng: {"mu": _s_mn(rng)["m"], "n": int(rng.integers(0, 4))})
    add("eq14_T0nu", "T_{0,nu} = 2 cos(nu pi)/(2nu+1)", "nu complex", "zero_nu",
        lambda nu: (0, nu), _s_zero_nu)
    mk.append(IdentityCase(
        "eq13_T0n", SUITE, "T_{0,n} = 2(-1)^n/(2n+1)", "n in {0..6}",
        lambda n: t_direct_result(0, n), lambda n: 2 * (-1) ** n / (2 * n + 1), "tight",
        sampler=lambda rng: {"n": int(rng.integers(0, 7))}))
    mk.append(IdentityCase(
        "eq13_Tzero_minus_half", SUITE, "T_{0,-1/2} = int P_{-1/2}(x) P_{-1/2}(-x) dx = pi",
        "parameter-free", lambda: [t_direct_result(0, -0.5), t_closed("zero_nu", nu=-0.5)],
        lambda: math.pi, "tight"))
    return mk
