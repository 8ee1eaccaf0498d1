"""Acceptance criteria, one check each, at the required tolerances.

Every check prints a single ``[PASS]``/``[FAIL]`` line. Under pytest the lines
are also collected into an "acceptance criteria" section of the summary;
``python tests/test_acceptance.py`` prints them directly.
"""

import itertools
import json
import math
import os
import sys
import tempfile
import time

import numpy as np
import pytest

from lek.catalog import evaluate_case, get_case, sample_params, t_recursion_residual
from lek.cli import main as cli_main
from lek.legendre import p_nu
from lek.specfun import elliptic_e, elliptic_ep, elliptic_k, elliptic_kp, gamma

SEED = 42
CRITERIA = {}


def criterion(number, title):
    def register(fn):
        CRITERIA[number] = (title, fn)
        return fn
    return register


def _run(case_id, n, rtol, seed=SEED, points=None):
    case = get_case(case_id)
    pts = sample_params(case, n, seed) if points is None else points
    return [evaluate_case(case, p, rtol=rtol) for p in pts]


def _worst(results):
    bad = [r for r in results if not r.passed]
    rel = max((r.rel_err for r in results if math.isfinite(r.rel_err)), default=0.0)
    return bad, rel


def _summary(results):
    bad, rel = _worst(results)
    tail = f"; first failure {bad[0].case_id} {bad[0].params} {bad[0].error or ''}" if bad else ""
    return not bad, f"{len(results)} points, max rel {rel:.1e}{tail}"


def _pairwise(values, rtol):
    worst = max(abs(a - b) / abs(b) for a, b in itertools.combinations(values, 2))
    return worst <= rtol, worst


@criterion(1, "six integrals for Gamma(1/4)^8/(128 pi^2) agree; <= 120 s")
def c1():
    t0 = time.perf_counter()
    r = _run("eq49_wan_chain", 1, 1e-7)[0]
    dt = time.perf_counter() - t0
    target = math.gamma(0.25) ** 8 / (128 * math.pi ** 2)
    ok_pairs, worst = _pairwise(r.members, 1e-7)
    to_target = max(abs(m - target) / target for m in r.members)
    ok = len(r.members) == 6 and ok_pairs and to_target <= 1e-7 and r.passed and dt <= 120
    return ok, f"pairwise {worst:.1e}, vs target {to_target:.1e}, {dt:.1f} s"


@criterion(2, "2 int_0^1 K(sqrt t) K(sqrt(1-t)) dt = pi^3/4, rel 1e-9; <= 5 s")
def c2():
    t0 = time.perf_counter()
    r = _run("eq15", 1, 1e-9)[0]
    dt = time.perf_counter() - t0
    rel = abs(r.lhs - math.pi ** 3 / 4) / (math.pi ** 3 / 4)
    return r.passed and rel <= 1e-9 and dt <= 5, f"rel {rel:.1e}, {dt:.2f} s"


@criterion(3, "|2 int (2E-K)(2E'-K') dt| <= 1e-8")
def c3():
    r = _run("eq16", 1, 0.0)[0]
    worst = max(abs(m) for m in r.members[:1] + [r.lhs])
    return worst <= 1e-8 and r.error is None, f"abs {worst:.1e}"


@criterion(4, "2 int [K(sqrt(1-t))]^2 K(sqrt t) dt = Gamma(1/4)^8/(192 pi^2), rel 1e-7")
def c4():
    r = _run("eq17", 1, 1e-7)[0]
    target = math.gamma(0.25) ** 8 / (192 * math.pi ** 2)
    rel = max(abs(m - target) / target for m in r.members)
    return r.passed and rel <= 1e-7, f"rel {rel:.1e}"


@criterion(5, "degrees -1/3, -1/4, -1/6 gamma values, rel 1e-6; <= 60 s each")
def c5():
    parts, ok = [], True
    for cid in ("eq18", "eq19", "eq20"):
        t0 = time.perf_counter()
        r = _run(cid, 1, 1e-6)[0]
        dt = time.perf_counter() - t0
        ok &= r.passed and dt <= 60
        parts.append(f"{cid} rel {r.rel_err:.1e} {dt:.2f} s")
    return ok, ", ".join(parts)


@criterion(6, "values sqrt(2) pi and -sqrt(2) pi/9, rel 1e-7")
def c6():
    targets = {"eq21": math.sqrt(2) * math.pi, "eq22": -math.sqrt(2) * math.pi / 9}
    parts, ok = [], True
    for cid, target in targets.items():
        r = _run(cid, 1, 1e-7)[0]
        rel = max(abs(m - target) / abs(target) for m in r.members)
        ok &= r.passed and rel <= 1e-7
        parts.append(f"{cid} rel {rel:.1e}")
    return ok, ", ".join(parts)


# removable-singularity centres of each closed form, matched to the case samplers
_CENTRES = {
    "eq13_Tmun": lambda p: ("mu", [2 * p["n"] + 1, 2 * p["n"] + 3, -2 * p["n"] - 2]),
    "eq13_T2mnu": lambda p: ("nu", [p["m"] - 0.5, p["m"] + 0.5, -0.5]),
    "eq13_Tnunu": lambda p: ("nu", [-0.5, -2 / 3, -4 / 3]),
    "eq14_T0nu": lambda p: ("nu", [-0.5]),
}


@criterion(7, "closed forms vs quadrature on 20 samples, near-singular included, rel 1e-6")
def c7():
    results, near = [], 0
    for cid, centres in _CENTRES.items():
        for r in _run(cid, 5, 1e-6):
            name, cs = centres(r.params)
            near += min(abs(complex(r.params[name]) - c) for c in cs) <= 5e-3
            results.append(r)
    ok, text = _summary(results)
    return ok and len(results) == 20 and near >= 2, f"{text}, {near} within 5e-3 of a singularity"


@criterion(8, "recursion residual <= 1e-6 on 10 samples")
def c8():
    pts = sample_params(get_case("eq12_recursion"), 10, SEED)
    res = [t_recursion_residual(p["mu"], p["nu"]) for p in pts]
    return max(res) <= 1e-6 and len(res) == 10, f"max residual {max(res):.1e}"


@criterion(9, "axial coupling on 20 samples (both regimes) and 4 specializations, rel 1e-8")
def c9():
    main = _run("eq6_hobson", 20, 1e-8)
    regimes = {r.params["theta1"] + r.params["theta2"] <= math.pi for r in main}
    spec = [r for cid in ("eq7_dagger", "eq7_ddagger", "eq8_dagger", "eq8_ddagger")
            for r in _run(cid, 5, 1e-8)]
    ok, text = _summary(main + spec)
    return ok and regimes == {True, False}, f"{text}, regimes seen {sorted(regimes)}"


@criterion(10, "Beltrami identities rel 1e-7 at 10 points; PV rel 1e-6 at 5 x")
def c10():
    ids = ("eq23_beltrami", "eq23p_beltrami", "eq23L_beltrami", "eq23pL_beltrami", "eq25_ke",
           "eq26_e", "eq26p_e", "eq27_e_imag", "eq29_duality", "eq30_duality")
    results = [r for cid in ids for r in _run(cid, 10, 1e-7)]
    xs = [{"x": x} for x in (-0.9, -0.5, 0.0, 0.5, 0.9)]
    results += [r for cid in ("eq31_pv", "eq32_pv") for r in _run(cid, 5, 1e-6, points=xs)]
    return _summary(results)


@criterion(11, "sphere and dual-form identities (complex ones componentwise), rel 1e-6 at 5 points")
def c11():
    ids = ("eq35_sphere", "eq35p_sphere", "eq36_sphere", "eq36L_sphere", "eq38_dual", "eq39_dual",
           "eq40_sphere_kk", "eq41_kk", "eq41L_kk", "eq43_sqr_comb", "eq44p_kik", "eq44pp_kik",
           "eq45_dual_forms", "eq45p_corner", "eq45ps_corner")
    return _summary([r for cid in ids for r in _run(cid, 5, 1e-6)])


@criterion(12, "Tricomi transforms of P_nu products and Neumann integrals, rel 1e-6")
def c12():
    results = _run("eq50_tricomi_pnu", 10, 1e-6)
    results += _run("eq51_tricomi_pn", 0, 1e-6,
                    points=[{"n": n, "x": x} for n in range(4) for x in (-0.45, 0.3)])
    neu = _run("eq54_neumann", 10, 1e-6)
    spread = [(complex(r.params["nu"]) - r.params["n"]).real for r in neu]
    xs = [{"x": x} for x in (-0.9, -0.5, 0.0, 0.5, 0.9)]
    results += neu + [r for cid in ("eq46_pv", "eq47_pv") for r in _run(cid, 5, 1e-6, points=xs)]
    ok, text = _summary(results)
    inside = all(-0.9 < s < 1.5 for s in spread)
    return ok and inside, f"{text}, Re(nu-n) in [{min(spread):.2f}, {max(spread):.2f}]"


@criterion(13, "quadruple products at 8 nu, zeta(5) and zeta(3) forms, rel 1e-6; <= 180 s")
def c13():
    t0 = time.perf_counter()
    results = _run("eq52_xpppp", 8, 1e-6) + _run("eq61_zeta5", 1, 1e-6) + _run("eq61_zeta3", 1, 1e-6)
    dt = time.perf_counter() - t0
    z5 = 1.0369277551433699263
    z3 = 1.2020569031595942854
    rel5 = abs(results[-2].lhs - z5) / z5
    rel3 = max(abs(m - z3) / z3 for m in results[-1].members)
    ok, text = _summary(results)
    return ok and rel5 <= 1e-6 and rel3 <= 1e-6 and dt <= 180, \
        f"{text}, zeta(5) rel {rel5:.1e}, zeta(3) rel {rel3:.1e}, {dt:.1f} s"


def _properties():
    rng = np.random.default_rng(SEED)
    out = {}
    worst = 0.0
    for _ in range(200):
        nu = complex(rng.uniform(-8, 8), rng.uniform(-4, 4))
        if abs(nu) > 8:
            nu = 8 * nu / abs(nu) * 0.99
        x = float(rng.uniform(-0.999, 1.0))
        a = p_nu(nu, x)
        worst = max(worst, abs(a - p_nu(-nu - 1, x)) / (1 + abs(a)))
    out["degree reflection"] = worst <= 1e-10
    worst = 0.0
    for _ in range(100):
        nu = complex(rng.uniform(-3, 3), rng.uniform(-2, 2))
        x = float(rng.uniform(-0.9, 0.95))
        lhs = (nu + 1) * p_nu(nu + 1, x)
        mid = (2 * nu + 1) * x * p_nu(nu, x)
        worst = max(worst, abs(lhs - mid + nu * p_nu(nu - 1, x)) / max(1.0, abs(lhs), abs(mid)))
    out["three-term recurrence"] = worst <= 1e-9
    for cid in ("endpoint_flux", "hansen_limit", "sonine_gegenbauer", "eq48_parseval", "eq58_hpb"):
        out[cid] = all(r.passed for r in _run(cid, 10, None))
    ok = True
    for k in np.logspace(-2, math.log10(0.99), 100):
        K, E, K1, E1 = elliptic_k(k), elliptic_e(k), elliptic_kp(k), elliptic_ep(k)
        ok &= abs(E * K1 + E1 * K - K * K1 - math.pi / 2) <= 1e-12
    out["Legendre relation"] = bool(ok)
    refl = rec = 0.0
    n = 0
    while n < 200:
        z = complex(rng.uniform(-14, 14), rng.uniform(-14, 14))
        near_pole = any(w.real <= 0.5 and abs(w - round(w.real)) < 0.1 for w in (z, 1 - z, z + 1))
        if abs(z) > 20 or near_pole:
            continue
        n += 1
        refl = max(refl, abs(gamma(z) * gamma(1 - z) * np.sin(np.pi * z) / np.pi - 1))
        g1 = gamma(z + 1)
        rec = max(rec, abs(g1 - z * gamma(z)) / abs(g1))
    out["gamma reflection/recurrence"] = refl <= 1e-12 and rec <= 1e-12
    return out


@criterion(14, "property suites at their stated tolerances")
def c14():
    out = _properties()
    failed = [k for k, v in out.items() if not v]
    return not failed, f"{len(out)} suites" + (f", failing: {', '.join(failed)}" if failed else "")


@criterion(15, "two runs of verify --suite all --seed 7 agree on pass/fail and parameters")
def c15():
    vectors = []
    with tempfile.TemporaryDirectory() as tmp:
        for i in range(2):
            path = os.path.join(tmp, f"run{i}.json")
            code = cli_main(["verify", "--suite", "all", "--seed", "7", "--format", "json",
                             "--out", path])
            with open(path, encoding="utf-8") as fh:
                rep = json.load(fh)
            vectors.append((code, [(r["case_id"], r["params"], r["pass"]) for r in rep["cases"]]))
    same = vectors[0] == vectors[1]
    passed = sum(p for *_, p in vectors[0][1])
    return same, f"{len(vectors[0][1])} results, {passed} passing, exit {vectors[0][0]}"


def _line(number):
    title, fn = CRITERIA[number]
    t0 = time.perf_counter()
    ok, detail = fn()
    mark = "PASS" if ok else "FAIL"
    return ok, f"[{mark}] {number:>2}. {title}: {detail} ({time.perf_counter() - t0:.1f} s)"


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, acceptance_log):
    ok, line = _line(number)
    print(line)
    acceptance_log.append(line)
    assert ok, line


if __name__ == "__main__":
    results = [_line(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
