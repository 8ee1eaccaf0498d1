"""Executable catalog of identities, grouped into suites.

>>> from lek.catalog import list_cases, evaluate_case, get_case
>>> evaluate_case(get_case("eq15"), {}).passed
True
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

from ..errors import CatalogError
from . import beltrami, cg, hobson, periods, ramanujan, tricomi
from .clebsch import t_closed, t_direct, t_recursion_residual
from .core import TOL_CLASSES, CaseResult, IdentityCase, evaluate_case, sample_params
from .tricomi import tricomi_pairing, tricomi_transform

SUITES = ("hobson", "cg", "beltrami", "ramanujan", "tricomi", "periods")
_MODULES = {m.SUITE: m for m in (hobson, cg, beltrami, ramanujan, tricomi, periods)}

__all__ = [
    "SUITES", "TOL_CLASSES", "CaseResult", "IdentityCase", "beltrami_suite", "evaluate_case",
    "get_case", "hobson_check", "list_cases", "neumann_general", "quad_product_moments",
    "ramanujan_suite", "run_cases", "sample_params", "t_closed", "t_direct",
    "t_recursion_residual", "tricomi_pairing", "tricomi_pairing_checks", "tricomi_pnu_pair",
    "tricomi_transform",
]


@lru_cache(maxsize=1)
def _registry() -> dict[str, IdentityCase]:
    reg = {}
    for suite in SUITES:
        for case in _MODULES[suite].cases():
            if case.id in reg:
                raise CatalogError(f"duplicate case id {case.id!r}")
            reg[case.id] = case
    return reg


def list_cases(suite: str = "all") -> list[IdentityCase]:
    """Cases of one suite, or of every suite for "all", in catalog order."""
    if suite != "all" and suite not in SUITES:
        raise CatalogError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)} or all")
    return [c for c in _registry().values() if suite == "all" or c.suite == suite]


def get_case(case_id: str) -> IdentityCase:
    try:
        return _registry()[case_id]
    except KeyError:
        raise CatalogError(f"unknown case id {case_id!r}") from None


def default_jobs() -> int:
    env = os.environ.get("LEK_JOBS")
    if env:
        return max(1, int(env))
    return max(1, min(os.cpu_count() or 1, 8))


def _work(item):
    case_id, params, rtol, atol = item
    return evaluate_case(get_case(case_id), params, rtol=rtol, atol=atol)


def run_cases(cases, samples: int = 8, seed: int = 42, *, jobs: int | None = None,
              rtol: float | None = None, atol: float | None = None) -> list[CaseResult]:
    """Evaluate every case at its sampled points; results keep catalog and sample order.

    Work is spread over a process pool of ``jobs`` workers (LEK_JOBS or the
    CPU count, capped at 8). Each point is independent, so the output does
    not depend on the worker count.
    """
    items = [(c.id, p, rtol, atol) for c in cases for p in sample_params(c, samples, seed)]
    jobs = default_jobs() if jobs is None else max(1, int(jobs))
    if jobs == 1 or len(items) < 2:
        return [_work(it) for it in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_work, items, chunksize=max(1, len(items) // (8 * jobs))))


# ---------------------------------------------------------- keyed entry points

def _in_suite(suite, case_id, params):
    case = get_case(case_id)
    if case.suite != suite:
        raise CatalogError(f"{case_id!r} belongs to suite {case.suite!r}, not {suite!r}")
    return evaluate_case(case, params)


def hobson_check(nu, theta1, theta2) -> CaseResult:
    """The axial coupling at one (nu, theta1, theta2)."""
    return evaluate_case(get_case("eq6_hobson"), {"nu": nu, "theta1": theta1, "theta2": theta2})


def beltrami_suite(case_id: str, **params) -> CaseResult:
    return _in_suite("beltrami", case_id, params)


def ramanujan_suite(case_id: str, **params) -> CaseResult:
    return _in_suite("ramanujan", case_id, params)


def tricomi_pnu_pair(nu, x) -> CaseResult:
    """Transform of P_nu(xi) P_nu(-xi); integer nu >= 0 goes to the P_n Q_n form."""
    z = complex(nu)
    if z.imag == 0 and z.real == round(z.real) and z.real >= 0:
        return evaluate_case(get_case("eq51_tricomi_pn"), {"n": int(z.real), "x": x})
    return evaluate_case(get_case("eq50_tricomi_pnu"), {"nu": nu, "x": x})


def neumann_general(nu, n: int, x) -> tuple[CaseResult, CaseResult]:
    """The generalized Neumann integral at (nu, n, x) and the moment it rests on."""
    sigma = complex(nu) - n
    sigma = sigma.real if sigma.imag == 0 else sigma
    return (evaluate_case(get_case("eq54_neumann"), {"nu": nu, "n": n, "x": x}),
            evaluate_case(get_case("eq55_moment"), {"sigma": sigma, "nu": nu}))


def tricomi_pairing_checks(samples: int = 10, seed: int = 42) -> list[CaseResult]:
    """Pairing, composition, the cubic chain, the triple law and the vanishing integral."""
    ids = ("eq48_parseval", "eq58_hpb", "eq49_wan_chain", "eq_triple_law_elliptic",
           "vanishing_kkke")
    return run_cases([get_case(i) for i in ids], samples, seed, jobs=1)


def quad_product_moments(nu) -> list[CaseResult]:
    out = [evaluate_case(get_case("eq52_xpppp"), {"nu": nu}),
           evaluate_case(get_case("eq61_xp4"), {"nu": nu})]
    out += [evaluate_case(get_case(i), {}) for i in ("eq61_zeta3", "eq61_zeta5")]
    return out
