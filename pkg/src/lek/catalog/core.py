"""Case and result types, tolerance classes, sampling and evaluation."""

from __future__ import annotations

import math
import time
import zlib
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

import numpy as np

from ..errors import DomainError
from ..quadrature import QuadResult

TOL_CLASSES = {"tight": 1e-9, "standard": 1e-7, "pv": 1e-6}


@dataclass(frozen=True)
class IdentityCase:
    """One executable identity.

    ``lhs`` and ``rhs`` take the sampled parameters as keyword arguments and
    return a number, a QuadResult, or a sequence of members (all of which must
    equal the other side). ``sampler`` draws one parameter dict from a numpy
    Generator; ``None`` marks a parameter-free case. ``fixed`` points are
    evaluated before any random draws.
    """

    id: str
    suite: str
    anchor: str
    domain: str
    lhs: Callable
    rhs: Callable
    tol_class: str = "standard"
    sampler: Callable | None = None
    fixed: tuple = ()
    atol: float | None = None
    componentwise: bool = False

    def __post_init__(self):
        if self.tol_class not in TOL_CLASSES:
            raise DomainError(f"unknown tolerance class {self.tol_class!r}")

    @property
    def parameter_free(self) -> bool:
        return self.sampler is None and not self.fixed

    @property
    def rtol(self) -> float:
        return TOL_CLASSES[self.tol_class]

    @property
    def default_atol(self) -> float:
        return self.atol if self.atol is not None else self.rtol * 1e-3


@dataclass
class CaseResult:
    case_id: str
    params: dict
    lhs: complex
    rhs: complex
    abs_err: float
    rel_err: float
    passed: bool
    evals: int = 0
    seconds: float = 0.0
    error: str | None = None
    rtol: float = 0.0
    atol: float = 0.0
    members: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "case_id": self.case_id,
            "params": self.params,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "pass": self.passed,
            "evals": self.evals,
            "seconds": self.seconds,
            "error": self.error,
        }


def _unpack(value):
    """Return (list of numbers, evals) from an evaluator output."""
    if isinstance(value, QuadResult):
        return [value.value], value.evals
    if isinstance(value, (list, tuple)):
        out, ev = [], 0
        for v in value:
            vals, e = _unpack(v)
            out.extend(vals)
            ev += e
        return out, ev
    return [value], 0


def _scalar(v):
    v = complex(np.asarray(v).item()) if np.ndim(v) == 0 else complex(np.asarray(v).ravel()[0])
    return v.real if v.imag == 0 else v


def _compare(a, b, componentwise):
    a, b = complex(a), complex(b)
    if not componentwise:
        d = abs(a - b)
        scale = abs(b)
        return d, (d / scale if scale > 0 else (0.0 if d == 0 else math.inf))
    errs = []
    for x, y in ((a.real, b.real), (a.imag, b.imag)):
        d = abs(x - y)
        errs.append((d, d / abs(y) if y != 0 else (0.0 if d == 0 else math.inf)))
    return max(e[0] for e in errs), max(e[1] for e in errs), errs


def _judge(a, b, case, rtol, atol):
    if case.componentwise:
        d, r, parts = _compare(a, b, True)
        ok = all(pd <= atol or pr <= rtol for pd, pr in parts)
        return d, r, ok
    d, r = _compare(a, b, False)
    return d, r, (d <= atol or r <= rtol)


def evaluate_case(case: IdentityCase, params: dict | None = None, *, rtol=None, atol=None):
    """Evaluate both sides of ``case`` at ``params``; never raises on a failed identity.

    Math errors yield a failed CaseResult carrying the error text.
    """
    params = dict(params or {})
    rtol = case.rtol if rtol is None else float(rtol)
    atol = case.default_atol if atol is None else float(atol)
    t0 = time.perf_counter()
    try:
        lv, le = _unpack(case.lhs(**params))
        rv, re_ = _unpack(case.rhs(**params))
        if len(rv) != 1:
            raise DomainError("right side must be a single value")
        rhs = _scalar(rv[0])
        worst = None
        ok_all = True
        for m in lv:
            m = _scalar(m)
            d, r, ok = _judge(m, rhs, case, rtol, atol)
            ok_all &= ok
            if worst is None or (not ok, r) > (not worst[3], worst[2]):
                worst = (m, d, r, ok)
        if not all(math.isfinite(abs(complex(x))) for x in lv + [rhs]):
            ok_all = False
        return CaseResult(case.id, params, worst[0], rhs, float(worst[1]), float(worst[2]),
                          bool(ok_all), le + re_, time.perf_counter() - t0, None, rtol, atol,
                          [_scalar(m) for m in lv])
    except Exception as exc:  # noqa: BLE001 - failures are reported, not raised
        return CaseResult(case.id, params, math.nan, math.nan, math.inf, math.inf, False, 0,
                          time.perf_counter() - t0, f"{type(exc).__name__}: {exc}", rtol, atol)


def case_rng(case_id: str, seed: int) -> np.random.Generator:
    return np.random.default_rng([int(seed) & 0xFFFFFFFF, zlib.crc32(case_id.encode())])


def sample_params(case: IdentityCase, n: int, seed: int) -> list[dict]:
    """Deterministic parameter sets: fixed points first, then seeded draws, n in total.

    A parameter-free case always yields the single empty set.
    """
    if case.parameter_free:
        return [{}]
    n = int(n)
    out = [dict(p) for p in case.fixed[:n]]
    if case.sampler is not None and len(out) < n:
        rng = case_rng(case.id, seed)
        while len(out) < n:
            out.append({k: _plain(v) for k, v in case.sampler(rng).items()})
    return out


def _plain(v):
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (np.floating,)):
        return float(v)
    if isinstance(v, (complex, np.complexfloating)):
        v = complex(v)
        return v.real if v.imag == 0 else v
    return v


# ---------------------------------------------------------------- samplers

def uniform(**ranges):
    """Sampler drawing each named parameter uniformly from its (lo, hi) range."""
    names = sorted(ranges)

    def draw(rng):
        return {k: float(rng.uniform(*ranges[k])) for k in names}
    return draw


def away_from(values: Sequence[float], margin: float, x) -> bool:
    return all(abs(x - v) >= margin for v in values)


def degree_sample(rng, *, complex_part=True, re=(-3.0, 2.0), im=2.0, avoid_int=1e-2,
                  avoid_half=False):
    """A degree inside the tested envelope: Re in re, |Im| <= im, off the integers."""
    while True:
        r = float(rng.uniform(*re))
        i = float(rng.uniform(-im, im)) if complex_part and rng.random() < 0.5 else 0.0
        z = complex(r, i)
        if abs(z - round(r)) < avoid_int:
            continue
        if avoid_half and abs(z + 0.5) < 1e-2:
            continue
        return z.real if i == 0 else z
