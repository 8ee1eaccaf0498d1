"""Command-line front end: ``lek verify`` runs catalog cases, ``lek eval`` prints one value."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from datetime import datetime, timezone

from .errors import CatalogError, LekError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
EVAL_DIGITS = 16


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ------------------------------------------------------------- number text

def parse_number(text: str):
    """Real or complex from text such as "0.5", "-1e-3", "0.2-1.5j" or "0.2-1.5i"."""
    s = text.strip().replace(" ", "")
    if s.endswith("i"):
        s = s[:-1] + "j"
    try:
        return float(s)
    except ValueError:
        pass
    try:
        z = complex(s)
    except ValueError:
        raise UsageError(f"not a number: {text!r}") from None
    return z.real if z.imag == 0 else z


def _number_list(text: str):
    return [parse_number(p) for p in text.split(",") if p.strip()] if text else []


def format_value(v) -> str:
    """Fixed 16 significant digits; complex values as re+im i."""
    z = complex(v)
    if z.imag == 0:
        return f"{z.real:#.{EVAL_DIGITS}g}"
    sign = "-" if z.imag < 0 or (z.imag == 0 and math.copysign(1, z.imag) < 0) else "+"
    return f"{z.real:#.{EVAL_DIGITS}g}{sign}{abs(z.imag):#.{EVAL_DIGITS}g}i"


def _num17(v) -> str:
    if isinstance(v, bool) or v is None:
        return json.dumps(v)
    if isinstance(v, int):
        return str(v)
    if isinstance(v, complex):
        return f"[{_num17(v.real)}, {_num17(v.imag)}]"
    v = float(v)
    if not math.isfinite(v):
        return "null"
    return f"{v:.17g}"


def to_json(obj, indent: int = 0, step: int = 2) -> str:
    """JSON with every float at 17 significant digits and complex as [re, im]."""
    pad, inner = " " * indent, " " * (indent + step)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {to_json(v, indent + step)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(to_json(v) for v in obj) + "]"
        return "[\n" + ",\n".join(inner + to_json(v, indent + step) for v in obj) + "\n" + pad + "]"
    if isinstance(obj, str):
        return json.dumps(obj)
    if hasattr(obj, "item") and not isinstance(obj, (int, float, complex)):
        obj = obj.item()
    if isinstance(obj, complex) and obj.imag == 0:
        obj = obj.real
    return _num17(obj)


def compact_params(params: dict) -> str:
    return "{" + ", ".join(f"{json.dumps(str(k))}: {to_json(v)}" for k, v in params.items()) + "}"


# ------------------------------------------------------------- verify

def _select(args):
    from . import catalog

    if args.id:
        cases = [catalog.get_case(i) for i in args.id]
        if args.suite != "all":
            stray = [c.id for c in cases if c.suite != args.suite]
            if stray:
                raise CatalogError(f"{', '.join(stray)} not in suite {args.suite!r}")
        return cases
    return catalog.list_cases(args.suite)


def build_report(args) -> dict:
    from . import catalog

    cases = _select(args)
    started = datetime.now(timezone.utc).isoformat(timespec="seconds")
    results = catalog.run_cases(cases, args.samples, args.seed, jobs=args.jobs, rtol=args.rtol,
                                atol=args.atol)
    finished = datetime.now(timezone.utc).isoformat(timespec="seconds")
    suite_of = {c.id: c.suite for c in cases}
    rows = []
    for r in results:
        d = r.as_dict()
        d = {"suite": suite_of[r.case_id], **d, "rtol": r.rtol, "atol": r.atol}
        rows.append(d)
    finite = [r.rel_err for r in results if math.isfinite(r.rel_err)]
    passed = sum(r.passed for r in results)
    return {
        "suite": args.suite,
        "seed": args.seed,
        "started": started,
        "finished": finished,
        "cases": rows,
        "summary": {
            "total": len(results),
            "passed": passed,
            "failed": len(results) - passed,
            # zero targets have no relative error; they are judged on atol alone
            "max_rel_err": max(finite, default=0.0),
        },
    }


def _fmt_err(v) -> str:
    return f"{v:.2e}" if math.isfinite(v) else "inf"


def render_text(report: dict) -> str:
    out = io.StringIO()
    groups: dict[str, list] = {}
    for row in report["cases"]:
        groups.setdefault(row["case_id"], []).append(row)
    width = max([len(k) for k in groups] + [7])
    out.write(f"{'case':<{width}}  {'suite':<9}  pts  fail  {'max_rel':>8}  {'max_abs':>8}  seconds\n")
    for cid, rows in groups.items():
        fails = [r for r in rows if not r["pass"]]
        rel = max(r["rel_err"] for r in rows)
        ab = max(r["abs_err"] for r in rows)
        sec = sum(r["seconds"] for r in rows)
        out.write(f"{cid:<{width}}  {rows[0]['suite']:<9}  {len(rows):>3}  {len(fails):>4}  "
                  f"{_fmt_err(rel):>8}  {_fmt_err(ab):>8}  {sec:7.2f}\n")
        for r in fails:
            why = r["error"] or f"rel {_fmt_err(r['rel_err'])} abs {_fmt_err(r['abs_err'])}"
            out.write(f"    FAIL {compact_params(r['params'])}: {why}\n")
    s = report["summary"]
    out.write(f"\nsuite={report['suite']} seed={report['seed']} total={s['total']} "
              f"passed={s['passed']} failed={s['failed']} max_rel_err={_fmt_err(s['max_rel_err'])}\n")
    return out.getvalue()


CSV_FIELDS = ("suite", "case_id", "params", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err",
              "rel_err", "rtol", "atol", "pass", "evals", "seconds", "error")


def render_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in report["cases"]:
        lhs, rhs = complex(r["lhs"]), complex(r["rhs"])
        w.writerow([r["suite"], r["case_id"], compact_params(r["params"]),
                    _num17(lhs.real), _num17(lhs.imag), _num17(rhs.real), _num17(rhs.imag),
                    _num17(r["abs_err"]), _num17(r["rel_err"]), _num17(r["rtol"]),
                    _num17(r["atol"]), "true" if r["pass"] else "false", r["evals"],
                    _num17(r["seconds"]), r["error"] or ""])
    return buf.getvalue()


def cmd_verify(args) -> int:
    report = build_report(args)
    text = {"text": render_text, "json": lambda r: to_json(r) + "\n", "csv": render_csv}[args.format](report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if report["summary"]["failed"] == 0 else EXIT_FAIL


# ------------------------------------------------------------- eval

def _eval_value(args):
    from . import legendre, specfun
    from .catalog.clebsch import t_direct

    name = args.function
    if name == "P":
        return legendre.p_nu(args.nu, args.x)
    if name == "Q":
        return legendre.q_nu(args.nu, args.x)
    if name == "K":
        return specfun.elliptic_k(args.k)
    if name == "E":
        return specfun.elliptic_e(args.k)
    if name == "T":
        return t_direct(args.mu, args.nu)
    return specfun.pfq_unit(_number_list(args.a), _number_list(args.b))


_EVAL_NEEDS = {"P": ("nu", "x"), "Q": ("nu", "x"), "K": ("k",), "E": ("k",), "T": ("mu", "nu"),
               "pfq": ("a", "b")}


def cmd_eval(args) -> int:
    missing = [f"--{n}" for n in _EVAL_NEEDS[args.function] if getattr(args, n) is None]
    if missing:
        raise UsageError(f"eval {args.function} needs {' '.join(missing)}")
    print(format_value(_eval_value(args)))
    return EXIT_OK


# ------------------------------------------------------------- parser

def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _number(text):
    try:
        return parse_number(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _tol(text):
    v = float(text)
    if not v >= 0:
        raise argparse.ArgumentTypeError("tolerance must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    from .catalog import SUITES

    p = _Parser(prog="lek", description="Verify identities for Legendre functions and elliptic "
                "integrals, or evaluate single special-function values.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run catalog cases at sampled parameters")
    v.add_argument("--suite", default="all", choices=SUITES + ("all",))
    v.add_argument("--id", action="append", help="case id; repeat for several")
    v.add_argument("--samples", type=_positive_int, default=8,
                   help="points per parametrized case (default 8; 0 keeps parameter-free cases)")
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--rtol", type=_tol, help="override the tolerance-class rtol")
    v.add_argument("--atol", type=_tol, help="override the case atol")
    v.add_argument("--format", choices=("text", "json", "csv"), default="text")
    v.add_argument("--out", help="write the report here instead of stdout")
    v.add_argument("--jobs", type=_positive_int,
                   help="worker processes (default LEK_JOBS, else the core count)")
    v.set_defaults(run=cmd_verify)

    e = sub.add_parser("eval", help="print one value with 16 significant digits")
    e.add_argument("function", choices=tuple(_EVAL_NEEDS))
    for name in ("nu", "mu", "x", "k"):
        e.add_argument(f"--{name}", type=_number)
    e.add_argument("--a", help="pfq numerator parameters, comma separated")
    e.add_argument("--b", help="pfq denominator parameters, comma separated")
    e.set_defaults(run=cmd_eval)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "jobs", None) == 0:
            raise UsageError("--jobs must be at least 1")
        return args.run(args)
    except UsageError as exc:
        print(f"lek: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CatalogError, LekError, ValueError) as exc:
        print(f"lek: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KeyboardInterrupt:
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001 - the exit code carries it
        print(f"lek: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
