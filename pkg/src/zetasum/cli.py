"""Command-line front end: ``zetasum {eval,compare,scan,selftest}``.

Exit codes: 0 ok, 1 domain error, 2 not converged, 3 selftest failure,
64 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .errors import DomainError, ZetasumError
from .faulhaber import powersum_ac, powersum_ac_alt, powersum_bruteforce
from .hurwitz import hp_bruteforce, hp_sum_ac, hp_sum_hurwitz, hurwitz_global, hurwitz_neg_int
from .quadrature import EvalResult, config_from_env
from .zeta import zeta_functional, zeta_global, zeta_reference, zeta_strip_neg, zeta_strip_pos

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_NOT_CONVERGED = 2
EXIT_SELFTEST_FAILED = 3
EXIT_USAGE = 64

SINGULAR_RADIUS = 1e-6

_COMPLEX_RE = re.compile(r"^[0-9eE.+\-]*[ij]?$")


class UsageError(Exception):
    pass


def parse_complex(text: str) -> complex:
    """Parse ``RE[+-]IMi`` (``j`` also accepted), e.g. ``2.5+1i``, ``-3``, ``2i``."""
    if not _COMPLEX_RE.match(text) or not text:
        raise UsageError(f"cannot parse complex number {text!r} (expected RE[+-]IMi)")
    try:
        z = complex(text[:-1] + "j" if text.endswith("i") else text)
    except ValueError:
        raise UsageError(f"cannot parse complex number {text!r} (expected RE[+-]IMi)") from None
    return z


def _cnum(z: complex) -> dict:
    z = complex(z)
    return {"re": float(z.real), "im": float(z.imag)}


def _neg_int_form(k, b, cfg):
    k = complex(k)
    if k.imag != 0 or not k.real.is_integer() or k.real > 0:
        raise DomainError(f"neg_int form needs k a non-positive integer, got {k}")
    return EvalResult(hurwitz_neg_int(int(-k.real), b), 0.0, 0, None, True)


# target -> form -> callable(k, n, b, cfg)
FORMS = {
    "zeta": {
        "global": lambda k, n, b, cfg: zeta_global(k, cfg),
        "strip_pos": lambda k, n, b, cfg: zeta_strip_pos(k, cfg),
        "strip_neg": lambda k, n, b, cfg: zeta_strip_neg(k, cfg),
        "functional": lambda k, n, b, cfg: zeta_functional(-k, cfg),
    },
    "hurwitz": {
        "global": lambda k, n, b, cfg: hurwitz_global(k, b, cfg),
        "neg_int": _neg_int_form,
    },
    "powersum": {
        "ac": lambda k, n, b, cfg: powersum_ac(k, n, cfg),
        "alt": lambda k, n, b, cfg: powersum_ac_alt(k, n, cfg),
    },
    "hp": {
        "ac": lambda k, n, b, cfg: hp_sum_ac(k, b, n, cfg),
        "hurwitz": lambda k, n, b, cfg: hp_sum_hurwitz(k, b, n, cfg),
    },
}
NEEDS_N = {"powersum", "hp"}
NEEDS_B = {"hurwitz", "hp"}
SINGULAR_K = {"zeta": 1.0, "hurwitz": 1.0, "powersum": -1.0, "hp": -1.0}


@dataclass(frozen=True)
class ScanSpec:
    target: str
    re_min: float
    re_max: float
    re_steps: int
    im_min: float
    im_max: float
    im_steps: int
    n: int | None = None
    b: complex | None = None
    form: str | None = None
    fmt: str = "json"

    def __post_init__(self):
        if self.re_steps < 1 or self.im_steps < 1:
            raise UsageError("grid steps must be >= 1")

    def grid(self):
        """k values in row-major order: rows of fixed Im(k), Re(k) varying fastest."""
        re_axis = np.linspace(self.re_min, self.re_max, self.re_steps) if self.re_steps > 1 else [self.re_min]
        im_axis = np.linspace(self.im_min, self.im_max, self.im_steps) if self.im_steps > 1 else [self.im_min]
        return [complex(float(r), float(i)) for i in im_axis for r in re_axis]


def _params(target, k, n, b) -> dict:
    out = {"k": _cnum(k)}
    if target in NEEDS_N:
        out["n"] = n
    if target in NEEDS_B:
        out["b"] = _cnum(b)
    return out


def _check_inputs(target, n, b):
    if target in NEEDS_N and n is None:
        raise UsageError(f"target {target!r} needs --n")
    if target in NEEDS_B and b is None:
        raise UsageError(f"target {target!r} needs --b")


def _evaluate(target, form, k, n, b, cfg) -> EvalResult:
    try:
        fn = FORMS[target][form]
    except KeyError:
        raise UsageError(f"unknown form {form!r} for target {target!r}; "
                         f"choose from {sorted(FORMS[target])}") from None
    return fn(k, n, b, cfg)


def _status(res: EvalResult) -> str:
    return "ok" if res.converged else "not_converged"


def _emit(record: dict, out):
    out.write(json.dumps(record) + "\n")


def _cfg_from_args(args):
    cfg = config_from_env()
    overrides = {}
    for name in ("rel_tol", "abs_tol", "tail_margin", "max_evals", "max_depth"):
        v = getattr(args, name, None)
        if v is not None:
            overrides[name] = v
    try:
        return replace(cfg, **overrides)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def cmd_eval(args, out, err) -> int:
    target = args.target
    form = args.form or next(iter(FORMS[target]))
    _check_inputs(target, args.n, args.b)
    cfg = _cfg_from_args(args)
    record = {"target": target, "form": form, "params": _params(target, args.k, args.n, args.b)}
    try:
        res = _evaluate(target, form, args.k, args.n, args.b, cfg)
    except ZetasumError as exc:
        record.update(status="domain_error", message=str(exc))
        _emit(record, out)
        err.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    record.update(
        value=_cnum(res.value),
        err_estimate=res.err_estimate,
        evals_used=res.evals_used,
        truncation_point=res.truncation_point,
        converged=res.converged,
        status=_status(res),
    )
    _emit(record, out)
    return EXIT_OK if res.converged else EXIT_NOT_CONVERGED


def _oracle(target, form, k, n, b):
    """Return (oracle name, value) or raise DomainError when none applies."""
    k = complex(k)
    if target == "zeta":
        return "zeta_reference", zeta_reference(k)
    if target == "powersum":
        return "powersum_bruteforce", powersum_bruteforce(k, n)
    if target == "hp":
        start = 0 if form == "hurwitz" else 1
        return f"hp_bruteforce(start={start})", hp_bruteforce(k, b, n, start)
    # hurwitz
    if k.imag == 0 and k.real.is_integer() and k.real <= 0:
        return "hurwitz_neg_int", hurwitz_neg_int(int(-k.real), b)
    b = complex(b)
    if b.imag == 0 and b.real.is_integer() and b.real >= 1:
        m = int(b.real)
        shift = sum(complex(j) ** (-k) for j in range(1, m))
        return "zeta_reference_shifted", zeta_reference(k) - shift
    raise DomainError("no oracle for hurwitz at non-integer b unless k is a non-positive integer")


def cmd_compare(args, out, err) -> int:
    target = args.target
    form = args.form or next(iter(FORMS[target]))
    _check_inputs(target, args.n, args.b)
    cfg = _cfg_from_args(args)
    record = {"target": target, "form": form, "params": _params(target, args.k, args.n, args.b)}
    try:
        res = _evaluate(target, form, args.k, args.n, args.b, cfg)
        name, ref = _oracle(target, form, args.k, args.n, args.b)
    except ZetasumError as exc:
        record.update(status="domain_error", message=str(exc))
        _emit(record, out)
        err.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    abs_diff = abs(res.value - ref)
    if ref != 0:
        rel_diff = abs_diff / abs(ref)
    else:
        rel_diff = 0.0 if abs_diff == 0 else math.inf
    passed = rel_diff <= args.threshold or abs_diff <= args.abs_threshold
    record.update(
        formula_value=_cnum(res.value),
        oracle=name,
        oracle_value=_cnum(ref),
        abs_diff=abs_diff,
        rel_diff=rel_diff if math.isfinite(rel_diff) else None,
        threshold=args.threshold,
        converged=res.converged,
        status="ok" if passed else "mismatch",
    )
    _emit(record, out)
    return EXIT_OK if passed else EXIT_NOT_CONVERGED


SCAN_COLUMNS = ("k_re", "k_im", "value_re", "value_im", "err_estimate", "converged", "status")


def scan_rows(spec: ScanSpec, cfg, jobs: int = 1):
    """Evaluate every grid point; failures are recorded per row."""
    form = spec.form or next(iter(FORMS[spec.target]))
    singular = SINGULAR_K[spec.target]

    def one(k):
        row = {"k_re": k.real, "k_im": k.imag, "value_re": None, "value_im": None,
               "err_estimate": None, "converged": None, "status": "ok"}
        if abs(k - singular) < SINGULAR_RADIUS:
            row["status"] = "singular"
            return row
        try:
            res = _evaluate(spec.target, form, k, spec.n, spec.b, cfg)
        except ZetasumError as exc:
            row["status"] = f"domain_error: {exc}"
            return row
        row.update(value_re=res.value.real, value_im=res.value.imag,
                   err_estimate=res.err_estimate, converged=res.converged, status=_status(res))
        return row

    points = spec.grid()
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(one, points))
    return [one(k) for k in points]


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def format_rows(rows, fmt: str) -> str:
    buf = io.StringIO()
    if fmt == "csv":
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(SCAN_COLUMNS)
        for r in rows:
            w.writerow([_csv_cell(r[c]) for c in SCAN_COLUMNS])
    else:
        for r in rows:
            buf.write(json.dumps({c: r[c] for c in SCAN_COLUMNS}) + "\n")
    return buf.getvalue()


def cmd_scan(args, out, err) -> int:
    _check_inputs(args.target, args.n, args.b)
    if args.form and args.form not in FORMS[args.target]:
        raise UsageError(f"unknown form {args.form!r} for target {args.target!r}")
    spec = ScanSpec(args.target, args.re_min, args.re_max, args.re_steps,
                    args.im_min, args.im_max, args.im_steps, args.n, args.b, args.form, args.format)
    rows = scan_rows(spec, _cfg_from_args(args), args.jobs)
    out.write(format_rows(rows, spec.fmt))
    return EXIT_OK


def cmd_selftest(args, out, err) -> int:
    from .checks import run_checks

    cfg = _cfg_from_args(args)
    summary = run_checks(args.level, cfg, report=err)
    out.write(json.dumps(summary) + "\n")
    return EXIT_OK if summary["failed"] == 0 else EXIT_SELFTEST_FAILED


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _add_numeric_flags(p):
    p.add_argument("--rel-tol", dest="rel_tol", type=float)
    p.add_argument("--abs-tol", dest="abs_tol", type=float)
    p.add_argument("--tail-margin", dest="tail_margin", type=float)
    p.add_argument("--max-evals", dest="max_evals", type=int)
    p.add_argument("--max-depth", dest="max_depth", type=int)


def _complex_arg(text):
    try:
        return parse_complex(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_point_args(p):
    p.add_argument("target", choices=sorted(FORMS))
    p.add_argument("--k", type=_complex_arg, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--b", type=_complex_arg)
    p.add_argument("--form")
    _add_numeric_flags(p)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zetasum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate one point, print a JSON record")
    _add_point_args(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("compare", help="compare a formula with an independent oracle")
    _add_point_args(p)
    p.add_argument("--threshold", type=float, default=1e-8, help="max relative difference")
    p.add_argument("--abs-threshold", dest="abs_threshold", type=float, default=1e-9,
                   help="absolute difference accepted when the oracle value is ~0")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("scan", help="evaluate over a grid of complex k")
    p.add_argument("target", choices=sorted(FORMS))
    p.add_argument("--re-min", type=float, required=True)
    p.add_argument("--re-max", type=float, required=True)
    p.add_argument("--re-steps", type=int, default=1)
    p.add_argument("--im-min", type=float, default=0.0)
    p.add_argument("--im-max", type=float, default=0.0)
    p.add_argument("--im-steps", type=int, default=1)
    p.add_argument("--n", type=int)
    p.add_argument("--b", type=_complex_arg)
    p.add_argument("--form")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--jobs", type=int, default=1)
    _add_numeric_flags(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("selftest", help="run the invariant suite")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    _add_numeric_flags(p)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RuntimeWarning)
            return args.func(args, out, err)
    except UsageError as exc:
        err.write(f"zetasum: usage error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
