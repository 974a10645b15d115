"""Invariant suite behind ``zetasum selftest``.

Each check returns the largest deviation it measured; it passes when that
deviation is within the check's tolerance.  ``quick`` runs reduced grids,
``full`` runs the complete grids.
"""
from __future__ import annotations

import cmath
import math
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .errors import SingularParameterError
from .faulhaber import (
    faulhaber_bernoulli_odd,
    powersum_ac,
    powersum_ac_alt,
    powersum_bruteforce,
    zeta_even_tail,
)
from .hurwitz import hp_bruteforce, hp_sum_ac, hp_sum_hurwitz, hurwitz_global, hurwitz_neg_int
from .kernel import bernoulli_table, cpow, csch_sq, log_gamma
from .quadrature import QuadratureConfig, integrate_finite, integrate_semi_infinite, truncation_point
from .zeta import zeta_functional, zeta_global, zeta_reference, zeta_strip_neg, zeta_strip_pos

# Denominator floor for relative deviations, so exact zeros compare absolutely.
REL_FLOOR = 1e-6


def dev(a, b, floor: float = REL_FLOOR) -> float:
    return abs(complex(a) - complex(b)) / (abs(complex(b)) + floor)


@dataclass
class Check:
    name: str
    tol: float
    run: Callable[[QuadratureConfig, bool], float]


CHECKS: list[Check] = []


def check(name: str, tol: float):
    def deco(fn):
        CHECKS.append(Check(name, tol, fn))
        return fn
    return deco


# --- kernel -------------------------------------------------------------

@check("kernel: cpow(z,a)*cpow(z,b) == cpow(z,a+b)", 1e-12)
def _(cfg, full):
    zs = [0.5 + 0.1j, 2.0, 3 + 4j, 10 - 2j]
    ws = [0.5, -1.3 + 2j, 2.7 - 0.4j]
    return max(dev(cpow(z, a) * cpow(z, b), cpow(z, a + b), 0.0) for z in zs for a in ws for b in ws)


@check("kernel: Gamma(z+1) == z Gamma(z) on grid", 1e-12)
def _(cfg, full):
    res = np.linspace(0.5, 10, 20 if full else 5)
    ims = np.linspace(-5, 5, 11 if full else 3)
    out = 0.0
    for r in res:
        for i in ims:
            z = complex(r, i)
            out = max(out, dev(cmath.exp(log_gamma(z + 1)), z * cmath.exp(log_gamma(z)), 0.0))
    return out


@check("kernel: reflection Gamma(z)Gamma(1-z) == pi/sin(pi z)", 1e-12)
def _(cfg, full):
    zs = [0.5, 0.25 + 1j, 0.7 - 2j, -1.3 + 0.5j, 2.5 + 0.1j]
    return max(dev(cmath.exp(log_gamma(z) + log_gamma(1 - z)), math.pi / cmath.sin(math.pi * z), 0.0)
               for z in zs)


@check("kernel: exact Bernoulli B0, B2, B4, B_odd", 0.0)
def _(cfg, full):
    t = bernoulli_table(120 if full else 20)
    bad = t.values[0] != 1 or t.values[2] != Fraction(1, 6) or t.values[4] != Fraction(-1, 30)
    bad = bad or any(t.values[m] != 0 for m in range(3, t.max_index + 1, 2))
    return float(bad)


@check("kernel: zeta_even vs 1e6-term partial sums", 1e-10)
def _(cfg, full):
    t = bernoulli_table(20 if full else 6)
    n = 10**6
    m = np.arange(1, n + 1, dtype=float)
    out = 0.0
    for j in range(1, t.max_index // 2 + 1):
        s = 2 * j
        partial = math.fsum(m ** (-s))
        # midpoint tail int_{N+1/2}^inf x^-s dx; error O(N^(-s-1))
        tail = (n + 0.5) ** (1 - s) / (s - 1)
        out = max(out, dev(t.zeta_even[j], partial + tail, 0.0))
    return out


@check("kernel: csch_sq == 1/sinh^2", 1e-12)
def _(cfg, full):
    zs = [1e-4, 0.01, 0.5, 1.0, 3 + 2j, 10 - 1j, 50.0]
    return max(dev(csch_sq(z), 1 / cmath.sinh(z) ** 2, 0.0) for z in zs)


# --- quadrature ---------------------------------------------------------

def _known_integrals():
    return [
        (lambda x: np.ones_like(x), 0.0, 1.0, 1.0),
        (lambda x: x ** -0.5, 0.0, 1.0, 2.0),
        (lambda x: np.log(x), 0.0, 1.0, -1.0),
        (lambda x: np.cos(x), 0.0, math.pi / 2, 1.0),
        (lambda x: np.exp(1j * x), 0.0, math.pi, 2j),
        (lambda x: 1 / (1 + x * x), 0.0, 1.0, math.pi / 4),
        (lambda x: x ** 3, -1.0, 2.0, 15 / 4),
        (lambda x: np.log1p(-x), 0.0, 1.0, -1.0),
        (lambda x: np.sqrt(x) * np.log(x), 0.0, 1.0, -4 / 9),
        (lambda x: 1 / np.cosh(x) ** 2, 0.0, 3.0, math.tanh(3.0)),
    ]


@check("quadrature: error estimates honest (true err <= 5 est + 1e-15)", 1.0)
def _(cfg, full):
    worst = 0.0
    for f, a, b, exact in _known_integrals():
        r = integrate_finite(f, a, b, cfg)
        true = abs(r.value - exact)
        worst = max(worst, true / (5 * r.err_estimate + 1e-15))
    return worst


@check("quadrature: known integrals to rel_tol", 1e-9)
def _(cfg, full):
    return max(dev(integrate_finite(f, a, b, cfg).value, exact, 0.0)
               for f, a, b, exact in _known_integrals())


@check("quadrature: split additivity", 1e-9)
def _(cfg, full):
    out = 0.0
    for f, a, b, _exact in _known_integrals():
        c = a + 0.37 * (b - a)
        whole = integrate_finite(f, a, b, cfg).value
        parts = integrate_finite(f, a, c, cfg).value + integrate_finite(f, c, b, cfg).value
        out = max(out, dev(parts, whole, 0.0))
    return out


@check("quadrature: semi-infinite moments", 1e-9)
def _(cfg, full):
    a = integrate_semi_infinite(lambda t: np.exp(-t), 1.0, 0.0, cfg).value
    b = integrate_semi_infinite(lambda t: t * np.exp(-2 * t), 2.0, 1.0, cfg).value
    return max(dev(a, 1.0, 0.0), dev(b, 0.25, 0.0))


@check("quadrature: truncation point closed form", 1e-12)
def _(cfg, full):
    base = QuadratureConfig(tail_margin=40.0)
    t1 = truncation_point(2 * math.pi, 0.0, base)
    t10 = truncation_point(20 * math.pi, 0.0, base)
    return max(abs(t1 - 40 / (2 * math.pi)) / t1, abs(t10 - max(1.0, 4 / (2 * math.pi))) / t10)


# --- zeta ---------------------------------------------------------------

@check("zeta: trivial zeros |zeta_global(-2m)|, m=1..5", 1e-9)
def _(cfg, full):
    return max(abs(zeta_global(-2 * m, cfg).value) for m in range(1, 6))


@check("zeta: zeta(2)=pi^2/6, zeta(-1)=-1/12", 1e-9)
def _(cfg, full):
    return max(dev(zeta_global(2, cfg).value, math.pi**2 / 6, 0.0),
               abs(zeta_global(-1, cfg).value + 1 / 12))


@check("zeta: zeta_global(0) = -1/2", 1e-12)
def _(cfg, full):
    return abs(zeta_global(0, cfg).value + 0.5)


def _imag_axis(full):
    return [0, 1, -1, 3, -3] if full else [0, 1, -3]


@check("zeta: strip_pos vs global", 1e-8)
def _(cfg, full):
    res = [1.5, 2, 3, 5] if full else [1.5, 3]
    return max(dev(zeta_strip_pos(complex(r, i), cfg).value, zeta_global(complex(r, i), cfg).value)
               for r in res for i in _imag_axis(full))


@check("zeta: strip_neg vs global", 1e-8)
def _(cfg, full):
    res = [-0.5, -2.5, -4] if full else [-0.5, -4]
    return max(dev(zeta_strip_neg(complex(r, i), cfg).value, zeta_global(complex(r, i), cfg).value)
               for r in res for i in _imag_axis(full))


def strip_points(count: int = 10):
    """Deterministic points in 0 < Re k < 1, |Im k| <= 3."""
    out = []
    for j in range(count):
        re = 0.05 + 0.9 * ((j * 0.618034) % 1.0)
        im = -3.0 + 6.0 * j / max(count - 1, 1)
        out.append(complex(round(re, 6), round(im, 6)))
    return out


def oracle_grid():
    """40 points over -5 <= Re k <= 5, |Im k| <= 3, avoiding |k-1| < 0.1."""
    pts = []
    for r in np.linspace(-5, 5, 10):
        for i in (-3.0, -0.5, 0.0, 2.0):
            k = complex(round(float(r), 6), i)
            if abs(k - 1) >= 0.1:
                pts.append(k)
    return pts


@check("zeta: global vs reference (critical strip)", 1e-8)
def _(cfg, full):
    pts = strip_points() if full else strip_points()[:4]
    return max(dev(zeta_global(k, cfg).value, zeta_reference(k)) for k in pts)


@check("zeta: global vs reference (40-point grid)", 1e-8)
def _(cfg, full):
    pts = oracle_grid() if full else oracle_grid()[::8]
    return max(dev(zeta_global(k, cfg).value, zeta_reference(k)) for k in pts)


@check("zeta: functional equation vs global", 1e-8)
def _(cfg, full):
    ks = [0.5, 1, 2, 3, 4.5] if full else [0.5, 3]
    return max(dev(zeta_functional(k, cfg).value, zeta_global(-k, cfg).value) for k in ks)


# --- power sums ---------------------------------------------------------

def _both_ac(k, n, cfg):
    ref = powersum_bruteforce(k, n)
    return max(dev(powersum_ac(k, n, cfg).value, ref), dev(powersum_ac_alt(k, n, cfg).value, ref))


@check("powersum: integer k in [0,8] vs brute force", 1e-9)
def _(cfg, full):
    ns = range(1, 21) if full else (1, 7, 20)
    return max(_both_ac(k, n, cfg) for k in range(0, 9) for n in ns)


@check("powersum: k in {-2,-3,-1/2,1/2,2+i} vs brute force", 1e-9)
def _(cfg, full):
    ns = range(1, 11) if full else (1, 10)
    return max(_both_ac(k, n, cfg) for k in (-2, -3, -0.5, 0.5, 2 + 1j) for n in ns)


@check("powersum: k = -1 rejected", 0.0)
def _(cfg, full):
    failures = 0
    for fn in (powersum_ac, powersum_ac_alt):
        try:
            fn(-1, 5, cfg)
            failures += 1
        except SingularParameterError:
            pass
    return float(failures)


@check("powersum: telescoping S(n) - S(n-1) = n^k", 1e-8)
def _(cfg, full):
    ns = (2, 5, 10) if full else (5,)
    return max(dev(powersum_ac(k, n, cfg).value - powersum_ac(k, n - 1, cfg).value, cpow(n, k))
               for k in (0.5, 2 + 1j, -3, math.pi) for n in ns)


@check("powersum: trig == rational == finite sum", 1e-9)
def _(cfg, full):
    out = 0.0
    ns = (1, 2, 1 + 1j)
    for k in (2, 3, 4, 2.5 + 1j):
        for n in ns if full else ns[::2]:
            trig = zeta_even_tail(k, n, "trig", cfg).value
            rat = zeta_even_tail(k, n, "rational", cfg).value
            out = max(out, dev(trig, rat))
            if isinstance(k, int):
                out = max(out, dev(rat, zeta_even_tail(k, n, "finite_sum", cfg).value))
    return out


@check("powersum: Bernoulli polynomial exact for odd m", 0.0)
def _(cfg, full):
    ns = range(1, 51) if full else (1, 10, 50)
    bad = 0
    for m in (1, 3, 5, 7, 9):
        for n in ns:
            bad += faulhaber_bernoulli_odd(m, n, exact=True) != sum(j**m for j in range(1, n + 1))
    return float(bad)


# --- Hurwitz / HP -------------------------------------------------------

@check("hurwitz: zeta(k,1) == zeta(k)", 1e-8)
def _(cfg, full):
    return max(dev(hurwitz_global(k, 1, cfg).value, zeta_global(k, cfg).value)
               for k in (-3, -0.5, 0.5 + 2j, 2, 4))


@check("hurwitz: recurrence zeta(k,b) - zeta(k,b+1) = b^-k", 1e-8)
def _(cfg, full):
    bs = (0.3, 1, 2 + 1j) if full else (0.3, 2 + 1j)
    return max(dev(hurwitz_global(k, b, cfg).value - hurwitz_global(k, b + 1, cfg).value, cpow(b, -k))
               for k in (2, -1.5, 1.5 + 1j) for b in bs)


@check("hurwitz: zeta(k,1/2) = (2^k - 1) zeta(k)", 1e-8)
def _(cfg, full):
    return max(dev(hurwitz_global(k, 0.5, cfg).value, (2.0**k - 1) * zeta_global(k, cfg).value)
               for k in (2, 3, -0.5))


@check("hurwitz: global(-m,b) == neg_int(m,b)", 1e-9)
def _(cfg, full):
    bs = (0.4, 1, 2.5, 1 + 1j) if full else (0.4, 1 + 1j)
    return max(dev(hurwitz_global(-m, b, cfg).value, hurwitz_neg_int(m, b))
               for m in range(6) for b in bs)


@check("bridge: S_k(n) = zeta(-k) - zeta(-k, n+1)", 1e-8)
def _(cfg, full):
    ns = (1, 5, 10) if full else (5,)
    return max(dev(powersum_ac(k, n, cfg).value,
                   zeta_global(-k, cfg).value - hurwitz_global(-k, n + 1, cfg).value)
               for k in (2, 0.5, -3) for n in ns)


@check("hp: both evaluators vs brute force", 1e-9)
def _(cfg, full):
    ks = [k for k in range(-3, 6) if k != -1]
    ns = range(1, 16) if full else (1, 15)
    out = 0.0
    for k in ks:
        for b in (0.3, 1, 2 + 0.5j):
            for n in ns:
                out = max(out,
                          dev(hp_sum_ac(k, b, n, cfg).value, hp_bruteforce(k, b, n, 1)),
                          dev(hp_sum_hurwitz(k, b, n, cfg).value, hp_bruteforce(k, b, n, 0)))
    return out


@check("performance: slowest single evaluation (s)", 0.05)
def _(cfg, full):
    calls = [
        lambda: zeta_global(0.5 + 3j, cfg),
        lambda: zeta_strip_pos(5 + 3j, cfg),
        lambda: powersum_ac(8, 20, cfg),
        lambda: powersum_ac_alt(2 + 1j, 10, cfg),
        lambda: hurwitz_global(1.5 + 1j, 0.3, cfg),
        lambda: hp_sum_ac(5, 0.3, 15, cfg),
        lambda: hp_sum_hurwitz(-3, 2 + 0.5j, 15, cfg),
    ]
    worst = 0.0
    for fn in calls:
        t0 = time.perf_counter()
        fn()
        worst = max(worst, time.perf_counter() - t0)
    return worst


def run_checks(level: str = "quick", cfg: QuadratureConfig | None = None, report=None) -> dict:
    """Run every check; write one line per check to ``report``; return a summary."""
    cfg = cfg or QuadratureConfig()
    report = report or sys.stderr
    full = level == "full"
    results = []
    t_start = time.perf_counter()
    for c in CHECKS:
        t0 = time.perf_counter()
        try:
            measured = float(c.run(cfg, full))
            ok = measured <= c.tol
            note = ""
        except Exception as exc:  # a crash is a failed check, not a crashed harness
            measured = math.inf
            ok = False
            note = f"{type(exc).__name__}: {exc}"
        elapsed = time.perf_counter() - t0
        results.append({"name": c.name, "max_deviation": measured if math.isfinite(measured) else None,
                        "tolerance": c.tol, "passed": ok, "seconds": round(elapsed, 4),
                        **({"error": note} if note else {})})
        tag = "PASS" if ok else "FAIL"
        report.write(f"[{tag}] {c.name}: max dev {measured:.3e} (tol {c.tol:.1e}) {note}\n")
    failed = sum(not r["passed"] for r in results)
    total = time.perf_counter() - t_start
    report.write(f"{len(results) - failed}/{len(results)} checks passed in {total:.1f} s\n")
    return {"level": level, "checks": len(results), "passed": len(results) - failed,
            "failed": failed, "seconds": round(total, 3), "results": results}
