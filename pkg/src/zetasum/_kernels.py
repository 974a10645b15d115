"""The csch^2 integral shared by the zeta, power-sum and Hurwitz evaluators.

For an exponent ``p`` and scale ``s`` (``Re s != 0``) the evaluators need

    J(p, s) = s**(p+1) * int_0^inf csch(pi s t)**2 * K_p(t) dt,
    K_p(t)  = 1 - ((1 + i t)**p + (1 - i t)**p) / 2
            = 1 - (1 + t**2)**(p/2) * cos(p * arctan t),

which is the ``t = tan v`` image of the ``(0, pi/2)`` integral with kernel
``1 - cos(p v) / cos(v)**p``.  The integrand is assembled as
``(K_p(t) / t**2) * (z / sinh z)**2 / (pi s)**2`` with ``z = pi s t`` so that
neither factor overflows near ``t = 0``.
"""
from __future__ import annotations

import math
from dataclasses import replace
from typing import Optional

import numpy as np

from .kernel import sinhc_sq
from .quadrature import EvalResult, QuadratureConfig, integrate_semi_infinite

# Below this t the kernel ratio comes from its Taylor series.
_SERIES_T = 1e-3


def gbinom(p: complex, m: int) -> complex:
    """Generalised binomial coefficient C(p, m) for complex p."""
    out = 1 + 0j
    for i in range(m):
        out *= (p - i) / (i + 1)
    return out


def kernel_ratio(p: complex, t: np.ndarray) -> np.ndarray:
    """``K_p(t) / t**2`` for real ``t > 0``.

    Uses ``e^{pa} cos(p th) - 1 = expm1(pa) cos(p th) - 2 sin(p th / 2)**2``
    with ``a = log(1+t^2)/2`` and ``th = arctan t``; no subtraction of O(1)
    quantities occurs.
    """
    t = np.asarray(t, dtype=float)
    out = np.empty(t.shape, dtype=complex)
    if p == 0 or p == 1:
        out[:] = 0
        return out
    small = t < _SERIES_T
    ts = t[small] ** 2
    out[small] = gbinom(p, 2) - gbinom(p, 4) * ts + gbinom(p, 6) * ts * ts
    tb = t[~small]
    a = 0.5 * np.log1p(tb * tb)
    th = np.arctan(tb)
    half = np.sin(0.5 * p * th)
    out[~small] = -(np.expm1(p * a) * np.cos(p * th) - 2.0 * half * half) / (tb * tb)
    return out


def sign_re(s: complex) -> float:
    return 1.0 if s.real > 0 else -1.0


def csch_kernel_integrand(p: complex, s: complex, coef: complex = 1.0):
    """Return ``t -> coef * csch(pi s t)**2 * K_p(t)`` (vectorised)."""
    sig = sign_re(s)
    scale = coef / (math.pi * s) ** 2

    def f(t):
        return scale * kernel_ratio(p, t) * sinhc_sq(sig * math.pi * s * t)

    return f


def growth_of(p: complex) -> float:
    return max(0.0, p.real)


def csch_power_integral(p: complex, s: complex,
                        cfg: Optional[QuadratureConfig] = None) -> EvalResult:
    """``J(p, s)``; ``s**(p+1)`` is folded into the integrand."""
    s = complex(s)
    p = complex(p)
    if p == 0 or p == 1:
        return EvalResult(0j, 0.0, 0, None, True)
    coef = np.exp((p + 1) * np.log(s))
    f = csch_kernel_integrand(p, s, coef)
    return integrate_semi_infinite(f, 2.0 * math.pi * abs(s.real), growth_of(p), cfg)


def combine(value: complex, *parts) -> EvalResult:
    """Fold ``(coefficient, EvalResult)`` pairs into one result for ``value``.

    The first part's truncation point is reported.
    """
    err = 0.0
    evals = 0
    ok = True
    trunc = None
    for coef, res in parts:
        err += abs(coef) * res.err_estimate
        evals += res.evals_used
        ok = ok and res.converged
        if trunc is None:
            trunc = res.truncation_point
    return EvalResult(complex(value), float(err), evals, trunc, ok)


def with_value(res: EvalResult, value: complex, scale: float = 1.0) -> EvalResult:
    return replace(res, value=complex(value), err_estimate=float(abs(scale) * res.err_estimate))
