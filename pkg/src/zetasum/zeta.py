"""Riemann zeta: two half-plane integral forms, a global csch^2 form, the
functional equation, and an independent series oracle."""
from __future__ import annotations

import cmath
import math
import warnings
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from ._kernels import combine, csch_power_integral, with_value
from .errors import DomainError, PoleError
from .kernel import as_complex, cpow, log_gamma, sinhc_sq
from .quadrature import EvalResult, QuadratureConfig, integrate_semi_infinite

__all__ = [
    "ZetaRepresentation",
    "zeta",
    "zeta_functional",
    "zeta_global",
    "zeta_reference",
    "zeta_strip_neg",
    "zeta_strip_pos",
]

POLE_GUARD = 1e-8


class ZetaRepresentation(str, Enum):
    STRIP_POS = "strip_pos"
    STRIP_NEG = "strip_neg"
    GLOBAL = "global"
    FUNCTIONAL = "functional"
    REFERENCE = "reference"


def _trig_half_pi(fn, k: complex) -> complex:
    """``fn(pi k / 2)`` with Re(k) reduced mod 4, so that the zeros at
    integer k come out exactly."""
    r = math.fmod(k.real, 4.0)
    if k.imag == 0 and r.is_integer():
        q = int(r) % 4
        table = {cmath.sin: (0.0, 1.0, 0.0, -1.0), cmath.cos: (1.0, 0.0, -1.0, 0.0)}[fn]
        return complex(table[q])
    return fn(0.5 * math.pi * complex(r, k.imag))


def _bose_integral(q: complex, cfg) -> EvalResult:
    """int_0^inf t**q e^{-t} / (1 - e^{-t})**2 dt = Gamma(q+1) zeta(q), Re q > 1.

    This is the ``u = e^{-t}`` image of int_0^1 (-log u)**q / (1-u)**2 du.
    The integrand is written as t**(q-2) * ((t/2) / sinh(t/2))**2.
    """
    def f(t):
        return np.exp((q - 2.0) * np.log(t)) * sinhc_sq(0.5 * t)

    return integrate_semi_infinite(f, 1.0, q.real, cfg)


def zeta_strip_pos(k, cfg: Optional[QuadratureConfig] = None) -> EvalResult:
    """zeta(k) = (1/k!) int_0^1 (-log u)^k / (1-u)^2 du, for Re(k) > 1."""
    k = as_complex(k)
    if not k.real > 1:
        raise DomainError(f"zeta_strip_pos needs Re(k) > 1, got {k}")
    res = _bose_integral(k, cfg)
    scale = cmath.exp(-log_gamma(k + 1))
    return with_value(res, scale * res.value, scale)


def zeta_strip_neg(k, cfg: Optional[QuadratureConfig] = None) -> EvalResult:
    """zeta(k) = -2 (2 pi)^{k-1}/(k-1) sin(k pi/2) int_0^1 (-log u)^{1-k}/(1-u)^2 du,
    for Re(k) < 0."""
    k = as_complex(k)
    if not k.real < 0:
        raise DomainError(f"zeta_strip_neg needs Re(k) < 0, got {k}")
    res = _bose_integral(1.0 - k, cfg)
    scale = -2.0 * cpow(2.0 * math.pi, k - 1.0) / (k - 1.0) * _trig_half_pi(cmath.sin, k)
    return with_value(res, scale * res.value, scale)


def zeta_global(k, cfg: Optional[QuadratureConfig] = None) -> EvalResult:
    """zeta(k) for every complex k != 1 from the csch^2 representation

        zeta(k) = 1/(k-1) + 1/2
                  + pi/(k-1) int_0^{pi/2} (sec v csch(pi tan v))^2
                                          (1 - cos((k-1) v) (cos v)^(k-1)) dv.

    The kernel grows like exp(|Im k| pi/2) and cancels in the integral, so
    absolute accuracy falls from ~1e-15 at |Im k| <= 3 to ~1e-10 at 14 and
    ~1e-6 at 20.  ``err_estimate`` does not include this rounding.
    """
    k = as_complex(k)
    if abs(k - 1.0) < POLE_GUARD:
        raise PoleError(f"pole at k=1 (|k-1| = {abs(k - 1.0):.3g})")
    res = csch_power_integral(1.0 - k, 1.0, cfg)
    coef = math.pi / (k - 1.0)
    value = 1.0 / (k - 1.0) + 0.5 + coef * res.value
    return combine(value, (coef, res))


def zeta_functional(k, cfg: Optional[QuadratureConfig] = None) -> EvalResult:
    """zeta(-k) = 2 k! (2 pi)^{-(k+1)} cos((k+1) pi/2) zeta(k+1), for Re(k) > 0.

    Note the argument convention: this returns zeta at ``-k``.
    """
    k = as_complex(k)
    if not k.real > 0:
        raise DomainError(f"zeta_functional needs Re(k) > 0, got {k}")
    cosine = _trig_half_pi(cmath.cos, k + 1.0)
    if cosine == 0:
        return EvalResult(0j, 0.0, 0, None, True)
    inner = zeta_strip_pos(k + 1.0, cfg)
    scale = 2.0 * cmath.exp(log_gamma(k + 1.0) - (k + 1.0) * math.log(2.0 * math.pi)) * cosine
    return with_value(inner, scale * inner.value, scale)


# --- independent oracle -------------------------------------------------

_BORWEIN_TERMS = 64


@lru_cache(maxsize=None)
def _borwein_weights(n: int) -> np.ndarray:
    # e_k = (d_k - d_n) / d_n with d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)
    d = []
    acc = Fraction(0)
    for i in range(n + 1):
        acc += Fraction(math.factorial(n + i - 1) * 4**i,
                        math.factorial(n - i) * math.factorial(2 * i))
        d.append(n * acc)
    dn = d[n]
    return np.array([float((d[j] - dn) / dn) for j in range(n)])


def _eta_borwein(s: complex) -> complex:
    n = _BORWEIN_TERMS
    e = _borwein_weights(n)
    j = np.arange(1, n + 1, dtype=float)
    signs = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
    return complex(-np.sum(signs * e * np.exp(-s * np.log(j))))


def zeta_reference(k) -> complex:
    """Reference zeta(k) from Borwein's accelerated alternating series.

    The series is used for ``Re(k) >= -1/2``; further left the argument goes through
    the reflection ``zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)``.
    Validated for ``|Im k| <= 20`` and ``|k - 1| >= 0.1``; a warning is
    emitted outside that window.
    """
    k = as_complex(k)
    if k == 1:
        raise PoleError("pole at k=1")
    if abs(k.imag) > 20 or abs(k - 1.0) < 0.1:
        warnings.warn(f"zeta_reference is not validated at k = {k}", RuntimeWarning, stacklevel=2)
    if k.real >= -0.5:
        return _eta_borwein(k) / (1.0 - cpow(2.0, 1.0 - k))
    s = 1.0 - k
    log_mag = k * math.log(2.0) + (k - 1.0) * math.log(math.pi) + log_gamma(s)
    return cmath.exp(log_mag) * _trig_half_pi(cmath.sin, k) * zeta_reference(s)


def zeta(k, representation: ZetaRepresentation | str = ZetaRepresentation.GLOBAL,
         cfg: Optional[QuadratureConfig] = None):
    """Dispatch on ``representation``.  ``reference`` returns a bare complex;
    ``functional`` evaluates zeta(k) for Re(k) < 0 via zeta_functional(-k)."""
    rep = ZetaRepresentation(representation)
    if rep is ZetaRepresentation.REFERENCE:
        return zeta_reference(k)
    if rep is ZetaRepresentation.FUNCTIONAL:
        return zeta_functional(-as_complex(k), cfg)
    fn = {ZetaRepresentation.STRIP_POS: zeta_strip_pos,
          ZetaRepresentation.STRIP_NEG: zeta_strip_neg,
          ZetaRepresentation.GLOBAL: zeta_global}[rep]
    return fn(k, cfg)
