"""Power sums sum_{j=1}^n j^k for complex k.

Two analytic continuations (the csch^2 form and the exponential form), the
classical Bernoulli/Faulhaber polynomial for odd powers, a direct summation
oracle, and the finite-sum/trig/rational triple for the even-zeta tail.
"""
from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from typing import Optional

import numpy as np

from ._kernels import (
    combine,
    csch_kernel_integrand,
    csch_power_integral,
    gbinom,
    growth_of,
    kernel_ratio,
    sign_re,
)
from .errors import DomainError, SingularParameterError
from .kernel import as_complex, bernoulli_table, cpow, log_gamma, sinhc_sq
from .quadrature import (
    EvalResult,
    QuadratureConfig,
    integrate_finite,
    integrate_semi_infinite,
)
from .zeta import zeta_global

__all__ = [
    "TailForm",
    "compensated_sum",
    "faulhaber_bernoulli_odd",
    "powersum_ac",
    "powersum_ac_alt",
    "powersum_bruteforce",
    "zeta_even_tail",
]

SINGULAR_GUARD = 1e-8


def compensated_sum(terms) -> complex:
    """Correctly rounded sum of complex terms (``math.fsum`` per component)."""
    terms = [complex(t) for t in terms]
    return complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))


def _check_n(n, lower=1) -> int:
    if isinstance(n, bool) or int(n) != n or n < lower:
        raise DomainError(f"n must be an integer >= {lower}, got {n!r}")
    return int(n)


def _check_k(k) -> complex:
    k = as_complex(k)
    if abs(k + 1.0) < SINGULAR_GUARD:
        raise SingularParameterError(f"k = -1 is excluded (harmonic numbers); got k = {k}")
    return k


def powersum_bruteforce(k, n: int) -> complex:
    k = as_complex(k)
    n = _check_n(n)
    return compensated_sum(cpow(j, k) for j in range(1, n + 1))


def faulhaber_bernoulli_odd(m: int, n: int, exact: bool = False):
    """sum_{j<=n} j^m for odd m = 2k-1 from the Bernoulli-number polynomial

        n^(2k-1)/2 + (2k-1)! sum_{j<k} B_2j n^(2k-2j) / ((2j)! (2k-2j)!).

    With ``exact=True`` the rational value is returned as a ``Fraction``.
    """
    if isinstance(m, bool) or int(m) != m or m < 1 or m % 2 == 0:
        raise DomainError(f"m must be an odd positive integer, got {m!r}")
    m = int(m)
    n = _check_n(n)
    k = (m + 1) // 2
    table = bernoulli_table(max(2, 2 * k))
    acc = Fraction(0)
    for j in range(k):
        acc += table.values[2 * j] * Fraction(n ** (2 * k - 2 * j),
                                              math.factorial(2 * j) * math.factorial(2 * k - 2 * j))
    total = Fraction(n**m, 2) + math.factorial(m) * acc
    return total if exact else complex(total)


class TailForm(str, Enum):
    FINITE_SUM = "finite_sum"
    TRIG = "trig"
    RATIONAL = "rational"


def _trig_integrand(k: complex, n: complex):
    """v -> (sec v csch(pi n tan v))^2 (1 - cos(k v)/cos(v)^k) on (0, pi/2)."""
    sig = sign_re(n)
    pn2 = (math.pi * n) ** 2

    def f(v):
        t = np.tan(v)
        small = v < 1e-3
        ratio = np.empty(v.shape, dtype=complex)
        ratio[small] = kernel_ratio(k, t[small])
        vb = v[~small]
        tb = t[~small]
        # 1 - cos(kv) e^{k a}, a = -log cos v, written without cancellation
        a = -np.log1p(-2.0 * np.sin(0.5 * vb) ** 2)
        half = np.sin(0.5 * k * vb)
        ratio[~small] = -(np.expm1(k * a) * np.cos(k * vb) - 2.0 * half * half) / (tb * tb)
        return (1.0 + t * t) * ratio * sinhc_sq(sig * math.pi * n * t) / pn2

    return f


def zeta_even_tail(k, n, form: TailForm | str = TailForm.RATIONAL,
                   cfg: Optional[QuadratureConfig] = None) -> EvalResult:
    """S(k, n) = sum_{j=1}^{floor(k/2)} (2 pi i n)^(-2j) zeta(2j) / (k-2j)!.

    ``finite_sum`` needs a positive integer k.  The two integral forms,

        -sgn(Re n) pi n / (2 k!) int_0^{pi/2} (sec v csch(pi n tan v))^2
                                              (1 - cos(k v)/cos(v)^k) dv

    and its ``t = tan v`` image on (0, inf), extend S to complex k.
    """
    form = TailForm(form)
    k = as_complex(k)
    n = as_complex(n)
    if n.real == 0:
        raise DomainError(f"need Re(n) != 0, got n = {n}")

    if form is TailForm.FINITE_SUM:
        if k.imag != 0 or not k.real.is_integer() or k.real < 1:
            raise DomainError(f"finite_sum needs a positive integer k, got {k}")
        kk = int(k.real)
        jmax = kk // 2
        if jmax == 0:
            return EvalResult(0j, 0.0, 0, None, True)
        zeta_even = bernoulli_table(2 * jmax).zeta_even
        terms = [(-1) ** j * cpow(2.0 * math.pi * n, -2 * j) * zeta_even[j] / math.factorial(kk - 2 * j)
                 for j in range(1, jmax + 1)]
        return EvalResult(compensated_sum(terms), 0.0, 0, None, True)

    if k == 0 or k == 1:
        return EvalResult(0j, 0.0, 0, None, True)
    coef = -sign_re(n) * math.pi * n / (2.0 * np.exp(log_gamma(k + 1.0)))
    if form is TailForm.TRIG:
        res = integrate_finite(_trig_integrand(k, n), 0.0, 0.5 * math.pi, cfg)
    else:
        res = integrate_semi_infinite(csch_kernel_integrand(k, n), 2.0 * math.pi * abs(n.real),
                                      growth_of(k), cfg)
    return combine(coef * res.value, (coef, res))


def powersum_ac(k, n: int, cfg: Optional[QuadratureConfig] = None) -> EvalResult:
    """sum_{j=1}^n j^k for every complex k != -1:

        n^(k+1)/(k+1) + n^k/2 + zeta(-k)
        + pi n^(k+2)/(k+1) int_0^{pi/2} (sec v csch(pi n tan v))^2
                                       (1 - cos((k+1) v)/cos(v)^(k+1)) dv.
    """
    k = _check_k(k)
    n = _check_n(n)
    z = zeta_global(-k, cfg)
    tail = csch_power_integral(k + 1.0, n, cfg)
    coef = math.pi / (k + 1.0)
    value = cpow(n, k + 1.0) / (k + 1.0) + 0.5 * cpow(n, k) + z.value + coef * tail.value
    return combine(value, (coef, tail), (1.0, z))


_ALT_SERIES_X = 1e-2
_ALT_WEIGHT_X = 1e-6


def _alt_integrand(k: complex, n: int):
    """x -> n^(k+2) (-2 + (1+ix)^(k+1) + (1-ix)^(k+1)) e^{-2 pi n x} / (1 - e^{-2 pi n x})^2.

    Evaluated as (bracket / x^2) * (x^2 * weight) so both factors stay finite.
    """
    p = k + 1.0
    coefs = [(-1) ** m * -2.0 * gbinom(p, 2 * m + 2) for m in range(6)]
    scale = np.exp((k + 2.0) * math.log(n))
    y_per_x = 2.0 * math.pi * n

    def f(x):
        out = np.empty(x.shape, dtype=complex)
        small = x < _ALT_SERIES_X
        xs2 = x[small] ** 2
        acc = np.zeros(xs2.shape, dtype=complex)
        for c in reversed(coefs):
            acc = acc * xs2 + c
        out[small] = acc
        xb = x[~small]
        out[~small] = (-2.0 + (1.0 + 1j * xb) ** p + (1.0 - 1j * xb) ** p) / (xb * xb)

        y = y_per_x * x
        w = np.empty(x.shape)
        tiny = x < _ALT_WEIGHT_X
        w[tiny] = (1.0 - y[tiny] ** 2 / 12.0) / y_per_x**2
        yb = y[~tiny]
        w[~tiny] = x[~tiny] ** 2 * np.exp(-yb) / np.expm1(-yb) ** 2
        return scale * out * w

    return f


def powersum_ac_alt(k, n: int, cfg: Optional[QuadratureConfig] = None) -> EvalResult:
    """sum_{j=1}^n j^k from the exponential-kernel representation

        n^(k+1)/(k+1) + n^k/2 + zeta(-k)
        - 2 pi n^(k+2)/(k+1) int_0^inf (-2 + (1+ix)^(k+1) + (1-ix)^(k+1))
                                      e^{-2 pi n x}/(1 - e^{-2 pi n x})^2 dx.
    """
    k = _check_k(k)
    n = _check_n(n)
    z = zeta_global(-k, cfg)
    p = k + 1.0
    if p == 1:
        tail = EvalResult(0j, 0.0, 0, None, True)
    else:
        tail = integrate_semi_infinite(_alt_integrand(k, n), 2.0 * math.pi * n, growth_of(p), cfg)
    coef = -2.0 * math.pi / (k + 1.0)
    value = cpow(n, k + 1.0) / (k + 1.0) + 0.5 * cpow(n, k) + z.value + coef * tail.value
    return combine(value, (coef, tail), (1.0, z))
