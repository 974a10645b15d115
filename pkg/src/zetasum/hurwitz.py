"""Hurwitz zeta and shifted power sums sum_j (j+b)^k for Re(b) > 0."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from ._kernels import combine, csch_kernel_integrand, csch_power_integral, growth_of
from .errors import CapacityError, DomainError, PoleError
from .faulhaber import _check_k, _check_n, compensated_sum
from .kernel import BERNOULLI_CAP, as_complex, bernoulli_table, cpow
from .quadrature import EvalResult, QuadratureConfig, integrate_semi_infinite
from .zeta import POLE_GUARD

__all__ = [
    "HurwitzParams",
    "hp_bruteforce",
    "hp_sum_ac",
    "hp_sum_hurwitz",
    "hurwitz_global",
    "hurwitz_neg_int",
]


def _check_b(b, allow_unvalidated: bool = False) -> complex:
    b = as_complex(b)
    if b.real == 0 or (b.real < 0 and not allow_unvalidated):
        raise DomainError(f"need Re(b) > 0, got b = {b}")
    return b


@dataclass(frozen=True)
class HurwitzParams:
    k: complex
    b: complex

    def __post_init__(self):
        object.__setattr__(self, "k", as_complex(self.k))
        object.__setattr__(self, "b", _check_b(self.b))


def hurwitz_neg_int(m: int, b) -> complex:
    """zeta(-m, b) for integer m >= 0 and any b != 0:

        -b^(m+1)/(m+1) + b^m/2
        + 2 m! b^(m+1) sum_{j=1}^{floor((m+1)/2)} (-1)^j (2 pi b)^(-2j) zeta(2j) / (m+1-2j)!
    """
    if isinstance(m, bool) or int(m) != m or m < 0:
        raise DomainError(f"m must be an integer >= 0, got {m!r}")
    m = int(m)
    b = as_complex(b)
    if b == 0:
        raise DomainError("b must be nonzero")
    jmax = (m + 1) // 2
    if 2 * jmax > BERNOULLI_CAP:
        raise CapacityError(f"m = {m} needs zeta(2j) beyond the Bernoulli table cap {BERNOULLI_CAP}")
    terms = [-cpow(b, m + 1) / (m + 1), 0.5 * cpow(b, m)]
    if jmax:
        zeta_even = bernoulli_table(2 * jmax).zeta_even
        for j in range(1, jmax + 1):
            # m!/(m+1-2j)! kept exact; b^(m+1) (2 pi b)^(-2j) = b^(m+1-2j) (2 pi)^(-2j)
            ratio = float(math.perm(m, 2 * j - 1)) * (2.0 * math.pi) ** (-2 * j)
            terms.append(2.0 * (-1) ** j * ratio * zeta_even[j] * cpow(b, m + 1 - 2 * j))
    return compensated_sum(terms)


def hurwitz_global(k, b, cfg: Optional[QuadratureConfig] = None, *,
                   _allow_unvalidated: bool = False) -> EvalResult:
    """zeta(k, b) for complex k != 1 and Re(b) > 0:

        b^(1-k)/(k-1) + b^(-k)/2
        + sgn(Re b) pi b^(2-k)/(k-1) int_0^{pi/2} (sec v csch(pi b tan v))^2
                                                 (1 - cos((k-1) v) cos(v)^(k-1)) dv.

    ``_allow_unvalidated`` lets Re(b) < 0 through for exploration only; the
    representation is known to fail for some such b.
    """
    k = as_complex(k)
    b = _check_b(b, _allow_unvalidated)
    if abs(k - 1.0) < POLE_GUARD:
        raise PoleError(f"pole at k=1 (|k-1| = {abs(k - 1.0):.3g})")
    res = csch_power_integral(1.0 - k, b, cfg)
    sign = 1.0 if b.real > 0 else -1.0
    coef = sign * math.pi / (k - 1.0)
    value = cpow(b, 1.0 - k) / (k - 1.0) + 0.5 * cpow(b, -k) + coef * res.value
    return combine(value, (coef, res))


def hp_bruteforce(k, b, n: int, start: int = 1) -> complex:
    """sum_{j=start}^n (j+b)^k by compensated summation."""
    if start not in (0, 1):
        raise DomainError(f"start must be 0 or 1, got {start!r}")
    k = as_complex(k)
    b = as_complex(b)
    n = _check_n(n, lower=start)
    terms = []
    for j in range(start, n + 1):
        if j + b == 0:
            raise DomainError(f"term j = {j} has j + b = 0")
        terms.append(cpow(j + b, k))
    return compensated_sum(terms)


def hp_sum_ac(k, b, n: int, cfg: Optional[QuadratureConfig] = None) -> EvalResult:
    """sum_{j=1}^n (j+b)^k for complex k != -1 and Re(b) > 0:

        ((n+b)^(k+1) - b^(k+1))/(k+1) + ((n+b)^k - b^k)/2
        + sgn(Re b) pi/(k+1) int_0^{pi/2} sec(v)^2 [(n+b)^(k+2) csch^2(pi (n+b) tan v)
                                                    - b^(k+2) csch^2(pi b tan v)]
                                          (1 - cos((k+1) v)/cos(v)^(k+1)) dv.

    Both csch^2 terms go through the quadrature as one integrand.
    """
    k = _check_k(k)
    b = _check_b(b)
    n = _check_n(n)
    p = k + 1.0
    c = n + b
    coef = math.pi / p
    if p == 1:
        tail = EvalResult(0j, 0.0, 0, None, True)
    else:
        upper = csch_kernel_integrand(p, c, cpow(c, p + 1.0))
        lower = csch_kernel_integrand(p, b, cpow(b, p + 1.0))
        tail = integrate_semi_infinite(lambda t: upper(t) - lower(t),
                                       2.0 * math.pi * b.real, growth_of(p), cfg)
    value = ((cpow(c, p) - cpow(b, p)) / p + 0.5 * (cpow(c, k) - cpow(b, k))
             + coef * tail.value)
    return combine(value, (coef, tail))


def hp_sum_hurwitz(k, b, n: int, cfg: Optional[QuadratureConfig] = None) -> EvalResult:
    """sum_{j=0}^n (j+b)^k for complex k != -1 and Re(b) > 0:

        (n+b)^(k+1)/(k+1) + (n+b)^k/2 + zeta(-k, b)
        + sgn(Re b) pi (n+b)^(k+2)/(k+1) int_0^{pi/2} (sec v csch(pi (n+b) tan v))^2
                                                     (1 - cos((k+1) v)/cos(v)^(k+1)) dv.
    """
    k = _check_k(k)
    b = _check_b(b)
    n = _check_n(n, lower=0)
    c = n + b
    z = hurwitz_global(-k, b, cfg)
    tail = csch_power_integral(k + 1.0, c, cfg)
    coef = math.pi / (k + 1.0)
    value = cpow(c, k + 1.0) / (k + 1.0) + 0.5 * cpow(c, k) + z.value + coef * tail.value
    return combine(value, (coef, tail), (1.0, z))
