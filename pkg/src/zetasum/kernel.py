"""Complex elementary functions shared by every evaluator.

All powers and logarithms use the principal branch (imaginary part of the
logarithm in ``(-pi, pi]``).  Complex scalars are plain Python ``complex``;
the vectorised helpers accept and return numpy arrays.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import CapacityError, DomainError, PoleError

__all__ = [
    "BernoulliTable",
    "as_complex",
    "bernoulli_table",
    "cpow",
    "csch_sq",
    "log_gamma",
    "sinhc_sq",
]

BERNOULLI_CAP = 120

# Lanczos approximation, g = 7, nine terms.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def as_complex(z) -> complex:
    """Coerce a number to ``complex`` and reject NaN/Inf."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite argument {z!r}")
    return z


def _is_real_integer(w: complex) -> bool:
    return w.imag == 0.0 and w.real.is_integer() and abs(w.real) <= 64


def cpow(z, w) -> complex:
    """Principal-branch power ``exp(w * Log z)``.

    Small real-integer exponents go through repeated multiplication so that
    e.g. ``cpow(1j, 2)`` is exactly ``-1``.
    """
    z = as_complex(z)
    w = as_complex(w)
    if z == 0:
        if w.real > 0:
            return 0j
        raise DomainError(f"0 raised to a power with non-positive real part ({w})")
    if _is_real_integer(w):
        return z ** int(w.real)
    return cmath.exp(w * cmath.log(z))


def _lanczos_log_gamma(z: complex) -> complex:
    z = z - 1.0
    x = _LANCZOS_COEF[0]
    for i, c in enumerate(_LANCZOS_COEF[1:], start=1):
        x += c / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def log_gamma(z) -> complex:
    """Principal branch of log Gamma(z).

    The result is the analytic continuation of the real ``lgamma`` from the
    positive axis, continuous everywhere except across the negative real
    axis.  For ``Re(z) < 0.5`` the argument is shifted upward with the
    recurrence ``Gamma(z) = Gamma(z + m) / (z (z+1) ... (z+m-1))``.
    """
    z = as_complex(z)
    if z.imag == 0.0 and z.real <= 0 and z.real.is_integer():
        raise PoleError(f"Gamma has a pole at {z.real:g}")
    if z.real >= 0.5:
        return _lanczos_log_gamma(z)
    m = math.ceil(0.5 - z.real)
    acc = 0j
    for j in range(m):
        acc += cmath.log(z + j)
    return _lanczos_log_gamma(z + m) - acc


@dataclass(frozen=True)
class BernoulliTable:
    """Exact Bernoulli numbers and the matching even zeta values.

    ``values[m]`` is ``B_m`` for ``0 <= m <= max_index`` with the odd entries
    stored as zero; ``b1`` carries ``B_1 = -1/2``.  ``zeta_even[j]`` is
    ``zeta(2j)`` obtained from ``B_{2j}`` (so ``zeta_even[0] = -1/2``).
    """

    max_index: int
    values: tuple[Fraction, ...]
    zeta_even: tuple[complex, ...]
    b1: Fraction = Fraction(-1, 2)


@lru_cache(maxsize=None)
def _bernoulli_numbers(max_index: int) -> tuple[Fraction, ...]:
    # sum_{m=0}^{M} C(M+1, m) B_m = 0, solved for B_M
    b = [Fraction(1)]
    for big_m in range(1, max_index + 1):
        acc = Fraction(0)
        for m in range(big_m):
            acc += math.comb(big_m + 1, m) * b[m]
        b.append(-acc / (big_m + 1))
    return tuple(b)


def _zeta_from_bernoulli(j: int, b2j: Fraction) -> complex:
    # B_2j/(2j)! = -2 (-1)^j (2 pi)^{-2j} zeta(2j)
    ratio = b2j / math.factorial(2 * j)
    sign = -1 if j % 2 == 0 else 1
    return complex(sign * float(ratio) * (2.0 * math.pi) ** (2 * j) / 2.0)


@lru_cache(maxsize=None)
def bernoulli_table(max_index: int) -> BernoulliTable:
    if max_index % 2 or max_index < 2:
        raise DomainError(f"max_index must be an even integer >= 2, got {max_index}")
    if max_index > BERNOULLI_CAP:
        raise CapacityError(f"Bernoulli table is capped at index {BERNOULLI_CAP}, asked for {max_index}")
    raw = list(_bernoulli_numbers(max_index))
    b1 = raw[1]
    for m in range(3, max_index + 1, 2):
        raw[m] = Fraction(0)
    raw[1] = Fraction(0)
    zeta_even = tuple(_zeta_from_bernoulli(j, raw[2 * j]) for j in range(max_index // 2 + 1))
    return BernoulliTable(max_index=max_index, values=tuple(raw), zeta_even=zeta_even, b1=b1)


def csch_sq(z):
    """csch(z)**2 via ``4 exp(-2z) / expm1(-2z)**2``.

    Never overflows for large ``Re(z)``.  Requires ``Re(z) > 0``; works on
    scalars and numpy arrays.
    """
    arr = np.asarray(z, dtype=complex)
    if np.any(~(arr.real > 0)):
        raise DomainError("csch_sq needs Re(z) > 0")
    e = np.exp(-2.0 * arr)
    out = 4.0 * e / np.expm1(-2.0 * arr) ** 2
    if np.ndim(z) == 0:
        return complex(out)
    return out


def sinhc_sq(z):
    """``(z / sinh z)**2`` for ``Re(z) > 0``, finite down to ``z -> 0``."""
    arr = np.asarray(z, dtype=complex)
    small = np.abs(arr) < 1e-3
    out = np.empty_like(arr)
    zs = arr[small]
    z2 = zs * zs
    out[small] = 1.0 - z2 / 3.0 + z2 * z2 / 15.0 - 2.0 * z2**3 / 189.0
    zb = arr[~small]
    if zb.size:
        out[~small] = zb * zb * csch_sq(zb)
    if np.ndim(z) == 0:
        return complex(out)
    return out
