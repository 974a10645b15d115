"""Error-controlled quadrature for complex-valued integrands on real intervals.

Each panel is integrated with the tanh-sinh (double exponential) rule, which
never samples the endpoints and absorbs integrable endpoint singularities.
The step is halved until two successive estimates agree; a panel that fails
to settle is bisected, up to ``max_depth`` levels.

Integrands are vectorised: they receive a 1-d float array of abscissae and
return an array of the same shape (real or complex).

Abscissae are plain floats, so a singularity at a nonzero endpoint ``b`` is
only resolved down to ``|x - b| ~ eps |b|``; put strong singularities at 0.

``err_estimate`` measures discretisation error.  Rounding inside the integrand
is not seen; callers whose integrands cancel heavily must account for it.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Callable, Optional

import numpy as np
from scipy.optimize import brentq

from .errors import DomainError, IntegrandError

__all__ = [
    "EvalResult",
    "QuadratureConfig",
    "config_from_env",
    "integrate_finite",
    "integrate_semi_infinite",
    "truncation_point",
]

ENV_PREFIX = "ZETASUM_"

Integrand = Callable[[np.ndarray], np.ndarray]

# In tau-space; at 6.5 the node spacing from the endpoint has underflowed.
_TAU_MAX = 6.5
_MIN_LEVEL = 2
_MAX_LEVEL = 8
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_depth: int = 30
    max_evals: int = 200_000
    tail_margin: float = 40.0

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise DomainError(f"rel_tol must be > 0, got {self.rel_tol}")
        if not self.abs_tol > 0:
            raise DomainError(f"abs_tol must be > 0, got {self.abs_tol}")
        if self.max_depth < 1:
            raise DomainError(f"max_depth must be >= 1, got {self.max_depth}")
        if self.max_evals < 100:
            raise DomainError(f"max_evals must be >= 100, got {self.max_evals}")
        if not self.tail_margin > 0:
            raise DomainError(f"tail_margin must be > 0, got {self.tail_margin}")


def config_from_env(base: Optional[QuadratureConfig] = None, environ=None) -> QuadratureConfig:
    """Apply ``ZETASUM_REL_TOL``, ``ZETASUM_ABS_TOL``, ``ZETASUM_MAX_DEPTH``,
    ``ZETASUM_MAX_EVALS`` and ``ZETASUM_TAIL_MARGIN`` overrides."""
    environ = os.environ if environ is None else environ
    cfg = base or QuadratureConfig()
    overrides = {}
    for field, conv in (("rel_tol", float), ("abs_tol", float), ("max_depth", int),
                        ("max_evals", int), ("tail_margin", float)):
        raw = environ.get(ENV_PREFIX + field.upper())
        if raw is not None and raw != "":
            overrides[field] = conv(raw)
    return replace(cfg, **overrides) if overrides else cfg


@dataclass(frozen=True)
class EvalResult:
    value: complex
    err_estimate: float
    evals_used: int
    truncation_point: Optional[float] = None
    converged: bool = True

    def __complex__(self):
        return complex(self.value)


@lru_cache(maxsize=None)
def _level_nodes(level: int):
    """Offsets from the nearest endpoint (as fractions of the half-width) and
    weights for the tau-nodes that are new at ``level``.

    Returns ``(delta, weight, center)``: ``delta`` and ``weight`` apply to
    the symmetric pair at +/- tau; ``center`` is True only for tau = 0.
    """
    h = 2.0 ** -level
    if level == 0:
        tau = np.arange(0.0, _TAU_MAX + h / 2, h)
    else:
        tau = np.arange(h, _TAU_MAX + h / 2, 2 * h)
    u = 0.5 * math.pi * np.sinh(tau)
    e = np.exp(-2.0 * u)
    delta = 2.0 * e / (1.0 + e)
    weight = 0.5 * math.pi * np.cosh(tau) * 4.0 * e / (1.0 + e) ** 2
    keep = delta > 0
    return delta[keep], weight[keep], level == 0


def _evaluate(f: Integrand, x: np.ndarray) -> np.ndarray:
    y = np.asarray(f(x), dtype=complex)
    if y.shape != x.shape:
        y = np.broadcast_to(y, x.shape).astype(complex)
    bad = ~np.isfinite(y)
    if bad.any():
        i = int(np.argmax(bad))
        raise IntegrandError(float(x[i]), complex(y[i]))
    return y


def _panel(f: Integrand, a: float, b: float, rel_tol: float, abs_tol: float, budget: int):
    """Tanh-sinh on one panel.  Returns (value, err, evals, ok)."""
    d = 0.5 * (b - a)
    total = 0j
    prev = None
    evals = 0
    err = math.inf
    for level in range(_MAX_LEVEL + 1):
        delta, weight, has_center = _level_nodes(level)
        dx = d * delta
        left = a + dx
        right = b - dx
        if has_center:
            # tau = 0 sits at the midpoint; drop its duplicate from the right side
            right = right[1:]
        lmask = (left > a) & (left < b)
        rmask = (right > a) & (right < b)
        x = np.concatenate([left[lmask], right[rmask]])
        w = np.concatenate([weight[lmask], (weight[1:] if has_center else weight)[rmask]])
        if evals + x.size > budget:
            break
        y = _evaluate(f, x)
        evals += x.size
        total += np.sum(w * y)
        est = d * total * 2.0 ** -level
        if prev is not None:
            # floor for rounding in the node sum
            err = max(abs(est - prev), 64 * _EPS * abs(est))
            if level >= _MIN_LEVEL and err <= max(rel_tol * abs(est), abs_tol):
                return complex(est), float(err), evals, True
        prev = est
    if prev is None:
        return 0j, math.inf, evals, False
    return complex(prev), float(err), evals, False


def integrate_finite(f: Integrand, a: float, b: float,
                     cfg: Optional[QuadratureConfig] = None) -> EvalResult:
    """Integrate ``f`` over the open interval ``(a, b)``."""
    cfg = cfg or QuadratureConfig()
    a = float(a)
    b = float(b)
    if not a < b:
        raise DomainError(f"need a < b, got ({a}, {b})")

    value, err, evals, ok = _panel(f, a, b, cfg.rel_tol, cfg.abs_tol, cfg.max_evals)
    if ok:
        return EvalResult(value, err, evals, None, True)
    target = max(cfg.rel_tol * abs(value), cfg.abs_tol)

    # bisect panels depth-first, tolerance shared in proportion to width
    width = b - a
    total = 0j
    total_err = 0.0
    converged = True
    mid = 0.5 * (a + b)
    stack = [(mid, b, 1), (a, mid, 1)]
    while stack:
        lo, hi, depth = stack.pop()
        v, e, n, ok = _panel(f, lo, hi, 0.0, target * (hi - lo) / width, cfg.max_evals - evals)
        evals += n
        # n == 0: the remaining budget cannot pay for even one level
        if ok or n == 0 or depth >= cfg.max_depth or evals >= cfg.max_evals:
            total += v
            total_err += e
            converged = converged and ok
            continue
        mid = 0.5 * (lo + hi)
        stack.append((mid, hi, depth + 1))
        stack.append((lo, mid, depth + 1))
    converged = converged and total_err <= max(cfg.rel_tol * abs(total), cfg.abs_tol)
    return EvalResult(complex(total), float(total_err), evals, None, converged)


def truncation_point(decay: float, growth_exponent: float,
                     cfg: Optional[QuadratureConfig] = None) -> float:
    """Smallest ``T >= 1`` with ``decay*T - growth*log(1+T) >= tail_margin``."""
    cfg = cfg or QuadratureConfig()
    if not decay > 0:
        raise DomainError(f"decay must be > 0, got {decay}")
    g = max(float(growth_exponent), 0.0)
    margin = cfg.tail_margin

    def excess(t):
        return decay * t - g * math.log1p(t) - margin

    if excess(1.0) >= 0:
        return 1.0
    hi = 2.0
    while excess(hi) < 0:
        hi *= 2.0
    return brentq(excess, 1.0, hi, xtol=1e-13, rtol=4 * np.finfo(float).eps)


def integrate_semi_infinite(f: Integrand, decay: float, growth_exponent: float = 0.0,
                            cfg: Optional[QuadratureConfig] = None) -> EvalResult:
    """Integrate ``f`` over ``(0, inf)`` given ``|f(t)| <~ t**growth * exp(-decay*t)``.

    The tail beyond the truncation point is below ``exp(-tail_margin)``
    relative to the envelope and is dropped.
    """
    cfg = cfg or QuadratureConfig()
    t_max = truncation_point(decay, growth_exponent, cfg)
    res = integrate_finite(f, 0.0, t_max, cfg)
    return replace(res, truncation_point=t_max)
