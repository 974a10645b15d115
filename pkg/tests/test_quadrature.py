import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetasum.errors import DomainError, IntegrandError
from zetasum.kernel import csch_sq, sinhc_sq
from zetasum.quadrature import (
    EvalResult,
    QuadratureConfig,
    config_from_env,
    integrate_finite,
    integrate_semi_infinite,
    truncation_point,
)


def test_config_validation():
    QuadratureConfig()
    for bad in ({"rel_tol": 0}, {"abs_tol": -1}, {"max_depth": 0},
                {"max_evals": 99}, {"tail_margin": 0}):
        with pytest.raises(DomainError):
            QuadratureConfig(**bad)


def test_config_from_env():
    cfg = config_from_env(environ={"ZETASUM_REL_TOL": "1e-6", "ZETASUM_MAX_EVALS": "5000"})
    assert cfg.rel_tol == 1e-6
    assert cfg.max_evals == 5000
    assert cfg.abs_tol == QuadratureConfig().abs_tol


def test_constant_on_unit_interval():
    res = integrate_finite(lambda x: np.ones_like(x, dtype=complex), 0, 1)
    assert abs(res.value - 1) <= 1e-14
    assert res.converged
    assert res.truncation_point is None


def test_inverse_sqrt_endpoint_singularity():
    res = integrate_finite(lambda x: x**-0.5, 0, 1)
    assert abs(res.value - 2) <= 1e-10
    assert res.converged


def test_endpoints_never_sampled():
    seen = []

    def f(x):
        seen.append(x.copy())
        return np.log(x) + np.log(0.5 * math.pi - x)

    integrate_finite(f, 0.0, 0.5 * math.pi)
    xs = np.concatenate(seen)
    assert xs.min() > 0 and xs.max() < 0.5 * math.pi


def test_identically_zero_kernel_on_quarter_period():
    # the k = 0 kernel 1 - cos(v)/cos(v); small-v guard uses the analytic limit
    def f(v):
        t = np.tan(v)
        safe = np.where(v < 1e-12, 1.0, v)
        kernel = 1.0 - np.cos(safe) / np.cos(safe)
        body = csch_sq(math.pi * np.tan(safe)) / np.cos(safe) ** 2 * kernel
        return np.where(v < 1e-12, 0.0, body) + 0j * t

    res = integrate_finite(f, 0.0, 0.5 * math.pi)
    assert res.value == 0
    assert res.converged


def test_nan_integrand_names_abscissa():
    def f(x):
        return np.where(x > 0.7, np.nan, x)

    with pytest.raises(IntegrandError) as info:
        integrate_finite(f, 0, 1)
    assert info.value.abscissa > 0.7
    assert repr(info.value.abscissa)[:6] in str(info.value)


def test_budget_exhaustion_is_reported_not_raised():
    cfg = QuadratureConfig(max_evals=100)
    res = integrate_finite(lambda x: np.exp(1e6j * x), 0, 1, cfg)
    assert isinstance(res, EvalResult)
    assert not res.converged
    assert res.evals_used <= 200


def test_bad_interval():
    with pytest.raises(DomainError):
        integrate_finite(lambda x: x, 1, 1)


def test_semi_infinite_examples():
    res = integrate_semi_infinite(lambda t: np.exp(-t), 1.0, 0.0)
    assert abs(res.value - 1) <= 1e-10
    assert res.truncation_point == truncation_point(1.0, 0.0)

    res = integrate_semi_infinite(lambda t: t * np.exp(-2 * t), 2.0, 1.0)
    assert abs(res.value - 0.25) <= 1e-10


def test_tan_substitution_agrees():
    # k = 1 kernel: csch^2(pi t) (1 - (1 + t^2)) on (0, inf) against its (0, pi/2) image
    # t^2 csch^2(pi t) written as sinhc^2 / pi^2 so t -> 0 stays finite
    def rational(t):
        return -sinhc_sq(math.pi * t) / math.pi**2

    def trig(v):
        return rational(np.tan(v)) / np.cos(v) ** 2

    a = integrate_semi_infinite(rational, 2 * math.pi, 2.0).value
    b = integrate_finite(trig, 0.0, 0.5 * math.pi).value
    assert abs(a - b) <= 1e-9 * abs(a)
    # independent oracle: -int t^2 csch^2(pi t) = -1/(6 pi)
    assert abs(a + 1 / (6 * math.pi)) <= 1e-12


def _bisect_truncation(decay, growth, margin):
    lo, hi = 1.0, 1.0
    while decay * hi - growth * math.log1p(hi) < margin:
        hi *= 2
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if decay * mid - growth * math.log1p(mid) >= margin:
            hi = mid
        else:
            lo = mid
    return hi


def test_truncation_closed_form():
    assert truncation_point(2 * math.pi, 0) == pytest.approx(40 / (2 * math.pi), rel=1e-13)


def test_truncation_floor_at_one():
    assert truncation_point(20 * math.pi, 0) == 1.0


def test_truncation_with_growth_matches_bisection():
    t = truncation_point(1.0, 4.0)
    assert t == pytest.approx(_bisect_truncation(1.0, 4.0, 40.0), rel=1e-12)
    assert t - 4 * math.log1p(t) == pytest.approx(40, rel=1e-12)
    # the equation's root lies near 56.19
    assert 56.1 < t < 56.3


@settings(max_examples=60, deadline=None)
@given(st.floats(0.05, 50), st.floats(0, 10), st.floats(1, 200))
def test_truncation_property(decay, growth, margin):
    cfg = QuadratureConfig(tail_margin=margin)
    t = truncation_point(decay, growth, cfg)
    assert t >= 1
    assert decay * t - growth * math.log1p(t) >= margin * (1 - 1e-12)
    assert t == pytest.approx(_bisect_truncation(decay, growth, margin), rel=1e-10)


def test_truncation_rejects_nonpositive_decay():
    with pytest.raises(DomainError):
        truncation_point(0.0, 1.0)


KNOWN = [
    (lambda x: np.exp(1j * x), 0, 1, (np.exp(1j) - 1) / 1j),
    (lambda x: np.log(x), 0, 1, -1.0),
    (lambda x: x ** -0.75, 0, 1, 4.0),
    (lambda x: 1 / (1 + x * x), 0, 1, math.pi / 4),
    (lambda x: np.sqrt(np.sin(x)), 0, 0.5 * math.pi, (2 * math.pi) ** 1.5 / math.gamma(0.25) ** 2),
]


@pytest.mark.parametrize("f,a,b,exact", KNOWN)
def test_error_estimate_is_honest(f, a, b, exact):
    res = integrate_finite(f, a, b)
    err = abs(res.value - exact)
    assert err <= 5 * res.err_estimate or err <= 1e-15
    assert err <= max(1e-10 * abs(exact), 1e-14) * 10


@settings(max_examples=40, deadline=None)
@given(st.floats(0.05, 0.95), st.floats(-3, 3), st.floats(0.1, 4))
def test_split_additivity(c, shift, power):
    def f(x):
        return x ** (power - 1) * np.exp(1j * shift * x)

    whole = integrate_finite(f, 0, 1).value
    parts = integrate_finite(f, 0, c).value + integrate_finite(f, c, 1).value
    assert abs(whole - parts) <= 10 * 1e-10 * abs(whole)


def test_deterministic():
    def f(t):
        return np.exp(-(1 + 0.5j) * t) * np.sqrt(t)

    r1 = integrate_semi_infinite(f, 1.0, 0.5)
    r2 = integrate_semi_infinite(f, 1.0, 0.5)
    assert r1 == r2
