import math

import mpmath
import pytest

from zetasum.errors import CapacityError, DomainError, PoleError, SingularParameterError
from zetasum.faulhaber import powersum_ac
from zetasum.hurwitz import (
    HurwitzParams,
    hp_bruteforce,
    hp_sum_ac,
    hp_sum_hurwitz,
    hurwitz_global,
    hurwitz_neg_int,
)
from zetasum.zeta import zeta_global

from .conftest import rel_err


def test_params_validation():
    p = HurwitzParams(2, 1 + 1j)
    assert p.b == 1 + 1j
    with pytest.raises(DomainError):
        HurwitzParams(2, -0.5)
    with pytest.raises(DomainError):
        HurwitzParams(2, 2j)


def test_neg_int_examples():
    assert hurwitz_neg_int(0, 0.7) == pytest.approx(-0.2, abs=1e-15)
    assert hurwitz_neg_int(1, 1) == pytest.approx(-1 / 12, rel=1e-14)
    assert abs(hurwitz_neg_int(2, 1)) <= 1e-15


@pytest.mark.parametrize("m", range(0, 8))
@pytest.mark.parametrize("b", [0.4, 1, 2.5, 1 + 1j, -0.3 + 2j])
def test_neg_int_matches_bernoulli_polynomials(m, b):
    # zeta(-m, b) = -B_{m+1}(b)/(m+1), independent oracle via mpmath
    ref = -complex(mpmath.bernpoly(m + 1, b)) / (m + 1)
    assert abs(hurwitz_neg_int(m, b) - ref) <= 1e-12 * max(abs(ref), 1)


def test_neg_int_limits():
    with pytest.raises(DomainError):
        hurwitz_neg_int(-1, 1)
    with pytest.raises(DomainError):
        hurwitz_neg_int(2, 0)
    with pytest.raises(CapacityError):
        hurwitz_neg_int(200, 1)


def test_global_examples():
    assert rel_err(hurwitz_global(2, 1).value, math.pi**2 / 6) <= 1e-9
    assert rel_err(hurwitz_global(2, 2).value, math.pi**2 / 6 - 1) <= 1e-9
    assert rel_err(hurwitz_global(-1, 1).value, -1 / 12) <= 1e-9


def test_global_errors():
    with pytest.raises(PoleError):
        hurwitz_global(1, 2)
    with pytest.raises(DomainError):
        hurwitz_global(2, -0.5)
    with pytest.raises(DomainError):
        hurwitz_global(2, 0)


def test_unvalidated_flag_lets_negative_b_through():
    res = hurwitz_global(2, -0.5 + 1j, _allow_unvalidated=True)
    assert math.isfinite(res.value.real)


@pytest.mark.parametrize("k", [2, -1.5, 3 + 2j, 0.5 - 1j, -4.25])
@pytest.mark.parametrize("b", [0.3, 1, 2 + 1j, 7.5])
def test_global_against_mpmath(k, b):
    ref = complex(mpmath.zeta(k, b))
    assert rel_err(hurwitz_global(k, b).value, ref) <= 1e-8


@pytest.mark.parametrize("k", [-3, -0.5, 0.5 + 2j, 2, 4])
def test_reduces_to_riemann(k):
    assert rel_err(hurwitz_global(k, 1).value, zeta_global(k).value) <= 1e-8


@pytest.mark.parametrize("k", [2, -1.5, 1.5 + 1j])
@pytest.mark.parametrize("b", [0.3, 1, 2 + 1j])
def test_recurrence(k, b):
    diff = hurwitz_global(k, b).value - hurwitz_global(k, b + 1).value
    assert rel_err(diff, b ** -k) <= 1e-8


@pytest.mark.parametrize("k", [2, 3, -0.5])
def test_half_offset(k):
    assert rel_err(hurwitz_global(k, 0.5).value, (2**k - 1) * zeta_global(k).value) <= 1e-8


@pytest.mark.parametrize("m", range(6))
@pytest.mark.parametrize("b", [0.4, 1, 2.5, 1 + 1j])
def test_global_matches_neg_int(m, b):
    assert abs(hurwitz_global(-m, b).value - hurwitz_neg_int(m, b)) <= 1e-9


@pytest.mark.parametrize("k", [2, 0.5, -3])
@pytest.mark.parametrize("n", [1, 5, 10])
def test_bridge(k, n):
    lhs = powersum_ac(k, n).value
    rhs = zeta_global(-k).value - hurwitz_global(-k, n + 1).value
    assert rel_err(lhs, rhs) <= 1e-8


def test_bruteforce_examples():
    assert hp_bruteforce(2, 1, 3) == 29
    assert hp_bruteforce(1, 0.5, 2, start=0) == 4.5
    assert hp_bruteforce(-2, 1, 2) == pytest.approx(13 / 36, rel=1e-15)
    with pytest.raises(DomainError):
        hp_bruteforce(-2, -2, 3)
    with pytest.raises(DomainError):
        hp_bruteforce(2, 1, 3, start=2)


def test_hp_examples():
    assert rel_err(hp_sum_ac(2, 1, 3).value, 29) <= 1e-9
    assert rel_err(hp_sum_ac(3, 0.5, 2).value, 19) <= 1e-9
    assert rel_err(hp_sum_ac(0.5, 1, 3).value, math.sqrt(2) + math.sqrt(3) + 2) <= 1e-9
    assert rel_err(hp_sum_hurwitz(2, 1, 3).value, 30) <= 1e-9
    assert rel_err(hp_sum_hurwitz(0, 0.3, 5).value, 6) <= 1e-9
    assert rel_err(hp_sum_hurwitz(-2, 1, 0).value, 1) <= 1e-9


@pytest.mark.parametrize("k", [-3, -2, 0, 1, 2, 3, 4, 5])
@pytest.mark.parametrize("b", [0.3, 1, 2 + 0.5j])
def test_hp_against_bruteforce(k, b):
    for n in (1, 4, 15):
        assert rel_err(hp_sum_ac(k, b, n).value, hp_bruteforce(k, b, n, 1)) <= 1e-9
        assert rel_err(hp_sum_hurwitz(k, b, n).value, hp_bruteforce(k, b, n, 0)) <= 1e-9


def test_hp_complex_exponent():
    k, b, n = 1.5 - 0.5j, 0.7 + 0.2j, 6
    assert rel_err(hp_sum_ac(k, b, n).value, hp_bruteforce(k, b, n, 1)) <= 1e-9
    assert rel_err(hp_sum_hurwitz(k, b, n).value, hp_bruteforce(k, b, n, 0)) <= 1e-9


@pytest.mark.parametrize("fn", [hp_sum_ac, hp_sum_hurwitz])
def test_hp_errors(fn):
    with pytest.raises(SingularParameterError):
        fn(-1, 1, 3)
    with pytest.raises(DomainError):
        fn(2, -1, 3)
