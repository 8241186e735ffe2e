import math

import mpmath
import pytest
from pydantic import ValidationError

from errors import DomainError, NumericalOverflowError
from models import PExponent
from scalar_special import (
    EULER_GAMMA,
    artanh_p,
    beta_fn,
    digamma,
    gamma_fn,
    log_gamma,
    pi_p,
    pochhammer,
    ramanujan_R,
)


def test_pochhammer_values():
    assert pochhammer(0.5, 3) == pytest.approx(0.5 * 1.5 * 2.5)
    assert pochhammer(-2.0, 0) == 1.0
    assert pochhammer(1.0, 5) == pytest.approx(120.0)


@pytest.mark.parametrize("a, n", [(0.0, 0), (1.0, -1), (1.0, 2.5)])
def test_pochhammer_rejects(a, n):
    with pytest.raises(DomainError):
        pochhammer(a, n)


def test_gamma_and_beta():
    assert gamma_fn(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    assert log_gamma(10.0) == pytest.approx(math.log(362880.0), rel=1e-14)
    assert beta_fn(1 / 3, 2 / 3) == pytest.approx(2 * math.pi / math.sqrt(3), rel=1e-13)


def test_gamma_domain_and_overflow():
    with pytest.raises(DomainError):
        gamma_fn(-1.0)
    with pytest.raises(DomainError):
        beta_fn(0.0, 1.0)
    with pytest.raises(NumericalOverflowError):
        gamma_fn(200.0)


@pytest.mark.parametrize("x, expected", [
    (1.0, -EULER_GAMMA),
    (0.5, -EULER_GAMMA - 2 * math.log(2)),
    (2.0, 1 - EULER_GAMMA),
])
def test_digamma(x, expected):
    assert digamma(x) == pytest.approx(expected, rel=1e-13)


def test_ramanujan_R():
    assert ramanujan_R(0.5) == pytest.approx(math.log(16.0), rel=1e-13)
    assert ramanujan_R(1 / 3) == pytest.approx(-2 * EULER_GAMMA - digamma(1 / 3) - digamma(2 / 3), rel=1e-13)
    assert ramanujan_R(0.2) == pytest.approx(ramanujan_R(0.8), rel=1e-14)
    with pytest.raises(DomainError):
        ramanujan_R(1.0)


@pytest.mark.parametrize("p, expected", [
    (2.0, math.pi),
    (4.0, math.pi / math.sqrt(2)),
    (3.0, 2 * math.pi / (3 * math.sin(math.pi / 3))),
])
def test_pi_p(p, expected):
    assert pi_p(p) == pytest.approx(expected, rel=1e-14)
    assert pi_p(PExponent(p=p)) == pi_p(p)


def test_pi_p_needs_p_above_one():
    with pytest.raises(ValidationError):
        pi_p(1.0)


@pytest.mark.parametrize("x", [0.1, 0.5, 0.9, 0.99, 0.9999])
def test_artanh_2_is_artanh(x):
    assert artanh_p(2.0, x) == pytest.approx(math.atanh(x), rel=1e-11)


@pytest.mark.parametrize("p, x", [(3.0, 0.5), (3.0, 0.995), (1.5, 0.7), (4.0, 0.999)])
def test_artanh_p_against_quadrature(p, x):
    mpmath.mp.dps = 30
    expected = float(mpmath.quad(lambda t: 1 / (1 - t ** p), [0, x]))
    assert artanh_p(p, x) == pytest.approx(expected, rel=1e-10)


def test_artanh_p_domain():
    assert artanh_p(2.0, 0.0) == 0.0
    with pytest.raises(DomainError):
        artanh_p(2.0, 1.0)
