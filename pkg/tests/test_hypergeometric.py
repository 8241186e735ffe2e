import math

import mpmath
import pytest
from pydantic import ValidationError

from errors import DomainError, UnsupportedRegimeError
from hypergeometric import (
    gauss_2f1,
    gauss_2f1_derivative,
    hyp2f1,
    hyp2f1_derivative,
    zero_balanced_constant,
    zero_balanced_ratio,
)
from models import EvalConfig, HypArgs
from scalar_special import beta_fn, ramanujan_R


def _oracle(l, m, n, z):
    mpmath.mp.dps = 50
    return float(mpmath.hyp2f1(l, m, n, z))


def test_closed_form_log():
    assert hyp2f1(1, 1, 2, 0.5) == pytest.approx(2 * math.log(2), rel=1e-14)


@pytest.mark.parametrize("l, m, n, z", [
    (0.5, 0.5, 1.0, 0.5),
    (0.5, 0.5, 1.0, 0.95),
    # zero-balanced, logarithmic expansion
    (0.5, 0.5, 1.0, 0.99),
    (1 / 3, 2 / 3, 1.0, 0.999),
    (1.5, 0.5, 2.0, 0.97),
    (0.1, 0.9, 1.0, 0.999999),
    # positive integer balance
    (0.5, 0.5, 2.0, 0.98),
    (1.0, 2.0, 4.0, 0.97),
    (0.25, 0.5, 1.75, 0.99),
    (-0.5, 0.5, 1.0, 0.999),
    # negative integer balance through Euler
    (0.5, 1.5, 1.0, 0.97),
])
def test_against_mpmath(l, m, n, z):
    assert hyp2f1(l, m, n, z) == pytest.approx(_oracle(l, m, n, z), rel=1e-10)


def test_polynomial_case():
    # F(-2, b; c; z) terminates
    assert hyp2f1(-2, 1.0, 1.0, 0.99) == pytest.approx(1 - 2 * 0.99 + 0.99 ** 2, abs=1e-14)


def test_euler_transform_with_terminating_tail():
    assert hyp2f1(1.0, 1.0, 1.0, 0.97) == pytest.approx(1 / 0.03, rel=1e-12)


def test_complement_lets_z_reach_one():
    w = 1e-20
    value = hyp2f1(0.5, 0.5, 1.0, 1.0, one_minus_z=w)
    assert value == pytest.approx(_oracle(0.5, 0.5, 1.0, mpmath.mpf(1) - mpmath.mpf(w)), rel=1e-10)


def test_domain_errors():
    with pytest.raises(DomainError):
        hyp2f1(0.5, 0.5, 0.0, 0.3)
    with pytest.raises(DomainError):
        hyp2f1(0.5, 0.5, 1.0, 1.0)
    with pytest.raises(DomainError):
        hyp2f1(0.5, 0.5, 1.0, -0.1)
    with pytest.raises(ValidationError):
        gauss_2f1(HypArgs(l=0.5, m=0.5, n=1.0, z=1.0))


def test_non_integer_balance_near_one_is_unsupported():
    with pytest.raises(UnsupportedRegimeError):
        hyp2f1(0.5, 0.5, 1.3, 0.99)


def test_switch_point_is_configurable():
    cfg = EvalConfig(near_one_switch=0.5)
    assert hyp2f1(0.5, 0.5, 1.0, 0.8, cfg) == pytest.approx(_oracle(0.5, 0.5, 1.0, 0.8), rel=1e-11)


def test_derivative():
    z = 0.3
    closed = (z / (1 - z) + math.log(1 - z)) / z ** 2
    assert hyp2f1_derivative(1, 1, 2, z) == pytest.approx(closed, rel=1e-13)

    args = HypArgs(l=0.5, m=0.5, n=1.0, z=0.25)
    h = 1e-5
    fd = (hyp2f1(0.5, 0.5, 1.0, 0.25 + h) - hyp2f1(0.5, 0.5, 1.0, 0.25 - h)) / (2 * h)
    assert gauss_2f1_derivative(args) == pytest.approx(fd, rel=1e-7)
    assert hyp2f1_derivative(0.0, 0.5, 1.0, 0.4) == 0.0


def test_zero_balanced_constant():
    assert zero_balanced_constant(0.5, 0.5) == pytest.approx(ramanujan_R(0.5), rel=1e-14)
    with pytest.raises(DomainError):
        zero_balanced_constant(0.0, 1.0)


def test_zero_balanced_ratio_range_and_monotone():
    a, b = 1 / 3, 2 / 3
    lower, upper = a * b / (a + b), 1 / beta_fn(a, b)
    values = [zero_balanced_ratio(a, b, x) for x in (1e-4, 0.1, 0.5, 0.9, 0.999, 1 - 1e-9)]
    assert all(lower < v < upper for v in values)
    assert all(u < v for u, v in zip(values, values[1:]))
    with pytest.raises(DomainError):
        zero_balanced_ratio(a, b, 1.0)
