import inspect
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import modular
from errors import DomainError, NonConvergenceError, UnsupportedRegimeError
from models import ModularSolveConfig, Radius, TriParam
from scalar_special import beta_fn

SQRT_HALF = math.sqrt(0.5)
LANDEN_PHI_2 = 2 ** 1.25 / (1 + math.sqrt(2))
LANDEN_LAMBDA_2 = 16 + 12 * math.sqrt(2)

orders = st.floats(min_value=0.05, max_value=0.5)
moduli = st.floats(min_value=0.01, max_value=0.99)
distortions = st.floats(min_value=0.25, max_value=4.0)


def test_mu_symmetric_point():
    assert modular.mu(0.5, SQRT_HALF) == pytest.approx(math.pi / 2, rel=1e-14)
    assert modular.mu(0.25, SQRT_HALF) == pytest.approx(modular.symmetric_value(0.25), rel=1e-14)


def test_mu_is_decreasing_with_small_r_asymptote():
    values = [modular.mu(1 / 3, r) for r in (1e-8, 0.01, 0.3, 0.7, 0.99, 1 - 1e-9)]
    assert all(u > v for u, v in zip(values, values[1:]))
    # mu(r) + log r -> R(a)/2
    assert modular.mu(0.5, 1e-8) + math.log(1e-8) == pytest.approx(math.log(16) / 2, abs=1e-10)


def test_mu_domain():
    with pytest.raises(DomainError):
        modular.mu(0.5, 0.0)
    with pytest.raises(DomainError):
        modular.mu(0.5, 1.0)


@pytest.mark.parametrize("a, r", [(0.5, 0.5), (1 / 3, 0.3), (0.1, 0.9)])
def test_dmu_dr_against_central_difference(a, r):
    h = 1e-6
    fd = (modular.mu(a, r + h) - modular.mu(a, r - h)) / (2 * h)
    assert modular.dmu_dr(a, r) == pytest.approx(fd, rel=1e-6)


def test_mu_inv_at_pi():
    sol = modular.mu_inv(0.5, math.pi)
    assert modular.mu(0.5, Radius(r=sol.s, rc=sol.s_complement)) == pytest.approx(math.pi, rel=1e-12)
    # mu(r) mu(r') = pi^2/4
    assert modular.mu(0.5, Radius(r=sol.s_complement, rc=sol.s)) == pytest.approx(math.pi / 4, rel=1e-12)
    assert sol.iterations > 0


def test_mu_inv_extremes_keep_the_complement():
    deep = modular.mu_inv(0.5, 800.0)
    assert deep.s == 0.0
    assert deep.s_complement == pytest.approx(1.0)
    shallow = modular.mu_inv(0.5, 1e-2)
    assert shallow.s == pytest.approx(1.0)
    assert 0.0 < shallow.s_complement < 1e-100


def test_mu_inv_errors():
    with pytest.raises(DomainError):
        modular.mu_inv(0.5, 0.0)
    with pytest.raises(DomainError):
        modular.mu_inv(0.5, math.inf)
    with pytest.raises(NonConvergenceError):
        modular.mu_inv(0.5, 3.0, ModularSolveConfig(max_iters=1))


@settings(max_examples=60, deadline=None)
@given(a=orders, r=moduli)
def test_mu_inv_round_trip(a, r):
    assert modular.mu_inv(a, modular.mu(a, r)).s == pytest.approx(r, rel=1e-10)


def test_phi_landen():
    assert modular.phi(0.5, 2.0, SQRT_HALF) == pytest.approx(LANDEN_PHI_2, rel=1e-11)
    assert modular.phi(0.5, 0.5, SQRT_HALF) == pytest.approx(3 - 2 * math.sqrt(2), rel=1e-10)
    # phi_2(r) = 2 sqrt(r)/(1 + r)
    assert modular.phi(0.5, 2.0, 0.3) == pytest.approx(2 * math.sqrt(0.3) / 1.3, rel=1e-11)


def test_phi_identity_distortion():
    assert modular.phi(0.3, 1.0, 0.42) == 0.42
    with pytest.raises(DomainError):
        modular.phi(0.3, 0.0, 0.42)


@settings(max_examples=40, deadline=None)
@given(a=orders, K=distortions, r=moduli)
def test_phi_complement_identity(a, K, r):
    rr = Radius.from_r(r)
    s = modular.phi(a, K, rr)
    t = modular.phi(a, 1 / K, rr.swapped())
    assert s * s + t * t == pytest.approx(1.0, abs=1e-9)


@settings(max_examples=30, deadline=None)
@given(a=orders, K=distortions, r=moduli)
def test_phi_orders_with_distortion(a, K, r):
    s = modular.phi(a, K, r)
    if K > 1:
        assert s >= r
    else:
        assert s <= r


def test_dphi_forms_agree_and_match_differences():
    forms = modular.dphi_dr_forms(0.5, 2.0, 0.5)
    assert forms[1] == pytest.approx(forms[0], rel=1e-10)
    assert forms[2] == pytest.approx(forms[0], rel=1e-10)
    h = 1e-6
    fd_r = (modular.phi(0.5, 2.0, 0.5 + h) - modular.phi(0.5, 2.0, 0.5 - h)) / (2 * h)
    fd_K = (modular.phi(0.5, 2.0 + h, 0.5) - modular.phi(0.5, 2.0 - h, 0.5)) / (2 * h)
    assert modular.dphi_dr(0.5, 2.0, 0.5) == pytest.approx(fd_r, rel=1e-5)
    assert modular.dphi_dK(0.5, 2.0, 0.5) == pytest.approx(fd_K, rel=1e-5)


@pytest.mark.parametrize("derivative, sibling", [
    (modular.dphi_dr, modular.dphi_dK),
    (modular.deta_dx, modular.deta_dK),
])
def test_derivatives_share_their_siblings_signature(derivative, sibling):
    ours, theirs = inspect.signature(derivative), inspect.signature(sibling)
    assert [p.annotation for p in ours.parameters.values()] == [p.annotation for p in theirs.parameters.values()]
    assert ours.return_annotation is float


def test_eta_and_lambda_landen():
    assert modular.eta(0.5, 2.0, 1.0) == pytest.approx(LANDEN_LAMBDA_2, rel=1e-9)
    assert modular.lambda_fn(0.5, 2.0) == pytest.approx(LANDEN_LAMBDA_2, rel=1e-9)
    by_phi, by_inverse, by_eta = modular.lambda_forms(1 / 3, 1.7)
    assert by_inverse == pytest.approx(by_phi, rel=1e-9)
    assert by_eta == pytest.approx(by_phi, rel=1e-9)
    assert modular.lambda_fn(0.2, 1.0) == 1.0
    assert modular.eta(0.2, 1.0, 3.5) == 3.5


def test_lambda_reciprocal():
    assert modular.lambda_fn(0.3, 2.5) * modular.lambda_fn(0.3, 0.4) == pytest.approx(1.0, rel=1e-9)


def test_deta_forms_and_differences():
    forms = modular.deta_dx_forms(0.3, 1.5, 2.0)
    assert forms[1] == pytest.approx(forms[0], rel=1e-10)
    assert forms[2] == pytest.approx(forms[0], rel=1e-10)
    h = 1e-6
    fd_x = (modular.eta(0.3, 1.5, 2.0 + h) - modular.eta(0.3, 1.5, 2.0 - h)) / (2 * h)
    fd_K = (modular.eta(0.3, 1.5 + h, 2.0) - modular.eta(0.3, 1.5 - h, 2.0)) / (2 * h)
    assert modular.deta_dx(0.3, 1.5, 2.0) == pytest.approx(fd_x, rel=1e-5)
    assert modular.deta_dK(0.3, 1.5, 2.0) == pytest.approx(fd_K, rel=1e-5)
    with pytest.raises(DomainError):
        modular.eta(0.3, 1.5, 0.0)


def test_mu3_symmetric_point_and_classical_case():
    t = TriParam.shorthand(0.3, 0.8)
    assert modular.mu3(t, SQRT_HALF) == pytest.approx(beta_fn(0.3, 0.5) / 2, rel=1e-13)
    half = TriParam.shorthand(0.5, 1.0)
    assert modular.mu3(half, 0.4) == pytest.approx(modular.mu(0.5, 0.4), rel=1e-12)


def test_mu3_inversion_and_phi3():
    t = TriParam.shorthand(0.3, 0.8)
    y = modular.mu3(t, 0.2)
    assert modular.mu3_inv(t, y).s == pytest.approx(0.2, rel=1e-10)
    s = modular.phi3(t, 2.0, 0.2)
    assert modular.mu3(t, s) == pytest.approx(y / 2, rel=1e-10)
    assert modular.phi3(t, 1.0, 0.2) == 0.2


def test_mu3_inverse_needs_zero_balance():
    with pytest.raises(UnsupportedRegimeError):
        modular.mu3_inv(TriParam(a=0.3, b=0.5, c=0.7), 2.0)
