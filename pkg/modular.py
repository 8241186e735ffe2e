# modular.py
"""
The generalized modulus mu_a, its inverse, and the distortion functions built
on it: phi_K^a, eta_K^a, lambda_a, plus the three-parameter mu_{a,b,c} and
phi_K^{a,b,c}.

Inversion works in the log-modulus u = -log s on the branch s <= 1/sqrt(2),
where mu is increasing and almost linear in u. Targets below mu(1/sqrt(2))
are mapped onto that branch through mu(r) mu(r') = mu(1/sqrt(2))^2.
"""
import logging
import math
from typing import Callable

from elliptic import HALF_PI, SQRT_HALF, interior_pair, k_from_squares, order_value, RadiusLike
from errors import DomainError, NonConvergenceError, UnsupportedRegimeError
from hypergeometric import hyp2f1, zero_balanced_constant
from models import EvalConfig, ModularSolution, ModularSolveConfig, OrderParam, Radius, TriParam
from scalar_special import beta_fn, ramanujan_R

logger = logging.getLogger(__name__)

LOG_SQRT2 = 0.5 * math.log(2.0)
SYMMETRIC_RADIUS = Radius(r=SQRT_HALF, rc=SQRT_HALF)

# evaluate(u) -> (mu at s = exp(-u), d mu / du)
Evaluator = Callable[[float], tuple[float, float]]


def symmetric_value(a: float | OrderParam) -> float:
    """mu_a(1/sqrt(2)) = pi/(2 sin(pi a))."""
    return HALF_PI / math.sin(math.pi * order_value(a))


def _check_distortion(K: float) -> float:
    K = float(K)
    if not (math.isfinite(K) and K > 0.0):
        raise DomainError(f"K must be a finite positive real, got {K}")
    return K


def _k_pair(a: float, s: float, sc: float, cfg: EvalConfig | None) -> tuple[float, float]:
    """(K_a(s), K_a(s')) from a modulus and its complement."""
    k = k_from_squares(a, s * s, sc * sc, cfg, log_w=2.0 * math.log(sc) if sc > 0.0 else None)
    kc = k_from_squares(a, sc * sc, s * s, cfg, log_w=2.0 * math.log(s) if s > 0.0 else None)
    return k, kc


# --- mu_a and its derivative ---

def _mu_from_pair(a: float, r: float, rc: float, cfg: EvalConfig | None) -> float:
    k, kc = _k_pair(a, r, rc, cfg)
    return symmetric_value(a) * kc / k


def mu(a: float | OrderParam, r: RadiusLike, cfg: EvalConfig | None = None) -> float:
    """mu_a(r) = (pi/(2 sin(pi a))) K_a(r')/K_a(r), decreasing from (0, 1) onto (0, inf)."""
    a = order_value(a)
    r, rc = interior_pair(r)
    return _mu_from_pair(a, r, rc, cfg)


def dmu_dr(a: float | OrderParam, r: RadiusLike, cfg: EvalConfig | None = None) -> float:
    """d mu_a/dr = -pi^2/(4 r r'^2 K_a(r)^2)."""
    a = order_value(a)
    r, rc = interior_pair(r)
    k, _ = _k_pair(a, r, rc, cfg)
    return -(math.pi ** 2) / (4.0 * r * rc * rc * k * k)


def _mu_evaluator(a: float, cfg: EvalConfig | None) -> Evaluator:
    c0 = symmetric_value(a)

    def evaluate(u: float) -> tuple[float, float]:
        s2 = math.exp(-2.0 * u)
        sc2 = -math.expm1(-2.0 * u)
        k = k_from_squares(a, s2, sc2, cfg)
        kc = k_from_squares(a, sc2, s2, cfg, log_w=-2.0 * u)
        # -s * dmu/ds
        slope = (HALF_PI / (math.sqrt(sc2) * k)) ** 2
        return c0 * kc / k, slope

    return evaluate


# --- Shared inversion ---

def _solve_log_modulus(
    evaluate: Evaluator,
    target: float,
    c0: float,
    guess: float,
    solve_cfg: ModularSolveConfig,
    cfg: EvalConfig,
) -> tuple[float, float, int]:
    """Root u >= log(sqrt 2) of m(u) = target, m increasing with m(log sqrt 2) = c0 <= target."""
    lo = LOG_SQRT2
    width = max(1.0, target - c0)
    hi = lo + width
    for attempt in range(solve_cfg.max_iters):
        value, _ = evaluate(hi)
        if value >= target:
            break
        lo, width = hi, 2.0 * width
        hi = lo + width
    else:
        raise NonConvergenceError(f"could not bracket mu = {target}", iterations=solve_cfg.max_iters)

    u = guess if lo < guess < hi else 0.5 * (lo + hi)
    residual = math.inf
    for iteration in range(1, solve_cfg.max_iters + 1):
        value, slope = evaluate(u)
        f = value - target
        residual = abs(f)
        if f < 0.0:
            lo = u
        elif f > 0.0:
            hi = u
        if residual <= solve_cfg.abs_tol * max(1.0, abs(target)):
            # one more Newton step polishes the root without another evaluation
            if slope > 0.0 and math.isfinite(slope):
                u -= f / slope
            return u, residual, iteration
        if hi - lo <= solve_cfg.bracket_floor * max(1.0, u):
            return u, residual, iteration

        candidate = math.nan
        if iteration <= cfg.max_newton_iters and slope > 0.0 and math.isfinite(slope):
            candidate = u - f / slope
            if abs(candidate - u) <= cfg.newton_tol * max(1.0, abs(u)) and lo <= candidate <= hi:
                return candidate, residual, iteration
        if not lo < candidate < hi:
            candidate = 0.5 * (lo + hi)
        logger.debug(f"mu inversion: iteration {iteration}, u={u}, residual={residual}")
        u = candidate
    raise NonConvergenceError(
        f"mu inversion for target {target} did not converge in {solve_cfg.max_iters} iterations",
        iterations=solve_cfg.max_iters,
        last_value=u,
    )


def _invert(
    evaluate: Evaluator,
    y: float,
    c0: float,
    r_const: float,
    solve_cfg: ModularSolveConfig | None,
    cfg: EvalConfig | None,
) -> ModularSolution:
    y = float(y)
    if not (math.isfinite(y) and y > 0.0):
        raise DomainError(f"mu inversion needs a finite y > 0, got {y}")
    solve_cfg = solve_cfg or ModularSolveConfig()
    cfg = cfg or EvalConfig()
    flipped = y < c0
    target = c0 * c0 / y if flipped else y
    # mu(s) ~ log(1/s) + R/2 for small s
    u, residual, iterations = _solve_log_modulus(evaluate, target, c0, target - 0.5 * r_const, solve_cfg, cfg)
    s = math.exp(-u)
    sc = math.sqrt(-math.expm1(-2.0 * u))
    if flipped:
        s, sc = sc, s
        residual *= y / target
    return ModularSolution(s=s, s_complement=sc, residual=residual, iterations=iterations)


def mu_inv(
    a: float | OrderParam,
    y: float,
    solve_cfg: ModularSolveConfig | None = None,
    cfg: EvalConfig | None = None,
) -> ModularSolution:
    """The r with mu_a(r) = y."""
    a = order_value(a)
    return _invert(_mu_evaluator(a, cfg), y, symmetric_value(a), ramanujan_R(a), solve_cfg, cfg)


# --- phi_K^a ---

def phi_solution(
    a: float | OrderParam,
    K: float,
    r: RadiusLike,
    solve_cfg: ModularSolveConfig | None = None,
    cfg: EvalConfig | None = None,
) -> ModularSolution:
    """s = phi_K^a(r) = mu_a^{-1}(mu_a(r)/K), with its complement."""
    a = order_value(a)
    K = _check_distortion(K)
    r, rc = interior_pair(r)
    if K == 1.0:
        return ModularSolution(s=r, s_complement=rc, residual=0.0, iterations=0)
    return mu_inv(a, _mu_from_pair(a, r, rc, cfg) / K, solve_cfg, cfg)


def phi(
    a: float | OrderParam,
    K: float,
    r: RadiusLike,
    solve_cfg: ModularSolveConfig | None = None,
    cfg: EvalConfig | None = None,
) -> float:
    return phi_solution(a, K, r, solve_cfg, cfg).s


def dphi_dr_forms(
    a: float | OrderParam,
    K: float,
    r: RadiusLike,
    solve_cfg: ModularSolveConfig | None = None,
    cfg: EvalConfig | None = None,
) -> tuple[float, float, float]:
    """The three equal expressions for d phi_K^a / dr."""
    a = order_value(a)
    K = _check_distortion(K)
    r, rc = interior_pair(r)
    sol = phi_solution(a, K, Radius(r=r, rc=rc), solve_cfg, cfg)
    s, sc = sol.s, sol.s_complement
    ks, kcs = _k_pair(a, s, sc, cfg)
    kr, kcr = _k_pair(a, r, rc, cfg)
    base = s * sc * sc / (r * rc * rc)
    return (
        base * ks * ks / (K * kr * kr),
        base * ks * kcs / (kr * kcr),
        K * base * kcs * kcs / (kcr * kcr),
    )


def dphi_dr(
    a: float | OrderParam,
    K: float,
    r: RadiusLike,
    solve_cfg: ModularSolveConfig | None = None,
    cfg: EvalConfig | None = None,
) -> float:
    return dphi_dr_forms(a, K, r, solve_cfg, cfg)[0]


def dphi_dK(
    a: float | OrderParam,
    K: float,
    r: RadiusLike,
    solve_cfg: ModularSolveConfig | None = None,
    cfg: EvalConfig | None = None,
) -> float:
    """d phi_K^a / dK = 4 s s'^2 K_a(s)^2 mu_a(r)/(pi^2 K^2)."""
    a = order_value(a)
    K = _check_distortion(K)
    r, rc = interior_pair(r)
    sol = phi_solution(a, K, Radius(r=r, rc=rc), solve_cfg, cfg)
    s, sc = sol.s, sol.s_complement
    ks, _ = _k_pair(a, s, sc, cfg)
    return 4.0 * s * sc * sc * ks * ks * _mu_from_pair(a, r, rc, cfg) / (math.pi ** 2 * K * K)


# --- eta_K^a and lambda_a ---

def eta_radius(x: float) -> Radius:
    """r = sqrt(x/(1+x)) with r' = sqrt(1/(1+x))."""
    x = float(x)
    if not (math.isfinite(x) and x > 0.0):
        raise DomainError(f"x must be a finite positive real, got {x}")
    return Radius(r=math.sqrt(x / (1.0 + x)), rc=math.sqrt(1.0 / (1.0 + x)))


def eta(
    a: float | OrderParam,
    K: float,
    x: float,
    solve_cfg: ModularSolveConfig | None = None,
    cfg: EvalConfig | None = None,
) -> float:
    """eta_K^a(x) = (s/s')^2 with s = phi_K^a(sqrt(x/(1+x)))."""
    radius = eta_radius(x)
    if _check_distortion(K) == 1.0:
        return float(x)
    sol = phi_solution(a, K, radius, solve_cfg, cfg)
    return (sol.s / sol.s_complement) ** 2


def deta_dx_forms(
    a: float | OrderParam,
    K: float,
    x: float,
    solve_cfg: ModularSolveConfig | None = None,
    cfg: EvalConfig | None = None,
) -> tuple[float, float, float]:
    a = order_value(a)
    K = _check_distortion(K)
    radius = eta_radius(x)
    r, rc = radius.r, radius.rc
    sol = phi_solution(a, K, radius, solve_cfg, cfg)
    s, sc = sol.s, sol.s_complement
    ks, kcs = _k_pair(a, s, sc, cfg)
    kr, kcr = _k_pair(a, r, rc, cfg)
    q = rc * s / (r * sc)
    return (
        (q * ks / kr) ** 2 / K,
        K * (q * kcs / kcr) ** 2,
        q * q * ks * kcs / (kr * kcr),
    )


def deta_dx(
    a: float | OrderParam,
    K: float,
    x: float,
    solve_cfg: ModularSolveConfig | None = None,
    cfg: EvalConfig | None = None,
) -> float:
    """d eta_K^a(x)/dx = (1/K)(r' s K_a(s)/(r s' K_a(r)))^2 with r = sqrt(x/(1+x))."""
    return deta_dx_forms(a, K, x, solve_cfg, cfg)[0]


def deta_dK(
    a: float | OrderParam,
    K: float,
    x: float,
    solve_cfg: ModularSolveConfig | None = None,
    cfg: EvalConfig | None = None,
) -> float:
    """d eta_K^a(x)/dK = 8 eta mu_a(r) K_a(s)^2/(pi^2 K^2)."""
    a = order_value(a)
    K = _check_distortion(K)
    radius = eta_radius(x)
    sol = phi_solution(a, K, radius, solve_cfg, cfg)
    s, sc = sol.s, sol.s_complement
    ks, _ = _k_pair(a, s, sc, cfg)
    value = (s / sc) ** 2
    return 8.0 * value * _mu_from_pair(a, radius.r, radius.rc, cfg) * ks * ks / (math.pi ** 2 * K * K)


def lambda_forms(
    a: float | OrderParam,
    K: float,
    solve_cfg: ModularSolveConfig | None = None,
    cfg: EvalConfig | None = None,
) -> tuple[float, float, float]:
    """lambda_a(K) as a phi ratio, as a mu^{-1} ratio, and as eta_K^a(1)."""
    a = order_value(a)
    K = _check_distortion(K)
    c0 = symmetric_value(a)
    by_phi = (phi(a, K, SYMMETRIC_RADIUS, solve_cfg, cfg) / phi(a, 1.0 / K, SYMMETRIC_RADIUS, solve_cfg, cfg)) ** 2
    by_inverse = (mu_inv(a, c0 / K, solve_cfg, cfg).s / mu_inv(a, c0 * K, solve_cfg, cfg).s) ** 2
    return by_phi, by_inverse, eta(a, K, 1.0, solve_cfg, cfg)


def lambda_fn(
    a: float | OrderParam,
    K: float,
    solve_cfg: ModularSolveConfig | None = None,
    cfg: EvalConfig | None = None,
) -> float:
    """lambda_a(K) = (phi_K^a(1/sqrt 2)/phi_{1/K}^a(1/sqrt 2))^2; lambda_a(1) = 1."""
    if _check_distortion(K) == 1.0:
        return 1.0
    return (phi(a, K, SYMMETRIC_RADIUS, solve_cfg, cfg) / phi(a, 1.0 / K, SYMMETRIC_RADIUS, solve_cfg, cfg)) ** 2


# --- Three-parameter modulus ---

def mu3(t: TriParam, r: RadiusLike, cfg: EvalConfig | None = None) -> float:
    """mu_{a,b,c}(r) = B(a,b) F(a,b;c;r'^2)/(2 F(a,b;c;r^2)); mu3(1/sqrt 2) = B(a,b)/2."""
    t.require_modulus()
    r, rc = interior_pair(r)
    near = hyp2f1(t.a, t.b, t.c, r * r, cfg, one_minus_z=rc * rc, log_one_minus_z=2.0 * math.log(rc))
    far = hyp2f1(t.a, t.b, t.c, rc * rc, cfg, one_minus_z=r * r, log_one_minus_z=2.0 * math.log(r))
    return 0.5 * beta_fn(t.a, t.b) * far / near


def _mu3_evaluator(t: TriParam, cfg: EvalConfig | None) -> Evaluator:
    a, b, c = t.a, t.b, t.c
    half_beta = 0.5 * beta_fn(a, b)
    ratio = a * b / c

    def evaluate(u: float) -> tuple[float, float]:
        s2 = math.exp(-2.0 * u)
        sc2 = -math.expm1(-2.0 * u)
        near = hyp2f1(a, b, c, s2, cfg)
        far = hyp2f1(a, b, c, sc2, cfg, one_minus_z=s2, log_one_minus_z=-2.0 * u)
        # s^2 F'(s'^2) = (ab/c) F(a, b; c+1; s'^2) when c = a + b
        far_slope = ratio * hyp2f1(a, b, c + 1.0, sc2, cfg, one_minus_z=s2, log_one_minus_z=-2.0 * u)
        near_slope = s2 * ratio * hyp2f1(a + 1.0, b + 1.0, c + 1.0, s2, cfg)
        slope = 2.0 * half_beta * (far_slope * near + far * near_slope) / (near * near)
        return half_beta * far / near, slope

    return evaluate


def mu3_inv(
    t: TriParam,
    y: float,
    solve_cfg: ModularSolveConfig | None = None,
    cfg: EvalConfig | None = None,
) -> ModularSolution:
    """Inverse of mu_{a,b,c}; only the zero-balanced case c = a + b maps onto (0, inf)."""
    t.require_modulus()
    if not t.is_zero_balanced:
        raise UnsupportedRegimeError(
            f"mu_(a,b,c) is only inverted for c = a + b, got a={t.a}, b={t.b}, c={t.c}"
        )
    return _invert(_mu3_evaluator(t, cfg), y, 0.5 * beta_fn(t.a, t.b), zero_balanced_constant(t.a, t.b), solve_cfg, cfg)


def phi3_solution(
    t: TriParam,
    K: float,
    r: RadiusLike,
    solve_cfg: ModularSolveConfig | None = None,
    cfg: EvalConfig | None = None,
) -> ModularSolution:
    K = _check_distortion(K)
    r, rc = interior_pair(r)
    if K == 1.0:
        t.require_modulus()
        return ModularSolution(s=r, s_complement=rc, residual=0.0, iterations=0)
    return mu3_inv(t, mu3(t, Radius(r=r, rc=rc), cfg) / K, solve_cfg, cfg)


def phi3(
    t: TriParam,
    K: float,
    r: RadiusLike,
    solve_cfg: ModularSolveConfig | None = None,
    cfg: EvalConfig | None = None,
) -> float:
    """phi_K^{a,b,c}(r) = mu_{a,b,c}^{-1}(mu_{a,b,c}(r)/K)."""
    return phi3_solution(t, K, r, solve_cfg, cfg).s
