# bounds.py
"""
Closed-form bound evaluators. Each returns every side of its inequality
chain as a BoundSides; none of them evaluates the quantity it bounds, the
harness pairs the two.
"""
import logging
import math

from elliptic import HALF_PI, SQRT_HALF, ellE, ellK, interior_pair, order_value, RadiusLike
from errors import DomainError
from hypergeometric import hyp2f1
from models import BoundSides, EvalConfig, OrderParam, Radius
from scalar_special import artanh_p, pi_p

logger = logging.getLogger(__name__)


def _check_degree(p: float, minimum: float) -> float:
    p = float(p)
    if not (math.isfinite(p) and p >= minimum):
        raise DomainError(f"p must be a finite real >= {minimum}, got {p}")
    return p


def _exp_or_inf(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


# --- Power-mean chains of F, K_a and E_a ---

def thm15_chain(
    a: float,
    b: float,
    c: float,
    r: RadiusLike,
    p: float,
    cfg: EvalConfig | None = None,
    *,
    part: int = 1,
) -> BoundSides:
    """
    part 1: F(a,b;c;r^p)^(1/p) <= F(a,b;c;r) <= F(a,b;c;r^(1/p))^p
    part 2: (pi/2)^(1-1/p) K_a(r^p)^(1/p) <= K_a(r) <= (pi/2)^(1-p) K_a(r^(1/p))^p
    part 3: (pi/2)^(1-p) E_a(r^(1/p))^p <= E_a(r) <= (pi/2)^(1-1/p) E_a(r^p)^(1/p)

    Parts 2 and 3 read `a` as the order of K_a, E_a and ignore b, c.
    """
    p = _check_degree(p, 1.0)
    r, rc = interior_pair(r)
    here = Radius(r=r, rc=rc)
    inner, outer = here.power(p), here.power(1.0 / p)
    if part == 1:
        if min(a, b, c) <= 0.0:
            raise DomainError(f"thm15_chain needs a, b, c > 0, got ({a}, {b}, {c})")

        def F(x: Radius) -> float:
            return hyp2f1(a, b, c, x.r, cfg, one_minus_z=-math.expm1(math.log(x.r)))

        return BoundSides(
            lower=F(inner) ** (1.0 / p),
            middles=[F(here)],
            upper=F(outer) ** p,
        )

    order = order_value(a)
    if part == 2:
        return BoundSides(
            lower=HALF_PI ** (1.0 - 1.0 / p) * ellK(order, inner, cfg) ** (1.0 / p),
            middles=[ellK(order, here, cfg)],
            upper=HALF_PI ** (1.0 - p) * ellK(order, outer, cfg) ** p,
        )
    if part == 3:
        return BoundSides(
            lower=HALF_PI ** (1.0 - p) * ellE(order, outer, cfg) ** p,
            middles=[ellE(order, here, cfg)],
            upper=HALF_PI ** (1.0 - 1.0 / p) * ellE(order, inner, cfg) ** (1.0 / p),
        )
    raise DomainError(f"thm15_chain has parts 1, 2 and 3, got {part}")


# --- Bounds for K_a through artanh_p ---

def thm17_chain(p: float, r: RadiusLike, cfg: EvalConfig | None = None) -> BoundSides:
    """(pi/2)sqrt(artanh_p(r)/r) < (pi/2)(1 - ((p-1)/p^2) log r'^2) < K_{1/p}(r) < (pi/2)(1 - (2/(p pi_p)) log r'^2)."""
    p = _check_degree(p, 2.0)
    r, rc = interior_pair(r)
    log_rc2 = 2.0 * math.log(rc)
    return BoundSides(
        lower=HALF_PI * math.sqrt(artanh_p(p, r, cfg) / r),
        middles=[
            HALF_PI * (1.0 - (p - 1.0) / (p * p) * log_rc2),
            ellK(1.0 / p, Radius(r=r, rc=rc), cfg),
        ],
        upper=HALF_PI * (1.0 - 2.0 / (p * pi_p(p)) * log_rc2),
    )


def aq_bounds(r: RadiusLike) -> BoundSides:
    """The classical bounds (pi/2)(artanh(r)/r)^(3/4) < K(r) < (pi/2) artanh(r)/r."""
    r, rc = interior_pair(r)
    # artanh r = log((1 + r)/r')
    ratio = (math.log1p(r) - math.log(rc)) / r
    return BoundSides(lower=HALF_PI * ratio ** 0.75, upper=HALF_PI * ratio)


# --- Bounds for mu_a ---

def thm19_lu(p: float, r: RadiusLike) -> BoundSides:
    """l_p(r) < mu_{1/p}(r) < u_p(r)."""
    p = _check_degree(p, 2.0)
    r, rc = interior_pair(r)
    log_r2, log_rc2 = 2.0 * math.log(r), 2.0 * math.log(rc)
    pp = p * pi_p(p)
    lower = (pi_p(p) / 2.0) ** 2 * (p * p - (p - 1.0) * log_r2) / (pp - 2.0 * log_rc2)
    upper = (p / 2.0) ** 2 * (pp - 2.0 * log_r2) / (p * p - (p - 1.0) * log_rc2)
    return BoundSides(lower=lower, upper=upper)


def mu_complement_bounds(p: float, r: RadiusLike, cfg: EvalConfig | None = None) -> BoundSides:
    """
    Two-sided bound of mu_{1/p}(r') through K_{1/p}(r):
    (p pi_p/(2 pi)) K/(1 - (2/(p pi_p)) log r^2) <= mu(r') <= (p pi_p/(2 pi)) K/(1 - ((p-1)/p^2) log r^2).
    """
    p = _check_degree(p, 2.0)
    r, rc = interior_pair(r)
    pp = p * pi_p(p)
    log_r2 = 2.0 * math.log(r)
    scaled = pp / (2.0 * math.pi) * ellK(1.0 / p, Radius(r=r, rc=rc), cfg)
    return BoundSides(
        lower=scaled / (1.0 - 2.0 / pp * log_r2),
        upper=scaled / (1.0 - (p - 1.0) / (p * p) * log_r2),
    )


def mu_complement_printed_upper(p: float, r: RadiusLike, cfg: EvalConfig | None = None) -> float:
    """Upper side with the ((p-1)/p) denominator; it drops below mu(r') as r -> 1."""
    p = _check_degree(p, 2.0)
    r, rc = interior_pair(r)
    pp = p * pi_p(p)
    scaled = pp / (2.0 * math.pi) * ellK(1.0 / p, Radius(r=r, rc=rc), cfg)
    return scaled / (1.0 - (p - 1.0) / p * 2.0 * math.log(r))


# --- Bounds for lambda_a and mu_a(r) - mu_a(r') ---

def lambda_slope_limit(a: float | OrderParam, cfg: EvalConfig | None = None) -> float:
    """t = 4 K_a(1/sqrt 2)^2/(pi sin(pi a)), the K -> 1 limit of log(lambda_a(K))/(K - 1)."""
    a = order_value(a)
    k0 = ellK(a, SQRT_HALF, cfg)
    return 4.0 * k0 * k0 / (math.pi * math.sin(math.pi * a))


def remark310_lambda_bounds(a: float | OrderParam, K: float, cfg: EvalConfig | None = None) -> BoundSides:
    """max(e^(pi(K-1)/sin(pi a)), 1 + t(K-1) sin^2(pi a)) < lambda_a(K) < e^(t(K-1))."""
    a = order_value(a)
    K = float(K)
    if not (math.isfinite(K) and K > 1.0):
        raise DomainError(f"remark310_lambda_bounds needs K > 1, got {K}")
    sine = math.sin(math.pi * a)
    t = lambda_slope_limit(a, cfg)
    exponential = _exp_or_inf(math.pi * (K - 1.0) / sine)
    linear = 1.0 + t * (K - 1.0) * sine * sine
    return BoundSides(lower=max(exponential, linear), upper=_exp_or_inf(t * (K - 1.0)))


def mu_gap_limit(a: float | OrderParam, cfg: EvalConfig | None = None) -> float:
    """t = pi^2/(2 K_a(1/sqrt 2)^2)."""
    k0 = ellK(order_value(a), SQRT_HALF, cfg)
    return math.pi ** 2 / (2.0 * k0 * k0)


def cor313_mu_bounds(
    a: float | OrderParam,
    r: RadiusLike,
    cfg: EvalConfig | None = None,
    *,
    part: int = 2,
) -> BoundSides:
    """
    With g = log(r'/r) and t = pi^2/(2 K_a(1/sqrt 2)^2), for r < 1/sqrt 2:
    part 1 bounds mu_a(r) - mu_a(r') by (g, t g);
    part 2 bounds 2 mu_a(r) by (g + sqrt((pi/sin)^2 + g^2), t g + sqrt((pi/sin)^2 + t^2 g^2)).
    """
    a = order_value(a)
    r, rc = interior_pair(r)
    if r >= rc:
        raise DomainError(f"cor313_mu_bounds needs r < 1/sqrt(2), got {r}")
    g = math.log(rc) - math.log(r)
    t = mu_gap_limit(a, cfg)
    if part == 1:
        return BoundSides(lower=g, upper=t * g)
    if part == 2:
        width = math.pi / math.sin(math.pi * a)
        return BoundSides(lower=g + math.hypot(width, g), upper=t * g + math.hypot(width, t * g))
    raise DomainError(f"cor313_mu_bounds has parts 1 and 2, got {part}")


# --- Three-parameter distortion ---

def thm45_tanh_bound(K: float, r: RadiusLike) -> float:
    """tanh(K artanh r); below phi_K^{a,c}(r) for K > 1 and above it for K < 1."""
    K = float(K)
    if not (math.isfinite(K) and K > 0.0):
        raise DomainError(f"thm45_tanh_bound needs K > 0, got {K}")
    r, rc = interior_pair(r)
    return math.tanh(K * (math.log1p(r) - math.log(rc)))
