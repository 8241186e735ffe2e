# hypergeometric.py
"""
Gaussian hypergeometric function F(l, m; n; z) on [0, 1).

Up to the near-one switch point the power series is summed with a forward
term-ratio recurrence. Beyond it the connection formulas around z = 1 take
over: the logarithmic expansion when the balance n - l - m is zero, the
finite-sum-plus-logarithm formula when it is a positive integer, and Euler's
transformation to reach the positive case from a negative integer balance.
"""
import logging
import math

import numpy as np
from scipy import special

from errors import DomainError, NonConvergenceError, UnsupportedRegimeError
from models import EvalConfig, HypArgs

logger = logging.getLogger(__name__)

_EULER_GAMMA = float(np.euler_gamma)


def _is_nonpositive_integer(v: float) -> bool:
    return v <= 0.0 and float(v).is_integer()


def _integer_balance(balance: float) -> int | None:
    k = round(balance)
    if abs(balance - k) <= 1e-12 * max(1.0, abs(balance)):
        return int(k)
    return None


def _series(l: float, m: float, n: float, z: float, cfg: EvalConfig, skip_leading: bool = False) -> float:
    term = 1.0
    total = 0.0 if skip_leading else 1.0
    # stop once the remaining geometric tail is below tolerance
    tail = 1.0 - z
    for k in range(cfg.max_terms):
        term *= (l + k) * (m + k) / ((n + k) * (k + 1.0)) * z
        total += term
        if term == 0.0 or abs(term) <= cfg.series_tol * abs(total) * tail:
            return total
    raise NonConvergenceError(
        f"F({l}, {m}; {n}; {z}) did not converge in {cfg.max_terms} terms",
        iterations=cfg.max_terms,
        last_value=total,
    )


def _zero_balanced_near_one(a: float, b: float, w: float, log_w: float, cfg: EvalConfig) -> float:
    # F(a,b;a+b;z) = (1/B(a,b)) sum (a)_k(b)_k/k!^2 w^k [2psi(k+1) - psi(a+k) - psi(b+k) - log w]
    psi_k1 = -_EULER_GAMMA
    psi_a = float(special.psi(a))
    psi_b = float(special.psi(b))
    coef = 1.0
    wk = 1.0
    total = 0.0
    for k in range(cfg.max_terms):
        term = coef * wk * (2.0 * psi_k1 - psi_a - psi_b - log_w)
        total += term
        if k > 0 and abs(term) <= cfg.series_tol * abs(total):
            inv_beta = float(special.gamma(a + b) * special.rgamma(a) * special.rgamma(b))
            return inv_beta * total
        coef *= (a + k) * (b + k) / ((k + 1.0) * (k + 1.0))
        wk *= w
        psi_k1 += 1.0 / (k + 1.0)
        psi_a += 1.0 / (a + k)
        psi_b += 1.0 / (b + k)
    raise NonConvergenceError(
        f"zero-balanced expansion of F({a}, {b}; {a + b}) at 1-z={w} did not converge",
        iterations=cfg.max_terms,
        last_value=total,
    )


def _integer_balanced_near_one(a: float, b: float, m: int, w: float, log_w: float, cfg: EvalConfig) -> float:
    # c = a + b + m with m a positive integer
    c = a + b + m
    gamma_c = float(special.gamma(c))

    lead = 0.0
    coef = 1.0
    wk = 1.0
    for k in range(m):
        lead += coef * wk
        if k < m - 1:
            coef *= (a + k) * (b + k) / ((k + 1.0) * (1.0 - m + k))
            wk *= w
    lead *= float(special.gamma(m)) * gamma_c * float(special.rgamma(a + m) * special.rgamma(b + m))

    psi_k1 = -_EULER_GAMMA
    psi_km1 = float(special.psi(m + 1.0))
    psi_a = float(special.psi(a + m))
    psi_b = float(special.psi(b + m))
    coef = 1.0 / math.factorial(m)
    wk = 1.0
    total = 0.0
    for k in range(cfg.max_terms):
        term = coef * wk * (log_w - psi_k1 - psi_km1 + psi_a + psi_b)
        total += term
        if k > 0 and abs(term) <= cfg.series_tol * abs(total):
            break
        coef *= (a + m + k) * (b + m + k) / ((k + 1.0) * (k + m + 1.0))
        wk *= w
        psi_k1 += 1.0 / (k + 1.0)
        psi_km1 += 1.0 / (k + m + 1.0)
        psi_a += 1.0 / (a + m + k)
        psi_b += 1.0 / (b + m + k)
    else:
        raise NonConvergenceError(
            f"integer-balanced expansion of F({a}, {b}; {c}) at 1-z={w} did not converge",
            iterations=cfg.max_terms,
            last_value=total,
        )
    sign = -1.0 if m % 2 == 0 else 1.0
    w_m = math.exp(m * log_w) if w > 0.0 else 0.0
    prefactor = sign * w_m * gamma_c * float(special.rgamma(a) * special.rgamma(b))
    return lead + prefactor * total


def hyp2f1(
    l: float,
    m: float,
    n: float,
    z: float,
    cfg: EvalConfig | None = None,
    *,
    one_minus_z: float | None = None,
    log_one_minus_z: float | None = None,
) -> float:
    """
    F(l, m; n; z) for z in [0, 1).

    `one_minus_z` and `log_one_minus_z` let callers that know 1 - z more
    accurately than the subtraction (or only through its logarithm) pass it in.
    """
    cfg = cfg or EvalConfig()
    if _is_nonpositive_integer(n):
        raise DomainError(f"lower parameter must not be zero or a negative integer, got {n}")
    # z may round to 1.0 when the caller supplies the complement separately
    has_complement = one_minus_z is not None or log_one_minus_z is not None
    if not (0.0 <= z < 1.0 or (z == 1.0 and has_complement)):
        raise DomainError(f"z must lie in [0, 1), got {z}")
    if z == 0.0:
        return 1.0
    if z <= cfg.near_one_switch or _is_nonpositive_integer(l) or _is_nonpositive_integer(m):
        return _series(l, m, n, z, cfg)

    balance = _integer_balance(n - l - m)
    if balance is None:
        raise UnsupportedRegimeError(
            f"F({l}, {m}; {n}; z) beyond z={cfg.near_one_switch} needs an integer balance n-l-m, got {n - l - m}"
        )
    w = one_minus_z if one_minus_z is not None else 1.0 - z
    log_w = log_one_minus_z if log_one_minus_z is not None else math.log(w)
    if balance == 0:
        return _zero_balanced_near_one(l, m, w, log_w, cfg)
    if balance > 0:
        return _integer_balanced_near_one(l, m, balance, w, log_w, cfg)

    # Euler: F(l,m;n;z) = (1-z)^(n-l-m) F(n-l, n-m; n; z)
    logger.debug(f"F({l}, {m}; {n}; {z}): Euler transformation for balance {balance}")
    scale = math.exp(balance * log_w)
    el, em = n - l, n - m
    if _is_nonpositive_integer(el) or _is_nonpositive_integer(em):
        return scale * _series(el, em, n, z, cfg)
    return scale * _integer_balanced_near_one(el, em, -balance, w, log_w, cfg)


def gauss_2f1(args: HypArgs, cfg: EvalConfig | None = None) -> float:
    return hyp2f1(args.l, args.m, args.n, args.z, cfg)


def hyp2f1_derivative(l: float, m: float, n: float, z: float, cfg: EvalConfig | None = None, **complement) -> float:
    """dF/dz = (lm/n) F(1+l, 1+m; 1+n; z)."""
    if l * m == 0.0:
        return 0.0
    return l * m / n * hyp2f1(1.0 + l, 1.0 + m, 1.0 + n, z, cfg, **complement)


def gauss_2f1_derivative(args: HypArgs, cfg: EvalConfig | None = None) -> float:
    return hyp2f1_derivative(args.l, args.m, args.n, args.z, cfg)


def zero_balanced_constant(a: float, b: float) -> float:
    """R(a, b) = -2*gamma - psi(a) - psi(b)."""
    if a <= 0.0 or b <= 0.0:
        raise DomainError(f"zero_balanced_constant needs a, b > 0, got ({a}, {b})")
    return -2.0 * _EULER_GAMMA - float(special.psi(a)) - float(special.psi(b))


def zero_balanced_ratio(a: float, b: float, x: float, cfg: EvalConfig | None = None) -> float:
    """(F(a, b; a+b; x) - 1)/log(1/(1-x)), strictly increasing onto (ab/(a+b), 1/B(a, b))."""
    cfg = cfg or EvalConfig()
    if a <= 0.0 or b <= 0.0:
        raise DomainError(f"zero_balanced_ratio needs a, b > 0, got ({a}, {b})")
    if not 0.0 < x < 1.0:
        raise DomainError(f"zero_balanced_ratio needs x in (0, 1), got {x}")
    if x <= cfg.near_one_switch:
        excess = _series(a, b, a + b, x, cfg, skip_leading=True)
    else:
        excess = hyp2f1(a, b, a + b, x, cfg) - 1.0
    return excess / -math.log1p(-x)
