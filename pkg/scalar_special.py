# scalar_special.py
import logging
import math

import numpy as np
from scipy import integrate, special

from errors import DomainError, NumericalOverflowError
from models import EvalConfig, PExponent

logger = logging.getLogger(__name__)

EULER_GAMMA = float(np.euler_gamma)


def _finite(x: float, name: str) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x}")
    return x


def pochhammer(a: float, n: int) -> float:
    """Shifted factorial (a, n) = a(a+1)...(a+n-1), with (a, 0) = 1."""
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a nonnegative integer, got {n}")
    a = _finite(a, "a")
    if n == 0:
        if a == 0.0:
            raise DomainError("(a, 0) is only defined for a != 0")
        return 1.0
    return float(special.poch(a, int(n)))


def gamma_fn(x: float) -> float:
    x = _finite(x, "x")
    if x <= 0.0:
        raise DomainError(f"gamma_fn needs x > 0, got {x}")
    value = float(special.gamma(x))
    if math.isinf(value):
        raise NumericalOverflowError(f"Gamma({x}) exceeds the double range")
    return value


def log_gamma(x: float) -> float:
    x = _finite(x, "x")
    if x <= 0.0:
        raise DomainError(f"log_gamma needs x > 0, got {x}")
    return float(special.gammaln(x))


def beta_fn(x: float, y: float) -> float:
    """B(x, y) = Gamma(x)Gamma(y)/Gamma(x+y), through log-gamma."""
    x, y = _finite(x, "x"), _finite(y, "y")
    if x <= 0.0 or y <= 0.0:
        raise DomainError(f"beta_fn needs x, y > 0, got ({x}, {y})")
    log_value = float(special.betaln(x, y))
    if log_value > 709.0:
        raise NumericalOverflowError(f"B({x}, {y}) exceeds the double range")
    return math.exp(log_value)


def digamma(x: float) -> float:
    x = _finite(x, "x")
    if x <= 0.0:
        raise DomainError(f"digamma needs x > 0, got {x}")
    return float(special.psi(x))


def ramanujan_R(a: float) -> float:
    """R(a) = -2*gamma - psi(a) - psi(1-a); symmetric under a -> 1-a."""
    a = _finite(a, "a")
    if not 0.0 < a < 1.0:
        raise DomainError(f"ramanujan_R needs a in (0, 1), got {a}")
    lo, hi = sorted((a, 1.0 - a))
    return -2.0 * EULER_GAMMA - digamma(lo) - digamma(hi)


def pi_p(p: float | PExponent) -> float:
    p = _exponent(p)
    return 2.0 * math.pi / (p * math.sin(math.pi / p))


def _exponent(p: float | PExponent) -> float:
    if isinstance(p, PExponent):
        return p.p
    return PExponent(p=p).p


def artanh_p(p: float | PExponent, x: float, cfg: EvalConfig | None = None) -> float:
    """
    Integral of (1 - t^p)^(-1) over [0, x].

    Summed as x*F(1, 1/p; 1 + 1/p; x^p) while x^p stays at or below the
    near-one switch; beyond it the series value at the switch point is
    continued by adaptive quadrature.
    """
    # deferred: hypergeometric builds on this module
    from hypergeometric import hyp2f1

    cfg = cfg or EvalConfig()
    p = _exponent(p)
    x = _finite(x, "x")
    if not 0.0 <= x < 1.0:
        raise DomainError(f"artanh_p needs x in [0, 1), got {x}")
    if x == 0.0:
        return 0.0
    inv = 1.0 / p
    if x ** p <= cfg.near_one_switch:
        return x * hyp2f1(1.0, inv, 1.0 + inv, x ** p, cfg)

    x0 = cfg.near_one_switch ** inv
    head = x0 * hyp2f1(1.0, inv, 1.0 + inv, cfg.near_one_switch, cfg)
    tail, err = integrate.quad(lambda t: 1.0 / -math.expm1(p * math.log(t)), x0, x, epsabs=0.0, epsrel=1e-13, limit=200)
    logger.debug(f"artanh_p(p={p}, x={x}): quadrature tail {tail} (error estimate {err})")
    return head + tail
