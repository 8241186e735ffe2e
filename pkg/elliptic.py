# elliptic.py
import logging
import math

from errors import DomainError
from hypergeometric import hyp2f1
from models import EvalConfig, OrderParam, Radius, TriParam
from scalar_special import beta_fn

logger = logging.getLogger(__name__)

HALF_PI = 0.5 * math.pi
SQRT_HALF = math.sqrt(0.5)

RadiusLike = float | Radius


def order_value(a: float | OrderParam) -> float:
    if isinstance(a, OrderParam):
        return a.a
    a = float(a)
    if not 0.0 < a <= 0.5:
        raise DomainError(f"a must lie in (0, 1/2], got {a}")
    return a


def radius_pair(r: RadiusLike) -> tuple[float, float]:
    """(r, r') for r in [0, 1]; a Radius keeps its stored complement."""
    if isinstance(r, Radius):
        return r.r, r.rc
    r = float(r)
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"r must lie in [0, 1], got {r}")
    return r, math.sqrt((1.0 - r) * (1.0 + r))


def interior_pair(r: RadiusLike) -> tuple[float, float]:
    r, rc = radius_pair(r)
    if r == 0.0 or rc == 0.0:
        raise DomainError(f"r must lie in the open interval (0, 1), got {r}")
    return r, rc


def k_from_squares(a: float, z: float, w: float, cfg: EvalConfig | None = None, log_w: float | None = None) -> float:
    """K_a at modulus squared z, with w = 1 - z supplied by the caller."""
    if w <= 0.0 and log_w is None:
        return math.inf
    return HALF_PI * hyp2f1(a, 1.0 - a, 1.0, z, cfg, one_minus_z=w, log_one_minus_z=log_w)


def e_from_squares(a: float, z: float, w: float, cfg: EvalConfig | None = None, log_w: float | None = None) -> float:
    if w <= 0.0 and log_w is None:
        return math.sin(math.pi * a) / (2.0 * (1.0 - a))
    return HALF_PI * hyp2f1(a - 1.0, 1.0 - a, 1.0, z, cfg, one_minus_z=w, log_one_minus_z=log_w)


# --- Generalized complete elliptic integrals ---

def ellK(a: float | OrderParam, r: RadiusLike, cfg: EvalConfig | None = None) -> float:
    """K_a(r) = (pi/2) F(a, 1-a; 1; r^2); K_a(0) = pi/2 and K_a(1) = inf."""
    a = order_value(a)
    r, rc = radius_pair(r)
    if r == 0.0:
        return HALF_PI
    if rc == 0.0:
        return math.inf
    return k_from_squares(a, r * r, rc * rc, cfg)


def ellKc(a: float | OrderParam, r: RadiusLike, cfg: EvalConfig | None = None) -> float:
    """K'_a(r) = K_a(r'), evaluated from the stored complement."""
    r, rc = radius_pair(r)
    return ellK(a, Radius(r=rc, rc=r) if 0.0 < r < 1.0 else rc, cfg)


def ellE(a: float | OrderParam, r: RadiusLike, cfg: EvalConfig | None = None) -> float:
    """E_a(r) = (pi/2) F(a-1, 1-a; 1; r^2); E_a(1) = sin(pi a)/(2(1-a))."""
    a = order_value(a)
    r, rc = radius_pair(r)
    if r == 0.0:
        return HALF_PI
    if rc == 0.0:
        return math.sin(math.pi * a) / (2.0 * (1.0 - a))
    return e_from_squares(a, r * r, rc * rc, cfg)


def ellEc(a: float | OrderParam, r: RadiusLike, cfg: EvalConfig | None = None) -> float:
    r, rc = radius_pair(r)
    return ellE(a, Radius(r=rc, rc=r) if 0.0 < r < 1.0 else rc, cfg)


def dK_dr(a: float | OrderParam, r: RadiusLike, cfg: EvalConfig | None = None) -> float:
    """dK_a/dr = 2(1-a)(E_a - r'^2 K_a)/(r r'^2)."""
    a = order_value(a)
    r, rc = interior_pair(r)
    pair = Radius(r=r, rc=rc)
    return 2.0 * (1.0 - a) * (ellE(a, pair, cfg) - rc * rc * ellK(a, pair, cfg)) / (r * rc * rc)


def dE_dr(a: float | OrderParam, r: RadiusLike, cfg: EvalConfig | None = None) -> float:
    """dE_a/dr = 2(a-1)(K_a - E_a)/r."""
    a = order_value(a)
    r, rc = interior_pair(r)
    pair = Radius(r=r, rc=rc)
    return 2.0 * (a - 1.0) * (ellK(a, pair, cfg) - ellE(a, pair, cfg)) / r


def legendre_gap(a: float | OrderParam, r: RadiusLike, cfg: EvalConfig | None = None) -> float:
    """h(r) = E_a(r) - r'^2 K_a(r); positive and increasing with h'(r) = 2arK_a(r)."""
    a = order_value(a)
    r, rc = radius_pair(r)
    if r == 0.0:
        return 0.0
    if rc == 0.0:
        return ellE(a, 1.0, cfg)
    pair = Radius(r=r, rc=rc)
    return ellE(a, pair, cfg) - rc * rc * ellK(a, pair, cfg)


# --- Three-parameter integrals ---

def _tri_squares(r: RadiusLike) -> tuple[float, float]:
    r, rc = radius_pair(r)
    if rc == 0.0:
        raise DomainError("three-parameter integrals are evaluated on [0, 1)")
    return r * r, rc * rc


def ellK3(t: TriParam, r: RadiusLike, cfg: EvalConfig | None = None) -> float:
    """K_{a,b,c}(r) = (B(a,b)/2) F(a, b; c; r^2)."""
    t.require_integral()
    z, w = _tri_squares(r)
    return 0.5 * beta_fn(t.a, t.b) * hyp2f1(t.a, t.b, t.c, z, cfg, one_minus_z=w)


def ellE3(t: TriParam, r: RadiusLike, cfg: EvalConfig | None = None) -> float:
    """E_{a,b,c}(r) = (B(a,b)/2) F(a-1, b; c; r^2)."""
    t.require_integral()
    z, w = _tri_squares(r)
    return 0.5 * beta_fn(t.a, t.b) * hyp2f1(t.a - 1.0, t.b, t.c, z, cfg, one_minus_z=w)


def legendre_M(t: TriParam, r: RadiusLike, cfg: EvalConfig | None = None) -> float:
    """
    M(r^2) = (2/B)^2 b (K E' + K' E - K K') for the (a, c) family.
    Symmetric under r <-> r'; equals 1/pi for a = 1/2, c = 1.
    """
    t.require_shorthand()
    r, rc = interior_pair(r)
    pair = Radius(r=r, rc=rc)
    comp = pair.swapped()
    k, kc = ellK3(t, pair, cfg), ellK3(t, comp, cfg)
    e, ec = ellE3(t, pair, cfg), ellE3(t, comp, cfg)
    scale = (2.0 / beta_fn(t.a, t.b)) ** 2 * t.b
    return scale * (k * ec + kc * e - k * kc)
