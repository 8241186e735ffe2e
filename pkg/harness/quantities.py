# harness/quantities.py
"""Moduli built from pairs of moduli, and log-accurate reads of modular solutions."""
import functools
import math

import modular
from elliptic import SQRT_HALF
from harness.checks import EvalContext
from models import EvalConfig, ModularSolution, ModularSolveConfig, Radius, TriParam

SYMMETRIC = Radius(r=SQRT_HALF, rc=SQRT_HALF)


def radius(r: float) -> Radius:
    return Radius.from_r(r)


def log_modulus(s: float, sc: float) -> float:
    """log s, through the complement when s is close to 1."""
    if s > 0.5:
        return 0.5 * math.log1p(-sc * sc)
    return math.log(s)


def artanh_pair(s: float, sc: float) -> float:
    """artanh s = log((1 + s)/s')."""
    return math.log1p(s) - math.log(sc)


# --- Combined moduli ---

def product_radius(r: Radius, s: Radius) -> Radius:
    rs = r.r * s.r
    return Radius(r=rs, rc=math.sqrt((1.0 - rs) * (1.0 + rs)))


def geometric_radius(r: Radius, s: Radius) -> Radius:
    rs = r.r * s.r
    return Radius(r=math.sqrt(rs), rc=math.sqrt(1.0 - rs))


def addition_radius(r: Radius, s: Radius) -> Radius:
    """(r + s)/(1 + rs), whose complement is r's'/(1 + rs)."""
    den = 1.0 + r.r * s.r
    return Radius(r=(r.r + s.r) / den, rc=r.rc * s.rc / den)


def difference_radius(r: Radius, s: Radius) -> Radius:
    return Radius.from_r(abs(r.r - s.r))


def contraction_radius(r: Radius, s: Radius) -> Radius:
    """rs/(1 + r's')."""
    den = 1.0 + r.rc * s.rc
    rs = r.r * s.r
    return Radius(r=rs / den, rc=math.sqrt((den - rs) * (den + rs)) / den)


def midpoint_radius(r: Radius, s: Radius) -> Radius:
    """sqrt(2rs/(1 + rs + r's')), the modulus at the hyperbolic midpoint of r and s."""
    rs, rcsc = r.r * s.r, r.rc * s.rc
    den = 1.0 + rs + rcsc
    return Radius(r=math.sqrt(2.0 * rs / den), rc=math.sqrt((1.0 - rs + rcsc) / den))


def printed_midpoint_radius(r: Radius, s: Radius) -> Radius:
    """sqrt(rs)/(1 + rs + r's'), the argument as displayed in the K_a addition chain."""
    return Radius.from_r(math.sqrt(r.r * s.r) / (1.0 + r.r * s.r + r.rc * s.rc))


# --- Modular quantities ---

def phi_at(a: float, K: float, r: Radius, ctx: EvalContext) -> ModularSolution:
    return modular.phi_solution(a, K, r, ctx.solve_cfg, ctx.cfg)


def phi_modulus(a: float, K: float, r: Radius, ctx: EvalContext) -> Radius:
    sol = phi_at(a, K, r, ctx)
    return Radius(r=sol.s, rc=sol.s_complement)


def log_eta(a: float, K: float, x: float, ctx: EvalContext) -> float:
    """log eta_K^a(x) = 2(log s - log s')."""
    if K == 1.0:
        return math.log(x)
    sol = phi_at(a, K, modular.eta_radius(x), ctx)
    return 2.0 * (log_modulus(sol.s, sol.s_complement) - math.log(sol.s_complement))


def log_lambda(a: float, K: float, ctx: EvalContext) -> float:
    """log lambda_a(K), from the single solve s = phi_K^a(1/sqrt 2) and lambda = (s/s')^2."""
    if K == 1.0:
        return 0.0
    sol = phi_at(a, K, SYMMETRIC, ctx)
    return 2.0 * (log_modulus(sol.s, sol.s_complement) - math.log(sol.s_complement))


def log1p_lambda(a: float, K: float, ctx: EvalContext) -> float:
    """log(lambda_a(K) + 1) = -2 log s'."""
    sol = phi_at(a, K, SYMMETRIC, ctx)
    return -2.0 * math.log(sol.s_complement)


@functools.lru_cache(maxsize=None)
def family(a: float, c: float) -> TriParam:
    return TriParam.shorthand(a, c).require_shorthand()


@functools.lru_cache(maxsize=65536)
def _phi3_cached(a: float, c: float, K: float, r: Radius, cfg: EvalConfig, solve_cfg: ModularSolveConfig) -> Radius:
    sol = modular.phi3_solution(family(a, c), K, r, solve_cfg, cfg)
    return Radius(r=sol.s, rc=sol.s_complement)


def phi3_modulus(a: float, c: float, K: float, r: Radius, ctx: EvalContext) -> Radius:
    """phi_K^{a,c}(r); the monotonicity suites revisit the same points, so solves are cached."""
    return _phi3_cached(a, c, K, r, ctx.cfg, ctx.solve_cfg)
