# harness/suites.py
"""
Registry of inequality suites. Every suite evaluates the full chain of one
claim at each point of its grid; monotonicity claims and derivative formulas
run through `includes` into the same report.
"""
import logging
import math

import numpy as np

import bounds
import config
import elliptic
import hypergeometric
import modular
from harness.checks import Check, EvalContext, Suite, bound_chain, chain, detect, equal, increasing, sign_changes
from harness.figures import CROSSOVER_BETTER_FROM, FIGURE_GRID, crossover_row, dominance_row
from harness.quantities import (
    addition_radius,
    artanh_pair,
    contraction_radius,
    family,
    geometric_radius,
    log_eta,
    log_lambda,
    log_modulus,
    midpoint_radius,
    phi3_modulus,
    phi_modulus,
    printed_midpoint_radius,
    product_radius,
    radius,
)
from harness.shapes import HYPER_TRIPLES
from models import AxisSpec, GridSpec
from scalar_special import beta_fn, ramanujan_R

logger = logging.getLogger(__name__)

THM_3_1_SEED = 20100611
THM_3_1_SAMPLES = 24

HYPER_P = AxisSpec(values=(1.0, 1.5, 2.0, 4.0))
PAIR_R = AxisSpec(lo=0.1, hi=0.9, count=9)
FEW_R = AxisSpec(values=(0.05, 0.3, 0.6, 0.9, 0.99))
LOWER_HALF_R = AxisSpec(lo=1e-3, hi=0.7, count=25, log=True)
THREE_PARAMETER = {"a": AxisSpec(values=(0.2, 0.3, 0.5)), "c": AxisSpec(values=(0.5, 0.75, 1.0))}


def _same(r: float, s: float) -> bool:
    return math.isclose(r, s, rel_tol=1e-12, abs_tol=0.0)


def _addition(x: float, y: float) -> float:
    """(x + y)/(1 + xy), the tanh addition rule."""
    return (x + y) / (1.0 + x * y)


# --- Identities ---

def _identity_1_3(pt, ctx: EvalContext) -> list[Check]:
    a, K, rr = pt["a"], pt["K"], radius(pt["r"])
    s = phi_modulus(a, K, rr, ctx).r
    t = phi_modulus(a, 1.0 / K, rr.swapped(), ctx).r
    return [equal(s * s + t * t, 1.0, config.IDENTITY_TOL)]


def _mu_functional_identity(pt, ctx: EvalContext) -> list[Check]:
    a, rr = pt["a"], radius(pt["r"])
    product = modular.mu(a, rr, ctx.cfg) * modular.mu(a, rr.swapped(), ctx.cfg)
    return [equal(product, modular.symmetric_value(a) ** 2, config.IDENTITY_TOL, relative=True)]


def _phi_composition(pt, ctx: EvalContext) -> list[Check]:
    a, K, L, rr = pt["a"], pt["K"], pt["L"], radius(pt["r"])
    direct = phi_modulus(a, K * L, rr, ctx)
    nested = phi_modulus(a, K, phi_modulus(a, L, rr, ctx), ctx)
    return [
        equal(direct.r, nested.r, config.IDENTITY_TOL, relative=True),
        equal(direct.rc, nested.rc, config.IDENTITY_TOL, relative=True),
    ]


# --- Bounds of F, K_a and mu_a ---

def _thm_1_5(part: int):
    def evaluate(pt, ctx: EvalContext) -> list[Check]:
        rr, p = radius(pt["r"]), pt["p"]
        if part == 1:
            return [
                bound_chain(bounds.thm15_chain(a, b, c, rr, p, ctx.cfg, part=1), labels={"a": a, "b": b, "c": c})
                for a, b, c in HYPER_TRIPLES
            ]
        return [bound_chain(bounds.thm15_chain(pt["a"], 0.0, 0.0, rr, p, ctx.cfg, part=part))]

    return evaluate


def _thm_1_7(pt, ctx: EvalContext) -> list[Check]:
    return [bound_chain(bounds.thm17_chain(pt["p"], radius(pt["r"]), ctx.cfg))]


def _thm_1_8(pt, ctx: EvalContext) -> list[Check]:
    a, r, s = pt["a"], pt["r"], pt["s"]
    rr, ss = radius(r), radius(s)
    kr, ks = elliptic.ellK(a, rr, ctx.cfg), elliptic.ellK(a, ss, ctx.cfg)
    twice = 2.0 * kr * ks
    lower = kr * ks / elliptic.ellK(a, contraction_radius(rr, ss), ctx.cfg)
    middle = twice / elliptic.ellK(a, midpoint_radius(rr, ss), ctx.cfg)
    upper = twice / elliptic.ellK(a, product_radius(rr, ss), ctx.cfg)
    printed = twice / elliptic.ellK(a, printed_midpoint_radius(rr, ss), ctx.cfg)
    checks = [chain(lower, kr + ks, middle, upper, notes={"printed_middle": printed})]
    if _same(r, s):
        geometric = twice / elliptic.ellK(a, geometric_radius(rr, ss), ctx.cfg)
        checks.append(equal(kr + ks, middle, config.IDENTITY_TOL, relative=True))
        checks.append(equal(middle, geometric, config.IDENTITY_TOL, relative=True))
    return checks


def _thm_1_9_1(pt, ctx: EvalContext) -> list[Check]:
    p, rr = pt["p"], radius(pt["r"])
    return [bound_chain(bounds.thm19_lu(p, rr), modular.mu(1.0 / p, rr, ctx.cfg))]


def _thm_1_9_2(pt, ctx: EvalContext) -> list[Check]:
    sides = bounds.thm19_lu(2.0, radius(pt["r"]))
    return [chain(sides.upper, 4.0 / math.pi * sides.lower)]


def _post_2_9(pt, ctx: EvalContext) -> list[Check]:
    p, rr = pt["p"], radius(pt["r"])
    sides = bounds.mu_complement_bounds(p, rr, ctx.cfg)
    complement = modular.mu(1.0 / p, rr.swapped(), ctx.cfg)
    notes = {"printed_upper": bounds.mu_complement_printed_upper(p, rr, ctx.cfg)}
    return [bound_chain(sides, complement, notes=notes)]


# --- Lemmas 2.5 and 2.10 ---

def _lemma_2_5(pt, ctx: EvalContext) -> list[Check]:
    a, b = pt["a"], pt["b"]
    values = [hypergeometric.zero_balanced_ratio(a, b, float(z), ctx.cfg) for z in ctx.values["z"]]
    return [increasing(values, a * b / (a + b), 1.0 / beta_fn(a, b))]


def _lemma_2_10(part: int):
    def evaluate(pt, ctx: EvalContext) -> list[Check]:
        a, rr, ss = pt["a"], radius(pt["r"]), radius(pt["s"])
        fn = elliptic.ellK if part == 1 else elliptic.ellE
        joint = fn(a, product_radius(rr, ss), ctx.cfg)
        squares = math.sqrt(fn(a, rr.power(2.0), ctx.cfg) * fn(a, ss.power(2.0), ctx.cfg))
        scaled = fn(a, rr, ctx.cfg) * fn(a, ss, ctx.cfg) / elliptic.HALF_PI
        if part == 1:
            return [chain(joint, squares, scaled)]
        return [chain(scaled, squares, joint)]

    return evaluate


# --- mu_a^{-1} and phi_K^a ---

def _thm_3_1(pt, ctx: EvalContext) -> list[Check]:
    """(mu^{-1}(x))^w (mu^{-1}(y))^(1-w) <= mu^{-1}(wx + (1-w)y), compared in logs."""
    a = pt["a"]
    c0 = modular.symmetric_value(a)
    rng = np.random.default_rng(THM_3_1_SEED)

    def log_inverse(y: float) -> float:
        sol = modular.mu_inv(a, y, ctx.solve_cfg, ctx.cfg)
        return log_modulus(sol.s, sol.s_complement)

    checks = []
    for _ in range(THM_3_1_SAMPLES):
        w = float(rng.uniform(0.05, 0.95))
        x, y = (float(v) for v in c0 * rng.uniform(0.05, 3.0, size=2))
        mean = w * log_inverse(x) + (1.0 - w) * log_inverse(y)
        checks.append(chain(mean, log_inverse(w * x + (1.0 - w) * y), labels={"w": w, "x": x, "y": y}))
    return checks


def _cor_3_2_1(pt, ctx: EvalContext) -> list[Check]:
    """phi_K(r) > r^(1/K), compared in logs."""
    a, K, rr = pt["a"], pt["K"], radius(pt["r"])
    s = phi_modulus(a, K, rr, ctx)
    return [chain(math.log(rr.r) / K, log_modulus(s.r, s.rc), 0.0)]


def _lemma_3_3(pt, ctx: EvalContext) -> list[Check]:
    a, K, p = pt["a"], pt["K"], pt["p"]
    rr, ss = radius(pt["r"]), radius(pt["s"])

    def inner(x):
        return phi_modulus(a, K, x.power(p), ctx).r ** (1.0 / p)

    def outer(x):
        return phi_modulus(a, K, x.power(1.0 / p), ctx).r ** p

    phi_r, phi_s = phi_modulus(a, K, rr, ctx).r, phi_modulus(a, K, ss, ctx).r
    return [chain(
        _addition(inner(rr), inner(ss)),
        _addition(phi_r, phi_s),
        _addition(outer(rr), outer(ss)),
    )]


def _ineq_3_4(pt, ctx: EvalContext) -> list[Check]:
    a, K = pt["a"], pt["K"]
    rr, ss = radius(pt["r"]), radius(pt["s"])
    joined = phi_modulus(a, K, addition_radius(rr, ss), ctx).r
    return [chain(joined, _addition(phi_modulus(a, K, rr, ctx).r, phi_modulus(a, K, ss, ctx).r))]


def _thm_3_5(part: int):
    def evaluate(pt, ctx: EvalContext) -> list[Check]:
        a, r, s = pt["a"], pt["r"], pt["s"]
        if _same(r, s):
            return []
        K = pt["K"] if part == 1 else 1.0 / pt["K"]
        gap = abs(r - s)
        spread = abs(phi_modulus(a, K, radius(r), ctx).r - phi_modulus(a, K, radius(s), ctx).r)
        at_gap = phi_modulus(a, K, radius(gap), ctx).r
        holder = math.exp((1.0 - 1.0 / K) * ramanujan_R(a) / 2.0) * gap ** (1.0 / K)
        if part == 1:
            return [chain(spread, at_gap, holder)]
        return [chain(holder, at_gap, spread)]

    return evaluate


def _thm_3_6_3(pt, ctx: EvalContext) -> list[Check]:
    a, K, L, w, rr = pt["a"], pt["K"], pt["L"], pt["w"], radius(pt["r"])
    sk, sl = phi_modulus(a, K, rr, ctx), phi_modulus(a, L, rr, ctx)
    mixed = phi_modulus(a, w * K + (1.0 - w) * L, rr, ctx).r
    hyperbolic = math.tanh(w * artanh_pair(sk.r, sk.rc) + (1.0 - w) * artanh_pair(sl.r, sl.rc))
    return [chain(sk.r ** w * sl.r ** (1.0 - w), mixed, hyperbolic)]


def _thm_3_6_4(pt, ctx: EvalContext) -> list[Check]:
    a, K, L, rr = pt["a"], pt["K"], pt["L"], radius(pt["r"])
    sk, sl = phi_modulus(a, K, rr, ctx).r, phi_modulus(a, L, rr, ctx).r
    tk, tl = phi_modulus(a, 1.0 / K, rr.swapped(), ctx).r, phi_modulus(a, 1.0 / L, rr.swapped(), ctx).r
    mean = phi_modulus(a, (K + L) / 2.0, rr, ctx).r
    return [chain(math.sqrt(sk * sl), mean, (sk + sl) / (1.0 + sk * sl + tk * tl))]


# --- eta_K^a ---

def _thm_3_7(part: int):
    def evaluate(pt, ctx: EvalContext) -> list[Check]:
        a, K, m, n = pt["a"], pt["K"], pt["x"], pt["y"]
        if not m < n:
            return []

        def le(x: float) -> float:
            return log_eta(a, K, x, ctx)

        if part == 1:
            return [chain(le(m * n), (le(m * m) + le(n * n)) / 2.0)]
        if part == 2:
            ratio = math.log(n / m)
            return [chain(ratio / K, le(n) - le(m), K * ratio)]
        if part == 3:
            return [chain(le(m) + le(n), 2.0 * le((m + n) / 2.0))]
        lm, ln = le(m), le(n)
        harmonic = math.log(2.0) + lm + ln - float(np.logaddexp(lm, ln))
        return [chain(harmonic, le(math.sqrt(m * n)), (lm + ln) / 2.0)]

    return evaluate


def _thm_3_8(pt, ctx: EvalContext) -> list[Check]:
    a, K, L, w, x = pt["a"], pt["K"], pt["L"], pt["w"], pt["x"]
    lk, ll = log_eta(a, K, x, ctx), log_eta(a, L, x, ctx)
    mixed = math.exp(log_eta(a, w * K + (1.0 - w) * L, x, ctx))
    return [chain(math.exp(w * lk + (1.0 - w) * ll), mixed, w * math.exp(lk) + (1.0 - w) * math.exp(ll))]


# --- lambda_a and mu_a(r) - mu_a(r') ---

def _remark_3_10(pt, ctx: EvalContext) -> list[Check]:
    a, K = pt["a"], pt["K"]
    sides = bounds.remark310_lambda_bounds(a, K, ctx.cfg)
    forms = modular.lambda_forms(a, K, ctx.solve_cfg, ctx.cfg)
    notes = {f"form_{i + 1}": f for i, f in enumerate(forms)}
    return [
        chain(math.log(sides.lower), log_lambda(a, K, ctx), math.log(sides.upper)),
        equal(min(forms), max(forms), config.IDENTITY_TOL, relative=True, notes=notes),
    ]


def _cor_3_13(part: int):
    def evaluate(pt, ctx: EvalContext) -> list[Check]:
        a, rr = pt["a"], radius(pt["r"])
        mu_r = modular.mu(a, rr, ctx.cfg)
        sides = bounds.cor313_mu_bounds(a, rr, ctx.cfg, part=part)
        if part == 1:
            return [bound_chain(sides, mu_r - modular.mu(a, rr.swapped(), ctx.cfg))]
        g = math.log(rr.rc) - math.log(rr.r)
        t = bounds.mu_gap_limit(a, ctx.cfg)
        c0_sq = modular.symmetric_value(a) ** 2
        return [
            bound_chain(sides, 2.0 * mu_r),
            chain(c0_sq, mu_r * mu_r - mu_r * g),
            chain(mu_r * mu_r - t * mu_r * g, c0_sq),
        ]

    return evaluate


# --- Three-parameter family ---

def _thm_4_3(pt, ctx: EvalContext) -> list[Check]:
    a, c, r, s = pt["a"], pt["c"], pt["r"], pt["s"]
    if not a < c:
        return []
    t = family(a, c)
    rr, ss = radius(r), radius(s)
    total = modular.mu3(t, rr, ctx.cfg) + modular.mu3(t, ss, ctx.cfg)
    middle = 2.0 * modular.mu3(t, midpoint_radius(rr, ss), ctx.cfg)
    checks = [
        chain(modular.mu3(t, contraction_radius(rr, ss), ctx.cfg), total, middle),
        chain(0.0, elliptic.legendre_M(t, rr, ctx.cfg)),
    ]
    if _same(r, s):
        checks.append(equal(total, middle, config.IDENTITY_TOL, relative=True))
    return checks


def _lemma_4_4(pt, ctx: EvalContext) -> list[Check]:
    a, c, r, s = pt["a"], pt["c"], pt["r"], pt["s"]
    if not a < c:
        return []
    t = family(a, c)
    rr, ss = radius(r), radius(s)
    total = modular.mu3(t, rr, ctx.cfg) + modular.mu3(t, ss, ctx.cfg)
    geometric = 2.0 * modular.mu3(t, geometric_radius(rr, ss), ctx.cfg)
    checks = [chain(total, 2.0 * modular.mu3(t, midpoint_radius(rr, ss), ctx.cfg), geometric)]
    if _same(r, s):
        checks.append(equal(total, geometric, config.IDENTITY_TOL, relative=True))
    return checks


def _thm_4_5(pt, ctx: EvalContext) -> list[Check]:
    a, c, K, rr = pt["a"], pt["c"], pt["K"], radius(pt["r"])
    if not a < c:
        return []
    return [
        chain(bounds.thm45_tanh_bound(K, rr), phi3_modulus(a, c, K, rr, ctx).r),
        chain(phi3_modulus(a, c, 1.0 / K, rr, ctx).r, math.tanh(artanh_pair(rr.r, rr.rc) / K)),
    ]


# --- Figures ---

def _fig_1_dominance(pt, ctx: EvalContext) -> list[Check]:
    row = dominance_row(pt["r"], ctx.cfg)
    return [chain(row["ellK"], row["thm17_upper"], row["aq_upper"])]


def _fig_2_crossover(pt, ctx: EvalContext) -> list[Check]:
    """g - h changes sign once, below CROSSOVER_BETTER_FROM, and g > h from there on."""
    rows = [crossover_row(float(r), ctx) for r in ctx.values["r"]]
    rs = [row["r"] for row in rows]
    diff = [row["g"] - row["h"] for row in rows]
    flips = sign_changes(diff)
    crossing = math.nan
    for i in range(len(diff) - 1):
        if diff[i] <= 0.0 < diff[i + 1]:
            # linear interpolation of the sign change
            crossing = rs[i] - diff[i] * (rs[i + 1] - rs[i]) / (diff[i + 1] - diff[i])
            break
    tail = [d for r, d in zip(rs, diff) if r >= CROSSOVER_BETTER_FROM]
    return [
        equal(float(flips), 1.0, 0.5, notes={"sign_changes": float(flips)}),
        chain(rs[0], crossing, CROSSOVER_BETTER_FROM, notes={"crossing": crossing}),
        detect(min(tail) if tail else math.nan, [min(tail), max(tail)] if tail else []),
    ]


def _suite(suite_id, title, evaluate=None, axes=(), sweep=None, includes=(), **grid_axes) -> Suite:
    grid = GridSpec(axes=grid_axes) if grid_axes else None
    return Suite(suite_id=suite_id, title=title, evaluate=evaluate, axes=axes, sweep=sweep, grid=grid,
                 includes=tuple(includes))


_LEMMA_2_4_FORMULAS = {2: "dK_dr", 3: "dE_dr", 4: "dmu_dr", 5: "dphi_dr", 6: "dphi_dK", 7: "deta_dx", 8: "deta_dK"}

SUITES: dict[str, Suite] = {
    s.suite_id: s
    for s in (
        _suite("identity_1_3", "phi_K(r)^2 + phi_{1/K}(r')^2 = 1", _identity_1_3, ("a", "K", "r")),
        _suite("mu_functional_identity", "mu_a(r) mu_a(r') = (pi/(2 sin(pi a)))^2", _mu_functional_identity,
               ("a", "r")),
        _suite("phi_composition", "phi_{KL} = phi_K o phi_L", _phi_composition, ("a", "K", "L", "r"),
               r=AxisSpec(lo=1e-3, hi=0.999, count=11, log=True)),
        *(
            _suite(f"thm_1_5_{part}", f"power-mean chain {part} of F, K_a, E_a", _thm_1_5(part),
                   ("r", "p") if part == 1 else ("a", "r", "p"),
                   includes=("thm_1_5_monotone",) if part == 1 else (), p=HYPER_P)
            for part in (1, 2, 3)
        ),
        _suite("thm_1_7", "artanh_p bounds of K_{1/p}", _thm_1_7, ("p", "r")),
        _suite("thm_1_8", "K_a addition chain through the hyperbolic midpoint", _thm_1_8, ("a", "r", "s"),
               includes=("thm_1_8_concave",), r=PAIR_R),
        _suite("thm_1_9_1", "l_p < mu_{1/p} < u_p", _thm_1_9_1, ("p", "r")),
        _suite("thm_1_9_2", "u_2 < (4/pi) l_2", _thm_1_9_2, ("r",)),
        _suite("post_2_9", "two-sided bound of mu_{1/p}(r') through K_{1/p}(r)", _post_2_9, ("p", "r")),
        *(
            _suite(f"lemma_2_3_{part}", f"modular ratio monotonicity {part}", includes=(f"lemma_2_3_{part}_monotone",))
            for part in (1, 2, 3)
        ),
        *(
            _suite(f"lemma_2_4_{item}", f"closed-form derivative {formula}", includes=(formula,))
            for item, formula in _LEMMA_2_4_FORMULAS.items()
        ),
        _suite("lemma_2_5", "(F(a,b;a+b;x) - 1)/log(1/(1-x)) increasing onto (ab/(a+b), 1/B)", _lemma_2_5,
               ("a", "b"), "z"),
        _suite("lemma_2_10_1", "K_a(rs) <= sqrt(K_a(r^2)K_a(s^2)) <= (2/pi)K_a(r)K_a(s)", _lemma_2_10(1),
               ("a", "r", "s"), includes=("lemma_2_10_gap",)),
        _suite("lemma_2_10_2", "(2/pi)E_a(r)E_a(s) <= sqrt(E_a(r^2)E_a(s^2)) <= E_a(rs)", _lemma_2_10(2),
               ("a", "r", "s")),
        _suite("thm_3_1", "mu_a^{-1} log-concave with one inflection", _thm_3_1, ("a",),
               includes=("thm_3_1_inflection", "thm_3_1_log_concave")),
        _suite("cor_3_2_1", "phi_K(r) > r^(1/K)", _cor_3_2_1, ("a", "K", "r"), includes=("cor_3_2_limits",)),
        _suite("cor_3_2_2", "phi_K(r^p)^(1/p) decreasing in p", includes=("cor_3_2_power",)),
        _suite("lemma_3_3", "power-mean chain of the tanh addition of phi_K", _lemma_3_3, ("a", "K", "p", "r", "s"),
               a=AxisSpec(values=(0.2, 0.5)), K=AxisSpec(values=(1.5, 4.0)), p=AxisSpec(values=(1.3, 2.0)),
               r=AxisSpec(lo=0.1, hi=0.9, count=7), s=AxisSpec(values=(0.2, 0.5, 0.8))),
        _suite("ineq_3_4", "phi_K((r+s)/(1+rs)) <= tanh addition of phi_K(r), phi_K(s)", _ineq_3_4,
               ("a", "K", "r", "s"), r=PAIR_R),
        _suite("thm_3_5_1", "Hoelder chain of phi_K, K >= 1", _thm_3_5(1), ("a", "K", "r", "s"), r=PAIR_R),
        _suite("thm_3_5_2", "reversed Hoelder chain of phi_{1/K}", _thm_3_5(2), ("a", "K", "r", "s"), r=PAIR_R),
        _suite("thm_3_6_1", "log phi_K(r) increasing and concave in K", includes=("thm_3_6_1_concave",)),
        _suite("thm_3_6_2", "artanh phi_K(r) increasing and convex in K", includes=("thm_3_6_2_convex",)),
        _suite("thm_3_6_3", "weighted chain of phi in K", _thm_3_6_3, ("a", "K", "L", "w", "r"), r=FEW_R),
        _suite("thm_3_6_4", "midpoint chain of phi in K", _thm_3_6_4, ("a", "K", "L", "r"), r=FEW_R),
        *(
            _suite(f"thm_3_7_{part}", f"eta_K chain {part}", _thm_3_7(part), ("a", "K", "x", "y"))
            for part in (1, 2, 3, 4)
        ),
        _suite("thm_3_8", "weighted chain of eta in K", _thm_3_8, ("a", "K", "L", "w", "x"),
               includes=("thm_3_8_convex", "thm_3_8_log_concave")),
        _suite("thm_3_9", "difference quotients of eta_K in K", includes=("thm_3_9_monotone",)),
        _suite("remark_3_10", "exponential and linear bounds of lambda_a", _remark_3_10, ("a", "K"),
               includes=("remark_3_10_monotone",)),
        _suite("lemma_3_11", "K^e + K'^e increasing", includes=("lemma_3_11_monotone",)),
        _suite("thm_3_12_1", "log(lambda)/(K - 1/K) increasing", includes=("thm_3_12_1_monotone",)),
        _suite("thm_3_12_2", "log(lambda + 1) convex, log(lambda) concave", includes=("thm_3_12_2_convexity",)),
        _suite("thm_3_12_3", "log(lambda)/log K increasing", includes=("thm_3_12_3_monotone",)),
        _suite("cor_3_13_1", "log(r'/r) < mu(r) - mu(r') < t log(r'/r)", _cor_3_13(1), ("a", "r"),
               includes=("cor_3_13_monotone",), r=LOWER_HALF_R),
        _suite("cor_3_13_2", "two-sided bound of 2 mu_a(r)", _cor_3_13(2), ("a", "r"), r=LOWER_HALF_R),
        _suite("lemma_4_1", "mu_{a,c}(r) artanh r increasing", includes=("lemma_4_1_monotone",)),
        *(
            _suite(f"lemma_4_2_{item}", f"three-parameter distortion ratio {item}",
                   includes=(f"lemma_4_2_{item}_monotone",))
            for item in range(1, 9)
        ),
        _suite("thm_4_3", "mu_{a,c} addition chain", _thm_4_3, ("a", "c", "r", "s"),
               includes=("thm_4_3_concave",), r=PAIR_R, **THREE_PARAMETER),
        _suite("lemma_4_4", "mu_{a,c} midpoint below the geometric mean", _lemma_4_4, ("a", "c", "r", "s"),
               r=PAIR_R, **THREE_PARAMETER),
        _suite("thm_4_5", "tanh(K artanh r) bounds of phi_K^{a,c}", _thm_4_5, ("a", "c", "K", "r"),
               r=AxisSpec(lo=1e-3, hi=0.999, count=13, log=True), **THREE_PARAMETER),
        _suite("fig_1_dominance", "K(r) <= artanh_2 upper <= artanh(r)/r upper", _fig_1_dominance, ("r",),
               r=FIGURE_GRID.axes["r"]),
        _suite("fig_2_crossover", "power-mean lower bound overtakes the addition lower bound", _fig_2_crossover,
               (), "r", r=FIGURE_GRID.axes["r"]),
    )
}
