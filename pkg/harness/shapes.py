# harness/shapes.py
"""
Monotonicity, convexity and range claims. Each property sweeps one variable
over an ascending grid; ranges over open intervals are checked as one-sided
approaches at the grid extremes, never as attained values.
"""
import logging
import math

import elliptic
import modular
from harness.checks import (
    Check,
    EvalContext,
    Suite,
    concave,
    convex,
    decreasing,
    detect,
    equal,
    increasing,
    sign_changes,
)
from harness.quantities import (
    SYMMETRIC,
    artanh_pair,
    family,
    log1p_lambda,
    log_eta,
    log_lambda,
    log_modulus,
    phi3_modulus,
    phi_modulus,
    radius,
)
from hypergeometric import hyp2f1
from models import AxisSpec, GridSpec, ModularSolution, Radius
from scalar_special import beta_fn

logger = logging.getLogger(__name__)

LOWER_HALF = AxisSpec(lo=1e-3, hi=0.7, count=30, log=True)
K_ABOVE_ONE = AxisSpec(lo=1.05, hi=10.0, count=12, log=True)
K_ALL = AxisSpec(lo=0.2, hi=10.0, count=13, log=True)
FEW_R = AxisSpec(values=(0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99))


def _sweep(ctx: EvalContext, name: str) -> list[float]:
    return [float(v) for v in ctx.values[name]]


# --- Theorems 1.5 and 1.8 ---

# (a, b, c) triples of the power-mean checks on F
HYPER_TRIPLES: tuple[tuple[float, float, float], ...] = (
    (0.5, 0.5, 1.0),
    (0.3, 0.7, 1.0),
    (1.0, 2.0, 4.0),
    (0.25, 0.5, 1.75),
    (1.5, 0.5, 2.0),
)


def _thm_1_5_monotone(point, ctx) -> list[Check]:
    rr = radius(point["r"])
    log_r = math.log(rr.r)
    checks = []
    for a, b, c in HYPER_TRIPLES:
        values = []
        for p in _sweep(ctx, "p"):
            z = math.exp(p * log_r)
            values.append(hyp2f1(a, b, c, z, ctx.cfg, one_minus_z=-math.expm1(p * log_r)) ** (1.0 / p))
        checks.append(decreasing(values, labels={"a": a, "b": b, "c": c}))
    return checks


def _thm_1_8_concave(point, ctx) -> list[Check]:
    """1/K_a(1/cosh x) increasing and concave onto (0, 2/pi)."""
    a = point["a"]
    xs = _sweep(ctx, "x")
    values = [1.0 / elliptic.ellK(a, Radius(r=1.0 / math.cosh(x), rc=math.tanh(x)), ctx.cfg) for x in xs]
    return [increasing(values, 0.0, 1.0 / elliptic.HALF_PI), concave(xs, values)]


# --- Lemma 2.3 ---

def _lemma_2_3_1(point, ctx) -> list[Check]:
    a, K = point["a"], point["K"]
    values = []
    for r in _sweep(ctx, "r"):
        rr = radius(r)
        s = phi_modulus(a, K, rr, ctx)
        values.append(s.rc * elliptic.ellK(a, s, ctx.cfg) ** 2 / (rr.rc * elliptic.ellK(a, rr, ctx.cfg) ** 2))
    return [decreasing(values, 0.0, 1.0)]


def _lemma_2_3_2(point, ctx) -> list[Check]:
    a, K = point["a"], point["K"]
    values = []
    for r in _sweep(ctx, "r"):
        rr = radius(r)
        s = phi_modulus(a, K, rr, ctx)
        values.append(s.r * elliptic.ellKc(a, s, ctx.cfg) ** 2 / (rr.r * elliptic.ellKc(a, rr, ctx.cfg) ** 2))
    return [decreasing(values, 1.0)]


def _lemma_2_3_3(point, ctx) -> list[Check]:
    a = point["a"]
    threshold = 2.0 * a * (1.0 - a)
    radii = [radius(r) for r in _sweep(ctx, "r")]
    k_values = [elliptic.ellK(a, rr, ctx.cfg) for rr in radii]

    def weighted(c: float) -> list[float]:
        return [rr.rc ** c * k for rr, k in zip(radii, k_values)]

    checks = [
        decreasing(weighted(c), 0.0, elliptic.HALF_PI, labels={"c": c})
        for c in sorted({threshold, 0.5, 1.0})
    ]
    # below the threshold the product must rise somewhere
    below = weighted(0.9 * threshold)
    rise = max(hi - lo for lo, hi in zip(below, below[1:]))
    checks.append(detect(rise, [min(below), max(below)], labels={"c": 0.9 * threshold}))
    return checks


# --- Lemma 2.10 auxiliary function ---

def _legendre_gap(point, ctx) -> list[Check]:
    """h(r) = E_a(r) - r'^2 K_a(r) is positive and increasing with h'(r) = 2 a r K_a(r)."""
    a = point["a"]
    rs = _sweep(ctx, "r")
    values = [elliptic.legendre_gap(a, radius(r), ctx.cfg) for r in rs]
    checks = [increasing(values, 0.0, elliptic.ellE(a, 1.0, ctx.cfg))]
    for r in rs:
        h = 1e-3 * min(r, 1.0 - r)
        numeric = (elliptic.legendre_gap(a, radius(r + h), ctx.cfg)
                   - elliptic.legendre_gap(a, radius(r - h), ctx.cfg)) / (2.0 * h)
        closed = 2.0 * a * r * elliptic.ellK(a, radius(r), ctx.cfg)
        checks.append(equal(closed, numeric, 1e-5, relative=True, labels={"r": r}))
    return checks


# --- Theorem 3.1 ---

def _inverse_on_multiples(a: float, ctx: EvalContext) -> tuple[list[float], list[ModularSolution]]:
    c0 = modular.symmetric_value(a)
    ys = [c0 * m for m in _sweep(ctx, "y")]
    return ys, [modular.mu_inv(a, y, ctx.solve_cfg, ctx.cfg) for y in ys]


def _thm_3_1_inflection(point, ctx) -> list[Check]:
    ys, sols = _inverse_on_multiples(point["a"], ctx)
    s = [sol.s for sol in sols]
    second = [s[i + 1] - 2.0 * s[i] + s[i - 1] for i in range(1, len(s) - 1)]
    flips = sign_changes(second)
    return [equal(float(flips), 1.0, 0.5, notes={"sign_changes": float(flips)})]


def _thm_3_1_log_concave(point, ctx) -> list[Check]:
    ys, sols = _inverse_on_multiples(point["a"], ctx)
    logs = [log_modulus(sol.s, sol.s_complement) for sol in sols]
    return [decreasing([sol.s for sol in sols], 0.0, 1.0), concave(ys, logs)]


# --- Corollary 3.2 ---

def _cor_3_2_limits(point, ctx) -> list[Check]:
    a, K = point["a"], point["K"]
    values = []
    for r in _sweep(ctx, "r"):
        s = phi_modulus(a, K, radius(r), ctx)
        values.append(log_modulus(s.r, s.rc) / math.log(r))
    return [decreasing(values, 0.0, 1.0 / K)]


def _cor_3_2_power(point, ctx) -> list[Check]:
    a, K, r = point["a"], point["K"], point["r"]
    rr = radius(r)
    phi_r = phi_modulus(a, K, rr, ctx).r
    values, checks = [], []
    for p in _sweep(ctx, "p"):
        phi_rp = phi_modulus(a, K, rr.power(p), ctx).r
        values.append(phi_rp ** (1.0 / p))
        if p >= 1.0:
            checks.append(Check(sides=[r ** (p / K), phi_rp, phi_r ** p], labels={"p": p}))
        else:
            checks.append(Check(sides=[phi_r ** p, phi_rp], labels={"p": p}))
    return [decreasing(values, r ** (1.0 / K), 1.0), *checks]


# --- Theorems 3.6, 3.8, 3.9 ---

def _thm_3_6_1(point, ctx) -> list[Check]:
    a, rr = point["a"], radius(point["r"])
    Ks = _sweep(ctx, "K")
    values = []
    for K in Ks:
        s = phi_modulus(a, K, rr, ctx)
        values.append(log_modulus(s.r, s.rc))
    return [increasing(values, upper=0.0), concave(Ks, values)]


def _thm_3_6_2(point, ctx) -> list[Check]:
    a, rr = point["a"], radius(point["r"])
    Ks = _sweep(ctx, "K")
    values = []
    for K in Ks:
        s = phi_modulus(a, K, rr, ctx)
        values.append(artanh_pair(s.r, s.rc))
    return [increasing(values, lower=0.0), convex(Ks, values)]


def _thm_3_8_convex(point, ctx) -> list[Check]:
    a, x = point["a"], point["x"]
    Ks = _sweep(ctx, "K")
    values = [math.exp(log_eta(a, K, x, ctx)) for K in Ks]
    return [increasing(values, lower=0.0), convex(Ks, values)]


def _thm_3_8_log_concave(point, ctx) -> list[Check]:
    a, x = point["a"], point["x"]
    Ks = _sweep(ctx, "K")
    return [concave(Ks, [log_eta(a, K, x, ctx) for K in Ks])]


def _thm_3_9(point, ctx) -> list[Check]:
    a, x = point["a"], point["x"]
    rr = modular.eta_radius(x)
    sine = math.sin(math.pi * a)
    k, kc = elliptic.ellK(a, rr, ctx.cfg), elliptic.ellKc(a, rr, ctx.cfg)
    Ks = _sweep(ctx, "K")
    logs = [log_eta(a, K, x, ctx) for K in Ks]
    f = [(lg - math.log(x)) / (K - 1.0) for lg, K in zip(logs, Ks)]
    g = [(math.exp(lg) - x) / (K - 1.0) for lg, K in zip(logs, Ks)]
    g_lower = 4.0 * rr.r ** 2 * k * kc / (math.pi * sine * rr.rc ** 2)
    printed = 4.0 * rr.r ** 2 * sine * k * kc / (math.pi * rr.rc ** 2)
    notes = {"g_lower": g_lower, "printed_g_lower": printed, "printed_g_lower_holds": float(printed <= min(g))}
    return [
        decreasing(f, math.pi * k / (sine * kc), 4.0 * k * kc / (math.pi * sine)),
        increasing(g, lower=g_lower, notes=notes),
    ]


# --- lambda_a ---

def _remark_3_10(point, ctx) -> list[Check]:
    a = point["a"]
    sine = math.sin(math.pi * a)
    k0 = elliptic.ellK(a, SYMMETRIC, ctx.cfg)
    t = 4.0 * k0 * k0 / (math.pi * sine)
    Ks = _sweep(ctx, "K")
    logs = [log_lambda(a, K, ctx) for K in Ks]
    return [
        decreasing([lg / (K - 1.0) for lg, K in zip(logs, Ks)], math.pi / sine, t),
        increasing([math.expm1(lg) / (K - 1.0) for lg, K in zip(logs, Ks)], lower=t * sine * sine),
    ]


def _thm_3_12_1(point, ctx) -> list[Check]:
    a = point["a"]
    sine = math.sin(math.pi * a)
    k0 = elliptic.ellK(a, SYMMETRIC, ctx.cfg)
    Ks = _sweep(ctx, "K")
    values = [log_lambda(a, K, ctx) / (K - 1.0 / K) for K in Ks]
    lower = 2.0 * k0 * k0 / (math.pi * sine)
    notes = {"printed_lower": 2.0 * k0 / (math.pi * sine), "lower": lower}
    return [increasing(values, lower, math.pi / sine, notes=notes)]


def _thm_3_12_2(point, ctx) -> list[Check]:
    a = point["a"]
    Ks = _sweep(ctx, "K")
    return [
        convex(Ks, [log1p_lambda(a, K, ctx) for K in Ks]),
        concave(Ks, [log_lambda(a, K, ctx) for K in Ks]),
    ]


def _thm_3_12_3(point, ctx) -> list[Check]:
    a = point["a"]
    Ks = _sweep(ctx, "K")
    logs = [log_lambda(a, K, ctx) for K in Ks]
    checks = [increasing([lg / math.log(K) for lg, K in zip(logs, Ks)])]
    for K, lg in zip(Ks, logs):
        for w in _sweep(ctx, "w"):
            checks.append(Check(sides=[log_lambda(a, K ** w, ctx), w * lg], labels={"K": K, "w": w}))
    return checks


def _lemma_3_11(point, ctx) -> list[Check]:
    a, e = point["a"], point["e"]
    values = []
    for r in _sweep(ctx, "r"):
        rr = radius(r)
        values.append(elliptic.ellK(a, rr, ctx.cfg) ** e + elliptic.ellKc(a, rr, ctx.cfg) ** e)
    rising = all(hi >= lo for lo, hi in zip(values, values[1:]))
    if not rising:
        logger.warning(f"K^e + K'^e is not increasing on the sweep for a={a}, e={e}")
    k0 = elliptic.ellK(a, SYMMETRIC, ctx.cfg)
    notes = {"observed_increasing": float(rising)}
    return [increasing(values, elliptic.HALF_PI ** e, 2.0 * k0 ** e, notes=notes)]


def _cor_3_13_monotone(point, ctx) -> list[Check]:
    a = point["a"]
    k0 = elliptic.ellK(a, SYMMETRIC, ctx.cfg)
    values = []
    for r in _sweep(ctx, "r"):
        rr = radius(r)
        gap = modular.mu(a, rr, ctx.cfg) - modular.mu(a, rr.swapped(), ctx.cfg)
        values.append(gap / (math.log(rr.rc) - math.log(rr.r)))
    return [increasing(values, 1.0, math.pi ** 2 / (2.0 * k0 * k0))]


# --- Three-parameter family ---

def _lemma_4_1(point, ctx) -> list[Check]:
    a, c = point["a"], point["c"]
    if not a < c:
        return []
    t = family(a, c)
    values = [modular.mu3(t, radius(r), ctx.cfg) * artanh_pair(r, radius(r).rc) for r in _sweep(ctx, "r")]
    return [increasing(values, 0.0, (0.5 * beta_fn(t.a, t.b)) ** 2)]


def _k3(a: float, c: float, r: Radius, ctx: EvalContext) -> float:
    return elliptic.ellK3(family(a, c), r, ctx.cfg)


def _lemma_4_2(item: int):
    def evaluate(point, ctx) -> list[Check]:
        a, c, K = point["a"], point["c"], point["K"]
        if not a < c:
            return []
        values = []
        for r in _sweep(ctx, "r"):
            rr = radius(r)
            # item 1-3 and 7 use s = phi_K(r), the others t = phi_{1/K}(r)
            q = phi3_modulus(a, c, K if item in (1, 2, 3, 7) else 1.0 / K, rr, ctx)
            if item in (1, 4):
                values.append(_k3(a, c, q, ctx) / _k3(a, c, rr, ctx))
            elif item in (2, 5):
                values.append(q.rc * _k3(a, c, q, ctx) ** 2 / (rr.rc * _k3(a, c, rr, ctx) ** 2))
            elif item in (3, 6):
                values.append(q.r * _k3(a, c, q.swapped(), ctx) ** 2 / (rr.r * _k3(a, c, rr.swapped(), ctx) ** 2))
            else:
                values.append(q.r / rr.r)
        ranges = {
            1: (increasing, 1.0, K),
            2: (decreasing, 0.0, 1.0),
            3: (decreasing, 1.0, None),
            4: (decreasing, 1.0 / K, 1.0),
            5: (increasing, 1.0, None),
            6: (increasing, 0.0, 1.0),
            7: (decreasing, 1.0, None),
            8: (increasing, 0.0, 1.0),
        }
        direction, lower, upper = ranges[item]
        return [direction(values, lower, upper)]

    return evaluate


def _thm_4_3_concave(point, ctx) -> list[Check]:
    a, c = point["a"], point["c"]
    if not a < c:
        return []
    t = family(a, c)
    xs = _sweep(ctx, "x")
    # r = 1/cosh x, r' = tanh x
    values = [modular.mu3(t, Radius(r=1.0 / math.cosh(x), rc=math.tanh(x)), ctx.cfg) for x in xs]
    return [increasing(values, lower=0.0), concave(xs, values)]


def _shape(suite_id, title, evaluate, axes, sweep, aux=(), **grid_axes) -> Suite:
    grid = GridSpec(axes=grid_axes) if grid_axes else None
    return Suite(suite_id=suite_id, title=title, evaluate=evaluate, axes=axes, sweep=sweep, aux=aux, grid=grid)


THREE_PARAMETER_AXES = {"a": AxisSpec(values=(0.2, 0.3, 0.5)), "c": AxisSpec(values=(0.5, 0.75, 1.0))}
LEMMA_4_2_R = AxisSpec(lo=1e-3, hi=0.999, count=25, log=True)

SHAPES: dict[str, Suite] = {
    s.suite_id: s
    for s in (
        _shape("thm_1_5_monotone", "F(a,b;c;r^p)^(1/p) decreasing in p", _thm_1_5_monotone, ("r",), "p",
               r=FEW_R, p=AxisSpec(lo=0.1, hi=10.0, count=15, log=True)),
        _shape("thm_1_8_concave", "1/K_a(1/cosh x) increasing and concave onto (0, 2/pi)", _thm_1_8_concave,
               ("a",), "x", x=AxisSpec(lo=0.02, hi=8.0, count=30, log=True)),
        _shape("lemma_2_3_1_monotone", "s'K(s)^2/(r'K(r)^2) decreasing onto (0, 1)", _lemma_2_3_1, ("a", "K"), "r"),
        _shape("lemma_2_3_2_monotone", "sK'(s)^2/(rK'(r)^2) decreasing onto (1, inf)", _lemma_2_3_2, ("a", "K"), "r"),
        _shape("lemma_2_3_3_monotone", "r'^c K_a(r) decreasing iff c >= 2a(1-a)", _lemma_2_3_3, ("a",), "r"),
        _shape("lemma_2_10_gap", "E_a - r'^2 K_a positive, increasing, derivative 2arK_a", _legendre_gap, ("a",), "r",
               r=AxisSpec(lo=0.01, hi=0.99, count=25, log=True)),
        _shape("thm_3_1_inflection", "mu_a^{-1} has exactly one inflection point", _thm_3_1_inflection, ("a",), "y",
               y=AxisSpec(lo=0.05, hi=3.0, count=120)),
        _shape("thm_3_1_log_concave", "mu_a^{-1} log-concave onto (0, 1)", _thm_3_1_log_concave, ("a",), "y",
               y=AxisSpec(lo=0.05, hi=3.0, count=60)),
        _shape("cor_3_2_limits", "log phi_K(r)/log r decreasing onto (0, 1/K)", _cor_3_2_limits, ("a", "K"), "r"),
        _shape("cor_3_2_power", "phi_K(r^p)^(1/p) decreasing in p onto (r^(1/K), 1)", _cor_3_2_power, ("a", "K", "r"), "p",
               r=AxisSpec(values=(0.05, 0.3, 0.7, 0.95)), p=AxisSpec(lo=0.25, hi=8.0, count=12, log=True)),
        _shape("thm_3_6_1_concave", "log phi_K(r) increasing and concave in K", _thm_3_6_1, ("a", "r"), "K",
               r=FEW_R, K=AxisSpec(lo=0.1, hi=10.0, count=13, log=True)),
        _shape("thm_3_6_2_convex", "artanh phi_K(r) increasing and convex in K", _thm_3_6_2, ("a", "r"), "K",
               r=FEW_R, K=AxisSpec(lo=0.1, hi=10.0, count=13, log=True)),
        _shape("thm_3_8_convex", "eta_K(x) increasing and convex in K", _thm_3_8_convex, ("a", "x"), "K", K=K_ALL),
        _shape("thm_3_8_log_concave", "eta_K(x) log-concave in K", _thm_3_8_log_concave, ("a", "x"), "K", K=K_ALL),
        _shape("thm_3_9_monotone", "(log eta - log x)/(K-1) decreasing, (eta - x)/(K-1) increasing", _thm_3_9,
               ("a", "x"), "K", K=K_ABOVE_ONE),
        _shape("remark_3_10_monotone", "log(lambda)/(K-1) decreasing, (lambda-1)/(K-1) increasing", _remark_3_10,
               ("a",), "K", K=K_ABOVE_ONE),
        _shape("lemma_3_11_monotone", "K^e + K'^e increasing on (0, 1/sqrt 2)", _lemma_3_11, ("a", "e"), "r",
               r=LOWER_HALF, e=AxisSpec(values=(-3.0, -2.0, -1.0, -0.5))),
        _shape("thm_3_12_1_monotone", "log(lambda)/(K - 1/K) increasing", _thm_3_12_1, ("a",), "K", K=K_ABOVE_ONE),
        _shape("thm_3_12_2_convexity", "log(lambda + 1) convex, log(lambda) concave", _thm_3_12_2, ("a",), "K", K=K_ALL),
        _shape("thm_3_12_3_monotone", "log(lambda)/log K increasing, lambda(K^w) < lambda(K)^w", _thm_3_12_3,
               ("a",), "K", aux=("w",), K=AxisSpec(lo=1.1, hi=10.0, count=10, log=True),
               w=AxisSpec(values=(0.25, 0.5, 0.75))),
        _shape("cor_3_13_monotone", "(mu(r) - mu(r'))/log(r'/r) increasing onto (1, t)", _cor_3_13_monotone,
               ("a",), "r", r=LOWER_HALF),
        _shape("lemma_4_1_monotone", "mu_{a,c}(r) artanh r increasing onto (0, (B/2)^2)", _lemma_4_1, ("a", "c"), "r",
               **THREE_PARAMETER_AXES),
        *(
            _shape(f"lemma_4_2_{item}_monotone", f"three-parameter distortion ratio {item}", _lemma_4_2(item),
                   ("a", "c", "K"), "r", r=LEMMA_4_2_R, K=AxisSpec(values=(1.5, 2.0, 4.0)), **THREE_PARAMETER_AXES)
            for item in range(1, 9)
        ),
        _shape("thm_4_3_concave", "mu_{a,c}(1/cosh x) increasing and concave", _thm_4_3_concave, ("a", "c"), "x",
               x=AxisSpec(lo=0.05, hi=5.0, count=20, log=True), **THREE_PARAMETER_AXES),
    )
}
