import math
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

import config
from errors import DomainError


class PExponent(BaseModel):
    """Exponent p > 1 of the generalized inverse hyperbolic tangent."""

    model_config = ConfigDict(frozen=True)

    p: float

    @field_validator("p")
    @classmethod
    def _check_p(cls, p: float) -> float:
        if not (math.isfinite(p) and p > 1.0):
            raise ValueError(f"p must be a finite real > 1, got {p}")
        return p


class OrderParam(BaseModel):
    """Order a of the generalized elliptic integrals, 0 < a <= 1/2."""

    model_config = ConfigDict(frozen=True)

    a: float

    @field_validator("a")
    @classmethod
    def _check_a(cls, a: float) -> float:
        if not 0.0 < a <= 0.5:
            raise ValueError(f"a must lie in (0, 1/2], got {a}")
        return a


class TriParam(BaseModel):
    """
    Parameters (a, b, c) of the three-parameter theory.
    The integrals need 0 < a < min(c, 1) and 0 < b < c <= a + b;
    the modulus mu_{a,b,c} only needs a + b >= c.
    """

    model_config = ConfigDict(frozen=True)

    a: float = Field(gt=0.0)
    b: float = Field(gt=0.0)
    c: float = Field(gt=0.0)

    @classmethod
    def shorthand(cls, a: float, c: float) -> "TriParam":
        """The (a, c) family, b = c - a."""
        if not 0.0 < a < c:
            raise DomainError(f"shorthand (a, c) needs 0 < a < c, got a={a}, c={c}")
        return cls(a=a, b=c - a, c=c)

    @property
    def balance(self) -> float:
        return self.c - self.a - self.b

    @property
    def is_zero_balanced(self) -> bool:
        return math.isclose(self.c, self.a + self.b, rel_tol=1e-12, abs_tol=1e-15)

    def require_integral(self) -> "TriParam":
        if not (self.a < min(self.c, 1.0) and self.b < self.c and self.c <= self.a + self.b * (1.0 + 1e-15)):
            raise DomainError(
                f"integrals need 0 < a < min(c, 1) and 0 < b < c <= a + b, got {self.a}, {self.b}, {self.c}"
            )
        return self

    def require_modulus(self) -> "TriParam":
        if self.a + self.b < self.c * (1.0 - 1e-15):
            raise DomainError(f"mu_(a,b,c) needs a + b >= c, got {self.a}, {self.b}, {self.c}")
        return self

    def require_shorthand(self) -> "TriParam":
        if not (self.is_zero_balanced and self.a < self.c <= 1.0):
            raise DomainError(f"the (a, c) family needs b = c - a and a < c <= 1, got {self.a}, {self.b}, {self.c}")
        return self


class Radius(BaseModel):
    """A modulus r in (0, 1) together with its complement r' = sqrt(1 - r^2)."""

    model_config = ConfigDict(frozen=True)

    r: float
    rc: float # complement, kept separately so r close to 1 stays accurate

    @model_validator(mode="after")
    def _check_pair(self) -> "Radius":
        # either member may round to 1.0 when the other is tiny
        if not (0.0 < self.r <= 1.0 and 0.0 < self.rc <= 1.0):
            raise ValueError(f"r and r' must be positive and at most 1, got r={self.r}, r'={self.rc}")
        if abs(self.r * self.r + self.rc * self.rc - 1.0) > 1e-12:
            raise ValueError(f"r^2 + r'^2 must equal 1, got r={self.r}, r'={self.rc}")
        return self

    @classmethod
    def from_r(cls, r: float) -> "Radius":
        return cls(r=r, rc=math.sqrt((1.0 - r) * (1.0 + r)))

    @classmethod
    def from_complement(cls, rc: float) -> "Radius":
        return cls(r=math.sqrt((1.0 - rc) * (1.0 + rc)), rc=rc)

    def swapped(self) -> "Radius":
        return Radius(r=self.rc, rc=self.r)

    def power(self, q: float) -> "Radius":
        """r^q, with the complement sqrt(1 - r^(2q)) taken through log r."""
        if q == 1.0:
            return self
        log_r = math.log(self.r)
        return Radius(r=math.exp(q * log_r), rc=math.sqrt(-math.expm1(2.0 * q * log_r)))


class HypArgs(BaseModel):
    """Arguments of F(l, m; n; z) on [0, 1)."""

    model_config = ConfigDict(frozen=True)

    l: float
    m: float
    n: float
    z: float

    @field_validator("n")
    @classmethod
    def _check_n(cls, n: float) -> float:
        if n <= 0.0 and float(n).is_integer():
            raise ValueError(f"lower parameter must not be zero or a negative integer, got {n}")
        return n

    @field_validator("z")
    @classmethod
    def _check_z(cls, z: float) -> float:
        if not 0.0 <= z < 1.0:
            raise ValueError(f"z must lie in [0, 1), got {z}")
        return z


class EvalConfig(BaseModel):
    """Precision policy of the series and near-one evaluators."""

    model_config = ConfigDict(frozen=True)

    series_tol: float = config.SERIES_TOL
    max_terms: int = config.MAX_TERMS
    near_one_switch: float = config.NEAR_ONE_SWITCH
    newton_tol: float = config.NEWTON_TOL
    max_newton_iters: int = config.MAX_NEWTON_ITERS

    @field_validator("series_tol", "near_one_switch", "newton_tol")
    @classmethod
    def _check_unit(cls, value: float) -> float:
        if not 0.0 < value < 1.0:
            raise ValueError(f"value must lie in (0, 1), got {value}")
        return value

    @field_validator("max_terms", "max_newton_iters")
    @classmethod
    def _check_cap(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"iteration caps must be positive, got {value}")
        return value


class ModularSolveConfig(BaseModel):
    """Tolerances of the mu_a inversion."""

    model_config = ConfigDict(frozen=True)

    abs_tol: float = Field(default=config.SOLVE_ABS_TOL, gt=0.0)
    max_iters: int = Field(default=config.SOLVE_MAX_ITERS, ge=1)
    bracket_floor: float = Field(default=config.BRACKET_FLOOR, gt=0.0, lt=1.0)


class ModularSolution(BaseModel):
    """
    Solution s of mu(s) = y.
    s underflows to 0.0 once y exceeds about 745; s_complement stays exact.
    """

    model_config = ConfigDict(frozen=True)

    s: float = Field(ge=0.0, le=1.0)
    s_complement: float = Field(ge=0.0, le=1.0)
    residual: float = Field(ge=0.0) # |mu(s) - y|
    iterations: int = Field(ge=0)


class BoundSides(BaseModel):
    """One inequality chain, ordered lower <= middles... <= upper."""

    model_config = ConfigDict(ser_json_inf_nan="strings")

    lower: float
    middles: list[float] = Field(default_factory=list)
    upper: float

    def chain(self) -> list[float]:
        return [self.lower, *self.middles, self.upper]


class AxisSpec(BaseModel):
    """Sampling of one grid variable: either explicit values or lo:hi:count."""

    model_config = ConfigDict(frozen=True)

    lo: Optional[float] = None
    hi: Optional[float] = None
    count: int = Field(default=2, ge=2)
    log: bool = False
    values: Optional[tuple[float, ...]] = None

    @model_validator(mode="after")
    def _check_range(self) -> "AxisSpec":
        if self.values is None and (self.lo is None or self.hi is None):
            raise ValueError("an axis needs explicit values or both lo and hi")
        if self.values is not None and len(self.values) == 0:
            raise ValueError("explicit axis values must not be empty")
        if self.log and self.values is None and (self.lo <= 0.0 or self.hi <= 0.0):
            raise ValueError("geometric axes need positive bounds")
        return self


class GridSpec(BaseModel):
    """Rectangular sampling over named variables (a, K, L, r, s, p, x, y, z, c)."""

    model_config = ConfigDict(frozen=True)

    axes: dict[str, AxisSpec] = Field(default_factory=dict)
    margin: float = Field(default=config.GRID_MARGIN, ge=0.0, lt=0.5)

    def merged(self, other: "GridSpec | None") -> "GridSpec":
        """Axes of `other` override ours."""
        if other is None:
            return self
        return GridSpec(axes={**self.axes, **other.axes}, margin=other.margin)


class CheckRecord(BaseModel):
    """A single checked instance: inputs, the sides of its chain, and the verdict."""

    model_config = ConfigDict(ser_json_inf_nan="strings")

    suite_id: str
    index: int
    inputs: dict[str, float]
    sides: list[float]
    margin: float # min adjacent gap, or -|lhs - rhs| for identities
    slack_used: float
    verdict: Literal["pass", "fail"]
    mode: Literal["chain", "equal", "detect"] = "chain"
    error: Optional[str] = None
    notes: dict[str, float] = Field(default_factory=dict) # reported, never asserted


class SuiteReport(BaseModel):
    """Aggregate of one suite run."""

    model_config = ConfigDict(ser_json_inf_nan="strings")

    suite_id: str
    total_points: int
    failures: list[CheckRecord] = Field(default_factory=list)
    min_margin: float
    wall_time: float
    records: list[CheckRecord] = Field(default_factory=list, exclude=True)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def non_converged(self) -> bool:
        return any(rec.error and rec.error.startswith("NonConvergenceError") for rec in self.failures)
