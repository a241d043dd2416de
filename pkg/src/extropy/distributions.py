"""Parametric lifetime distributions and their reliability functionals.

Every family exposes the same small surface: ``cdf``, ``sf``, ``pdf``,
``quantile``, ``hazard_rate``, ``reversed_hazard``, ``mean``,
``mean_residual_life`` and ``expected_inactivity_time``.  Closed forms are
used wherever the family admits one; the base class falls back to adaptive
quadrature and bracketed bisection.

All objects are immutable and all methods are pure, so instances can be
shared freely across threads.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from math import exp, inf, log, sqrt
from typing import Any, Mapping

from .errors import (
    DegenerateHead,
    DegenerateTail,
    DivergentMean,
    InvalidScale,
    ParamDomainError,
    QuantileOutOfRange,
    SchemaError,
)
from .quadrature import integrate

#: sf/cdf below this is treated as degenerate rather than extrapolated.
DEGENERATE_EPS = 1e-13

_QUANTILE_ATOL = 1e-12


@dataclass(frozen=True)
class Support:
    """Closed support interval; ``upper`` may be ``math.inf``."""

    lower: float
    upper: float

    def __post_init__(self) -> None:
        if not (self.lower < self.upper):
            raise ParamDomainError(f"support lower {self.lower} must be < upper {self.upper}")
        if self.lower < 0:
            raise ParamDomainError("lifetime support must be nonnegative")

    @property
    def bounded(self) -> bool:
        return math.isfinite(self.upper)


class Distribution(ABC):
    """Abstract lifetime distribution."""

    @property
    @abstractmethod
    def support(self) -> Support: ...

    @abstractmethod
    def cdf(self, x: float) -> float: ...

    @abstractmethod
    def pdf(self, x: float) -> float: ...

    def sf(self, x: float) -> float:
        return 1.0 - self.cdf(x)

    #: True when the mean integral converges.
    has_finite_mean: bool = True

    def quantile(self, p: float) -> float:
        """Inverse cdf by bracketed bisection; subclasses override with closed forms."""
        _check_p(p)
        lo = self.support.lower
        hi = self.support.upper
        if not math.isfinite(hi):
            hi = max(lo + 1.0, 1.0)
            while self.cdf(hi) < p:
                hi = lo + 2.0 * (hi - lo)
                if hi > 1e300:  # pragma: no cover - guards pathological tails
                    raise QuantileOutOfRange(f"failed to bracket quantile at p={p}")
        while hi - lo > _QUANTILE_ATOL:
            mid = 0.5 * (lo + hi)
            if self.cdf(mid) < p:
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)

    def hazard_rate(self, t: float) -> float:
        s = self.sf(t)
        if s <= DEGENERATE_EPS:
            raise DegenerateTail(f"sf({t}) is zero")
        return self.pdf(t) / s

    def reversed_hazard(self, t: float) -> float:
        c = self.cdf(t)
        if c <= DEGENERATE_EPS:
            raise DegenerateHead(f"cdf({t}) is zero")
        return self.pdf(t) / c

    def mean(self) -> float:
        if not self.has_finite_mean:
            raise DivergentMean(f"{self!r} has no finite mean")
        lo, hi = self.support.lower, self.support.upper
        value, _ = integrate(self.sf, lo, hi)
        return lo + value

    def mean_residual_life(self, t: float) -> float:
        if not self.has_finite_mean:
            raise DivergentMean(f"{self!r} has no finite mean")
        s = self.sf(t)
        if s <= DEGENERATE_EPS:
            raise DegenerateTail(f"sf({t}) is zero")
        value, _ = integrate(self.sf, t, self.support.upper)
        return value / s

    def expected_inactivity_time(self, t: float) -> float:
        c = self.cdf(t)
        if c <= DEGENERATE_EPS:
            raise DegenerateHead(f"cdf({t}) is zero")
        value, _ = integrate(self.cdf, self.support.lower, t)
        return value / c

    def affine(self, scale: float, shift: float) -> "Affine":
        return Affine(self, scale, shift)


def _check_p(p: float) -> None:
    if not (0.0 < p < 1.0):
        raise QuantileOutOfRange(f"quantile requires p in (0,1), got {p}")


def _require_positive(name: str, value: float) -> None:
    if not (value > 0):
        raise ParamDomainError(f"{name} must be > 0, got {value}")


@dataclass(frozen=True)
class Uniform(Distribution):
    """Uniform on [a, b], a < b, a >= 0."""

    a: float
    b: float

    def __post_init__(self) -> None:
        if not (0 <= self.a < self.b):
            raise ParamDomainError(f"uniform requires 0 <= a < b, got a={self.a}, b={self.b}")

    @property
    def support(self) -> Support:
        return Support(self.a, self.b)

    def cdf(self, x: float) -> float:
        if x <= self.a:
            return 0.0
        if x >= self.b:
            return 1.0
        return (x - self.a) / (self.b - self.a)

    def pdf(self, x: float) -> float:
        return 1.0 / (self.b - self.a) if self.a <= x <= self.b else 0.0

    def quantile(self, p: float) -> float:
        _check_p(p)
        return self.a + p * (self.b - self.a)

    def mean(self) -> float:
        return 0.5 * (self.a + self.b)

    def mean_residual_life(self, t: float) -> float:
        if t <= self.a:
            return self.mean() - t
        if t >= self.b:
            raise DegenerateTail(f"sf({t}) is zero")
        return 0.5 * (self.b - t)

    def expected_inactivity_time(self, t: float) -> float:
        if t <= self.a:
            raise DegenerateHead(f"cdf({t}) is zero")
        return 0.5 * (min(t, self.b) - self.a) if t <= self.b else t - self.mean()


@dataclass(frozen=True)
class FiniteRange(Distribution):
    """sf(x) = (1 - a x)^b on (0, 1/a); a, b > 0."""

    a: float
    b: float

    def __post_init__(self) -> None:
        _require_positive("a", self.a)
        _require_positive("b", self.b)

    @property
    def support(self) -> Support:
        return Support(0.0, 1.0 / self.a)

    def sf(self, x: float) -> float:
        if x <= 0:
            return 1.0
        if x >= 1.0 / self.a:
            return 0.0
        return (1.0 - self.a * x) ** self.b

    def cdf(self, x: float) -> float:
        return 1.0 - self.sf(x)

    def pdf(self, x: float) -> float:
        if not (0 <= x <= 1.0 / self.a):
            return 0.0
        return self.a * self.b * (1.0 - self.a * x) ** (self.b - 1.0)

    def quantile(self, p: float) -> float:
        _check_p(p)
        return (1.0 - (1.0 - p) ** (1.0 / self.b)) / self.a

    def mean(self) -> float:
        return 1.0 / (self.a * (self.b + 1.0))

    def mean_residual_life(self, t: float) -> float:
        if self.sf(t) <= DEGENERATE_EPS:
            raise DegenerateTail(f"sf({t}) is zero")
        return (1.0 - self.a * max(t, 0.0)) / (self.a * (self.b + 1.0))


@dataclass(frozen=True)
class Weibull(Distribution):
    """sf(x) = exp(-lam * x**theta); lam, theta > 0."""

    lam: float
    theta: float

    def __post_init__(self) -> None:
        _require_positive("lam", self.lam)
        _require_positive("theta", self.theta)

    @property
    def support(self) -> Support:
        return Support(0.0, inf)

    def sf(self, x: float) -> float:
        return 1.0 if x <= 0 else exp(-self.lam * x**self.theta)

    def cdf(self, x: float) -> float:
        return 0.0 if x <= 0 else -math.expm1(-self.lam * x**self.theta)

    def pdf(self, x: float) -> float:
        if x < 0:
            return 0.0
        if x == 0:
            # theta < 1 diverges at 0, theta > 1 vanishes; report the limit where defined
            return self.lam if self.theta == 1.0 else (inf if self.theta < 1 else 0.0)
        return self.lam * self.theta * x ** (self.theta - 1.0) * self.sf(x)

    def quantile(self, p: float) -> float:
        _check_p(p)
        return (-math.log1p(-p) / self.lam) ** (1.0 / self.theta)

    def mean(self) -> float:
        return math.gamma(1.0 + 1.0 / self.theta) / self.lam ** (1.0 / self.theta)


@dataclass(frozen=True)
class Exponential(Distribution):
    """Constant-hazard special case, rate lam > 0."""

    lam: float

    def __post_init__(self) -> None:
        _require_positive("lam", self.lam)

    @property
    def support(self) -> Support:
        return Support(0.0, inf)

    def sf(self, x: float) -> float:
        return 1.0 if x <= 0 else exp(-self.lam * x)

    def cdf(self, x: float) -> float:
        return 0.0 if x <= 0 else -math.expm1(-self.lam * x)

    def pdf(self, x: float) -> float:
        return 0.0 if x < 0 else self.lam * exp(-self.lam * x)

    def quantile(self, p: float) -> float:
        _check_p(p)
        return -math.log1p(-p) / self.lam

    def mean(self) -> float:
        return 1.0 / self.lam

    def mean_residual_life(self, t: float) -> float:
        return 1.0 / self.lam

    def hazard_rate(self, t: float) -> float:
        return self.lam


@dataclass(frozen=True)
class FoldedCramer(Distribution):
    """sf(x) = 1 / (1 + theta x); theta > 0.  Heavy tail: no finite mean."""

    theta: float
    has_finite_mean = False

    def __post_init__(self) -> None:
        _require_positive("theta", self.theta)

    @property
    def support(self) -> Support:
        return Support(0.0, inf)

    def sf(self, x: float) -> float:
        return 1.0 if x <= 0 else 1.0 / (1.0 + self.theta * x)

    def cdf(self, x: float) -> float:
        return 0.0 if x <= 0 else self.theta * x / (1.0 + self.theta * x)

    def pdf(self, x: float) -> float:
        return 0.0 if x < 0 else self.theta / (1.0 + self.theta * x) ** 2

    def quantile(self, p: float) -> float:
        _check_p(p)
        return p / (self.theta * (1.0 - p))


@dataclass(frozen=True)
class Pareto(Distribution):
    """sf(x) = (lam / (x + lam))**theta; lam > 0, theta > 1 for a finite mean."""

    lam: float
    theta: float

    def __post_init__(self) -> None:
        _require_positive("lam", self.lam)
        if not (self.theta > 1):
            raise ParamDomainError(f"pareto requires theta > 1, got {self.theta}")

    @property
    def support(self) -> Support:
        return Support(0.0, inf)

    def sf(self, x: float) -> float:
        return 1.0 if x <= 0 else (self.lam / (x + self.lam)) ** self.theta

    def cdf(self, x: float) -> float:
        return 1.0 - self.sf(x)

    def pdf(self, x: float) -> float:
        if x < 0:
            return 0.0
        return self.theta / self.lam * (self.lam / (x + self.lam)) ** (self.theta + 1.0)

    def quantile(self, p: float) -> float:
        _check_p(p)
        return self.lam * ((1.0 - p) ** (-1.0 / self.theta) - 1.0)

    def mean(self) -> float:
        return self.lam / (self.theta - 1.0)

    def mean_residual_life(self, t: float) -> float:
        return (self.lam + max(t, 0.0)) / (self.theta - 1.0)


#: GPD lambda this close to zero is evaluated through the exponential limit.
_GPD_EXP_EPS = 1e-9


@dataclass(frozen=True)
class GPD(Distribution):
    """Generalized Pareto: sf(x) = (theta/(lam x + theta))**(1/lam + 1).

    theta > 0, lam > -1.  lam -> 0 degenerates to the exponential with scale
    theta; lam > 0 is Lomax; -1 < lam < 0 has bounded support [0, -theta/lam].
    """

    theta: float
    lam: float

    def __post_init__(self) -> None:
        _require_positive("theta", self.theta)
        if not (self.lam > -1):
            raise ParamDomainError(f"gpd requires lam > -1, got {self.lam}")

    @property
    def _exponential_limit(self) -> bool:
        return abs(self.lam) < _GPD_EXP_EPS

    @property
    def support(self) -> Support:
        if self.lam < -_GPD_EXP_EPS:
            return Support(0.0, -self.theta / self.lam)
        return Support(0.0, inf)

    def sf(self, x: float) -> float:
        if x <= 0:
            return 1.0
        if self._exponential_limit:
            return exp(-x / self.theta)
        base = 1.0 + self.lam * x / self.theta
        if base <= 0:
            return 0.0
        return base ** (-(1.0 + self.lam) / self.lam)

    def cdf(self, x: float) -> float:
        return 1.0 - self.sf(x)

    def pdf(self, x: float) -> float:
        if x < 0 or x > self.support.upper:
            return 0.0
        if self._exponential_limit:
            return exp(-x / self.theta) / self.theta
        base = 1.0 + self.lam * x / self.theta
        if base <= 0:
            return 0.0
        return (1.0 + self.lam) / self.theta * base ** (-(1.0 + 2.0 * self.lam) / self.lam)

    def quantile(self, p: float) -> float:
        _check_p(p)
        if self._exponential_limit:
            return -self.theta * math.log1p(-p)
        return self.theta * ((1.0 - p) ** (-self.lam / (1.0 + self.lam)) - 1.0) / self.lam

    def hazard_rate(self, t: float) -> float:
        if t > self.support.upper - DEGENERATE_EPS:
            raise DegenerateTail(f"sf({t}) is zero")
        return (1.0 + self.lam) / (self.lam * max(t, 0.0) + self.theta)

    def mean(self) -> float:
        return self.theta

    def mean_residual_life(self, t: float) -> float:
        if self.sf(t) <= DEGENERATE_EPS:
            raise DegenerateTail(f"sf({t}) is zero")
        return self.lam * max(t, 0.0) + self.theta


@dataclass(frozen=True)
class Power(Distribution):
    """cdf(x) = (x/b)**c on [0, b]; b, c > 0."""

    b: float
    c: float

    def __post_init__(self) -> None:
        _require_positive("b", self.b)
        _require_positive("c", self.c)

    @property
    def support(self) -> Support:
        return Support(0.0, self.b)

    def cdf(self, x: float) -> float:
        if x <= 0:
            return 0.0
        if x >= self.b:
            return 1.0
        return (x / self.b) ** self.c

    def pdf(self, x: float) -> float:
        if not (0 <= x <= self.b):
            return 0.0
        if x == 0:
            return self.c / self.b if self.c == 1.0 else (inf if self.c < 1 else 0.0)
        return self.c / self.b * (x / self.b) ** (self.c - 1.0)

    def quantile(self, p: float) -> float:
        _check_p(p)
        return self.b * p ** (1.0 / self.c)

    def mean(self) -> float:
        return self.b * self.c / (self.c + 1.0)

    def expected_inactivity_time(self, t: float) -> float:
        if t <= 0:
            raise DegenerateHead(f"cdf({t}) is zero")
        return min(t, self.b) / (self.c + 1.0) if t <= self.b else t - self.mean()

    def reversed_hazard(self, t: float) -> float:
        if t <= 0:
            raise DegenerateHead(f"cdf({t}) is zero")
        if t >= self.b:
            return 0.0
        return self.c / t


class TwoExpMax(Distribution):
    """Maximum of independent Exp(1) and Exp(2): sf = e^-x + e^-2x - e^-3x.

    Hard coded with analytic pdf; the prime example of a lifetime whose
    dynamic residual-extropy curve is not monotone.
    """

    @property
    def support(self) -> Support:
        return Support(0.0, inf)

    def sf(self, x: float) -> float:
        if x <= 0:
            return 1.0
        return exp(-x) + exp(-2.0 * x) - exp(-3.0 * x)

    def cdf(self, x: float) -> float:
        if x <= 0:
            return 0.0
        return -math.expm1(-x) * -math.expm1(-2.0 * x)

    def pdf(self, x: float) -> float:
        if x < 0:
            return 0.0
        return exp(-x) + 2.0 * exp(-2.0 * x) - 3.0 * exp(-3.0 * x)

    def mean(self) -> float:
        return 1.0 + 0.5 - 1.0 / 3.0

    def __repr__(self) -> str:
        return "TwoExpMax()"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TwoExpMax)

    def __hash__(self) -> int:
        return hash("TwoExpMax")


_PB_BREAK = exp(-1.5)  # cdf value at the junction x = 1


class PiecewiseBounded(Distribution):
    """Bounded lifetime on (0, 2] with a kinked cdf.

    cdf(x) = exp(-1/2 - 1/x) on (0, 1], exp(-2 + x^2/2) on (1, 2], 1 beyond.
    Its dynamic past-extropy curve on (1, 2) is not monotone.  The density at
    the junctions is taken as the left limit (integrals are insensitive to
    point values).
    """

    @property
    def support(self) -> Support:
        return Support(0.0, 2.0)

    def cdf(self, x: float) -> float:
        if x <= 0:
            return 0.0
        if x <= 1.0:
            return exp(-0.5 - 1.0 / x)
        if x <= 2.0:
            return exp(-2.0 + 0.5 * x * x)
        return 1.0

    def pdf(self, x: float) -> float:
        if x <= 0 or x > 2.0:
            return 0.0
        if x <= 1.0:
            return exp(-0.5 - 1.0 / x) / (x * x)
        return x * exp(-2.0 + 0.5 * x * x)

    def quantile(self, p: float) -> float:
        _check_p(p)
        if p <= _PB_BREAK:
            return 1.0 / (-log(p) - 0.5)
        return sqrt(4.0 + 2.0 * log(p))

    def __repr__(self) -> str:
        return "PiecewiseBounded()"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PiecewiseBounded)

    def __hash__(self) -> int:
        return hash("PiecewiseBounded")


class Affine(Distribution):
    """Y = scale * X + shift with scale > 0, shift >= 0."""

    def __init__(self, base: Distribution, scale: float, shift: float) -> None:
        if not (scale > 0):
            raise InvalidScale(f"scale must be > 0, got {scale}")
        if shift < 0:
            raise ParamDomainError(f"shift must be >= 0, got {shift}")
        self.base = base
        self.scale = float(scale)
        self.shift = float(shift)

    @property
    def support(self) -> Support:
        s = self.base.support
        return Support(self.scale * s.lower + self.shift, self.scale * s.upper + self.shift)

    @property
    def has_finite_mean(self) -> bool:  # type: ignore[override]
        return self.base.has_finite_mean

    def _pull(self, x: float) -> float:
        return (x - self.shift) / self.scale

    def cdf(self, x: float) -> float:
        return self.base.cdf(self._pull(x))

    def sf(self, x: float) -> float:
        return self.base.sf(self._pull(x))

    def pdf(self, x: float) -> float:
        return self.base.pdf(self._pull(x)) / self.scale

    def quantile(self, p: float) -> float:
        return self.scale * self.base.quantile(p) + self.shift

    def mean(self) -> float:
        return self.scale * self.base.mean() + self.shift

    def mean_residual_life(self, t: float) -> float:
        return self.scale * self.base.mean_residual_life(self._pull(t))

    def expected_inactivity_time(self, t: float) -> float:
        return self.scale * self.base.expected_inactivity_time(self._pull(t))

    def __repr__(self) -> str:
        return f"Affine({self.base!r}, scale={self.scale}, shift={self.shift})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Affine)
            and self.base == other.base
            and self.scale == other.scale
            and self.shift == other.shift
        )

    def __hash__(self) -> int:
        return hash((self.base, self.scale, self.shift))


class Mixture(Distribution):
    """Finite mixture sum(w_i * F_i); weights positive and summing to one."""

    def __init__(self, components: list[tuple[float, Distribution]]) -> None:
        from .errors import BadWeights

        if not components:
            raise BadWeights("mixture needs at least one component")
        weights = [w for w, _ in components]
        if any(w <= 0 for w in weights):
            raise BadWeights(f"weights must be positive, got {weights}")
        if abs(sum(weights) - 1.0) > 1e-12:
            raise BadWeights(f"weights must sum to 1, got {sum(weights)}")
        self.components = tuple((float(w), d) for w, d in components)

    @property
    def support(self) -> Support:
        return Support(
            min(d.support.lower for _, d in self.components),
            max(d.support.upper for _, d in self.components),
        )

    @property
    def has_finite_mean(self) -> bool:  # type: ignore[override]
        return all(d.has_finite_mean for _, d in self.components)

    def cdf(self, x: float) -> float:
        return sum(w * d.cdf(x) for w, d in self.components)

    def pdf(self, x: float) -> float:
        return sum(w * d.pdf(x) for w, d in self.components)

    def mean(self) -> float:
        return sum(w * d.mean() for w, d in self.components)

    def __repr__(self) -> str:
        return f"Mixture({list(self.components)!r})"


# ---------------------------------------------------------------------------
# JSON distribution specs
# ---------------------------------------------------------------------------

_FAMILY_PARAMS: Mapping[str, tuple[str, ...]] = {
    "uniform": ("a", "b"),
    "finite-range": ("a", "b"),
    "weibull": ("lambda", "theta"),
    "folded-cramer": ("theta",),
    "pareto": ("lambda", "theta"),
    "gpd": ("theta", "lambda"),
    "power": ("b", "c"),
    "exponential": ("lambda",),
    "two-exp-max": (),
    "piecewise-bounded": (),
    "affine": ("base", "scale", "shift"),
}


def from_spec(spec: Mapping[str, Any]) -> Distribution:
    """Build a distribution from a JSON-style spec dict.

    Schema: ``{"family": <name>, "params": {...}}``; unknown keys are
    rejected with :class:`SchemaError`, bad parameter values with
    :class:`ParamDomainError`.
    """
    if not isinstance(spec, Mapping):
        raise SchemaError(f"spec must be an object, got {type(spec).__name__}")
    extra = set(spec) - {"family", "params"}
    if extra:
        raise SchemaError(f"unknown keys in spec: {sorted(extra)}")
    family = spec.get("family")
    if family not in _FAMILY_PARAMS:
        raise SchemaError(f"unknown family {family!r}; expected one of {sorted(_FAMILY_PARAMS)}")
    params = spec.get("params", {})
    if not isinstance(params, Mapping):
        raise SchemaError("params must be an object")
    allowed = _FAMILY_PARAMS[family]
    extra = set(params) - set(allowed)
    if extra:
        raise SchemaError(f"unknown params for {family}: {sorted(extra)}")
    missing = set(allowed) - set(params)
    if missing:
        raise SchemaError(f"missing params for {family}: {sorted(missing)}")

    if family == "uniform":
        return Uniform(float(params["a"]), float(params["b"]))
    if family == "finite-range":
        return FiniteRange(float(params["a"]), float(params["b"]))
    if family == "weibull":
        return Weibull(float(params["lambda"]), float(params["theta"]))
    if family == "folded-cramer":
        return FoldedCramer(float(params["theta"]))
    if family == "pareto":
        return Pareto(float(params["lambda"]), float(params["theta"]))
    if family == "gpd":
        return GPD(float(params["theta"]), float(params["lambda"]))
    if family == "power":
        return Power(float(params["b"]), float(params["c"]))
    if family == "exponential":
        return Exponential(float(params["lambda"]))
    if family == "two-exp-max":
        return TwoExpMax()
    if family == "piecewise-bounded":
        return PiecewiseBounded()
    # affine
    return Affine(from_spec(params["base"]), float(params["scale"]), float(params["shift"]))
