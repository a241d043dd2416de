"""Order-statistic transforms of a parent distribution.

``min_order`` and ``max_order`` give the series- and parallel-system
lifetimes; ``KthOrder`` covers the general (n-k+1)-out-of-n system via a
direct binomial sum (n capped at 60, summed from the smallest term to keep
cancellation in check).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .distributions import Distribution, Support
from .errors import InvalidOrder

_MAX_N = 60


@dataclass(frozen=True)
class OrderSpec:
    """Rank k out of a sample of size n; 1 <= k <= n."""

    k: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 1 or not (1 <= self.k <= self.n):
            raise InvalidOrder(f"need 1 <= k <= n, got k={self.k}, n={self.n}")
        if self.n > _MAX_N:
            raise InvalidOrder(f"n capped at {_MAX_N} to avoid catastrophic cancellation")


def _check_n(n: int) -> None:
    if n < 1:
        raise InvalidOrder(f"sample size must be >= 1, got {n}")
    if n > _MAX_N:
        raise InvalidOrder(f"n capped at {_MAX_N}")


@dataclass(frozen=True)
class MinOrder(Distribution):
    """Distribution of X_{1:n}: sf = parent sf to the n-th power."""

    parent: Distribution
    n: int

    def __post_init__(self) -> None:
        _check_n(self.n)

    @property
    def support(self) -> Support:
        return self.parent.support

    @property
    def has_finite_mean(self) -> bool:  # type: ignore[override]
        # sf^n <= sf, so a finite parent mean is sufficient; the folded-Cramer
        # tail 1/(1+tx)^n also integrates for n >= 2
        return self.parent.has_finite_mean or self.n >= 2

    def sf(self, x: float) -> float:
        return self.parent.sf(x) ** self.n

    def cdf(self, x: float) -> float:
        return 1.0 - self.sf(x)

    def pdf(self, x: float) -> float:
        return self.n * self.parent.sf(x) ** (self.n - 1) * self.parent.pdf(x)

    def quantile(self, p: float) -> float:
        from .distributions import _check_p

        _check_p(p)
        return self.parent.quantile(1.0 - (1.0 - p) ** (1.0 / self.n))

    def hazard_rate(self, t: float) -> float:
        return self.n * self.parent.hazard_rate(t)


@dataclass(frozen=True)
class MaxOrder(Distribution):
    """Distribution of X_{n:n}: cdf = parent cdf to the n-th power."""

    parent: Distribution
    n: int

    def __post_init__(self) -> None:
        _check_n(self.n)

    @property
    def support(self) -> Support:
        return self.parent.support

    @property
    def has_finite_mean(self) -> bool:  # type: ignore[override]
        return self.parent.has_finite_mean

    def cdf(self, x: float) -> float:
        return self.parent.cdf(x) ** self.n

    def pdf(self, x: float) -> float:
        return self.n * self.parent.cdf(x) ** (self.n - 1) * self.parent.pdf(x)

    def quantile(self, p: float) -> float:
        from .distributions import _check_p

        _check_p(p)
        return self.parent.quantile(p ** (1.0 / self.n))

    def reversed_hazard(self, t: float) -> float:
        return self.n * self.parent.reversed_hazard(t)


@dataclass(frozen=True)
class KthOrder(Distribution):
    """Distribution of X_{k:n} for a general rank k."""

    parent: Distribution
    spec: OrderSpec

    @property
    def support(self) -> Support:
        return self.parent.support

    @property
    def has_finite_mean(self) -> bool:  # type: ignore[override]
        return self.parent.has_finite_mean or self.spec.n - self.spec.k + 1 >= 2

    def sf(self, x: float) -> float:
        return kth_order_sf(self.parent, self.spec, x)

    def cdf(self, x: float) -> float:
        return 1.0 - self.sf(x)

    def pdf(self, x: float) -> float:
        k, n = self.spec.k, self.spec.n
        F = self.parent.cdf(x)
        return (
            k
            * math.comb(n, k)
            * F ** (k - 1)
            * self.parent.sf(x) ** (n - k)
            * self.parent.pdf(x)
        )


def min_order(d: Distribution, n: int) -> Distribution:
    """Lifetime of a series system of n iid components."""
    _check_n(n)
    return d if n == 1 else MinOrder(d, n)


def max_order(d: Distribution, n: int) -> Distribution:
    """Lifetime of a parallel system of n iid components."""
    _check_n(n)
    return d if n == 1 else MaxOrder(d, n)


def kth_order(d: Distribution, k: int, n: int) -> Distribution:
    spec = OrderSpec(k, n)
    if k == 1:
        return min_order(d, n)
    if k == n:
        return max_order(d, n)
    return KthOrder(d, spec)


def kth_order_sf(d: Distribution, spec: OrderSpec, x: float) -> float:
    """P(X_{k:n} > x) by the binomial sum, accumulated from the smallest term."""
    F = d.cdf(x)
    S = d.sf(x)
    terms = [math.comb(spec.n, i) * F**i * S ** (spec.n - i) for i in range(spec.k)]
    return math.fsum(sorted(terms))
