"""Cumulative residual/past extropy of extreme order statistics.

Measures, bounds, stochastic orderings, characterizations (generalized
Pareto and power families), plug-in estimators, and a CLI front end.
"""

from . import analysis, characterize, distributions, estimators, measures, orderstats
from .distributions import (
    Affine,
    Distribution,
    Exponential,
    FiniteRange,
    FoldedCramer,
    GPD,
    Mixture,
    Pareto,
    PiecewiseBounded,
    Power,
    Support,
    TwoExpMax,
    Uniform,
    Weibull,
    from_spec,
)
from .measures import Curve, MeasureKind, MeasureValue, evaluate
from .orderstats import OrderSpec, kth_order, kth_order_sf, max_order, min_order

__version__ = "0.1.0"

__all__ = [
    "Affine",
    "Curve",
    "Distribution",
    "Exponential",
    "FiniteRange",
    "FoldedCramer",
    "GPD",
    "MeasureKind",
    "MeasureValue",
    "Mixture",
    "OrderSpec",
    "Pareto",
    "PiecewiseBounded",
    "Power",
    "Support",
    "TwoExpMax",
    "Uniform",
    "Weibull",
    "analysis",
    "characterize",
    "distributions",
    "estimators",
    "evaluate",
    "from_spec",
    "kth_order",
    "kth_order_sf",
    "max_order",
    "measures",
    "min_order",
    "orderstats",
]
