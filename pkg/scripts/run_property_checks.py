#!/usr/bin/env python3
"""Run every bound/inequality check against the bundled families and print verdicts.

Exit status is nonzero if any report comes back Fails, so the script doubles
as a quick regression gate.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from extropy import analysis  # noqa: E402
from extropy.distributions import (  # noqa: E402
    Exponential,
    FiniteRange,
    FoldedCramer,
    GPD,
    Pareto,
    PiecewiseBounded,
    Power,
    TwoExpMax,
    Uniform,
    Weibull,
)

BOUNDED = [
    Uniform(0, 1),
    Uniform(2, 5),
    FiniteRange(1, 2),
    FiniteRange(0.5, 3),
    Power(1, 2),
    Power(3, 0.5),
    GPD(1, -0.5),
    PiecewiseBounded(),
]
UNBOUNDED = [
    Exponential(1),
    Exponential(0.5),
    Weibull(1, 2),
    Weibull(2, 0.5),
    Pareto(1, 2),
    Pareto(2, 3),
    GPD(1, 1),
    TwoExpMax(),
    FoldedCramer(1),
]


def main() -> int:
    failures = 0
    for d in BOUNDED + UNBOUNDED:
        grid = analysis.default_grid(d, points=20, lo_q=0.02, hi_q=0.95)
        reports = [
            analysis.check_crexmin_monotone_n(d),
            analysis.check_crexmin_vs_crex(d),
            analysis.check_dcrex_bounds(d, 2, grid),
        ]
        if d.has_finite_mean:
            reports.append(analysis.check_crexmin_mean_bound(d))
        if d.support.bounded:
            reports += [
                analysis.check_cpexmax_bounds(d),
                analysis.check_dcpex_bounds(d, 2, grid),
                analysis.check_cpex_cpen_inequality(d),
                analysis.check_mean_abs_diff(d),
                analysis.check_shift_independence(d, 2.0, 3.0),
            ]
        for r in reports:
            marker = "" if r.verdict == "Holds" else "  <--"
            print(f"{d!r:40s} {r.check_id:28s} {r.verdict}{marker}")
            if r.verdict == "Fails":
                failures += 1
    print(f"\n{failures} failing report(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
