"""Randomized property suites: CDF/inverse-CDF relations, pushforward identity,
domination monotonicity, Rayleigh homogeneity, and Cantor self-similarity.

Each suite draws seeded random instances, records the worst discrepancy seen,
and compares it against the suite's threshold.  `run_all` is what the CLI
`check` subcommand executes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cantor import cantor_cdf
from .constants import Exponents
from .measures import (
    AtomicMeasure,
    IntervalQuery,
    lebesgue,
    power_density,
    pushforward_check,
)
from .variational import Bliss, PiecewiseConstant, rayleigh


@dataclass(frozen=True)
class SuiteResult:
    name: str
    cases: int
    worst: float
    threshold: float

    @property
    def passed(self) -> bool:
        return self.worst <= self.threshold

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (
            f"{verdict} {self.name}: {self.cases} cases, "
            f"worst discrepancy {self.worst:.3e} (threshold {self.threshold:.1e})"
        )


def _random_atomic(rng: np.random.Generator, max_atoms: int = 15) -> AtomicMeasure:
    n = int(rng.integers(1, max_atoms + 1))
    pts = np.sort(rng.uniform(-5.0, 5.0, size=n))
    # enforce strictly increasing points
    pts = pts + np.arange(n) * 1e-9
    wts = rng.uniform(0.1, 2.0, size=n)
    return AtomicMeasure(points=tuple(pts), weights=tuple(wts))


def suite_cdf_inverse(n_measures: int = 500, seed: int = 0) -> SuiteResult:
    """S(S^-1(y)) >= y and S(S^-1(y)-) <= y for random atomic measures."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_measures):
        m = _random_atomic(rng)
        total = m.total_mass()
        for y in rng.uniform(1e-9, 1.2 * total, size=5):
            x = m.inv_cdf(float(y))
            if math.isinf(x):
                # only allowed when y exceeds the total mass
                worst = max(worst, total - y if y < total else 0.0)
                continue
            worst = max(worst, y - m.cdf(x), m.cdf_left(x) - y)
    return SuiteResult("cdf-inverse-relations", n_measures, worst, 1e-12)


def suite_pushforward(n_cases: int = 200, seed: int = 1) -> SuiteResult:
    """|(S(b) - S(a)) - m((a, b])| on random half-open queries."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_cases):
        m = _random_atomic(rng)
        queries = []
        for _ in range(5):
            a, b = sorted(rng.uniform(-6.0, 6.0, size=2))
            queries.append(IntervalQuery.half_open(float(a), float(b)))
        worst = max(worst, max(pushforward_check(m, queries)))
    return SuiteResult("pushforward-identity", n_cases, worst, 1e-12)


def suite_domination(n_pairs: int = 200, seed: int = 2) -> SuiteResult:
    """Tail domination mu1((x,inf)) <= mu2((x,inf)) forces the same order on
    integrals of nonnegative nondecreasing functions."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_pairs):
        m2 = _random_atomic(rng)
        # shrinking every weight preserves tail domination
        scale = rng.uniform(0.1, 1.0, size=len(m2.points))
        m1 = AtomicMeasure(
            points=m2.points, weights=tuple(np.array(m2.weights) * scale)
        )
        knots = np.sort(rng.uniform(-6.0, 6.0, size=6))
        steps = rng.uniform(0.0, 1.0, size=6)
        levels = np.cumsum(steps)

        def f(x, knots=knots, levels=levels):
            x = np.asarray(x, dtype=float)
            idx = np.searchsorted(knots, x, side="right")
            return np.where(idx == 0, 0.0, levels[np.maximum(idx - 1, 0)])

        i1 = m1.integrate(f)
        i2 = m2.integrate(f)
        worst = max(worst, i1 - i2)
    return SuiteResult("domination-monotonicity", n_pairs, worst, 1e-12)


def suite_rayleigh_homogeneity(n_cases: int = 50, seed: int = 3) -> SuiteResult:
    """rayleigh(c * f) = rayleigh(f) for positive scalings of trial functions."""
    rng = np.random.default_rng(seed)
    nu = lebesgue(0.0, math.inf)
    mu = power_density(-3.0, 1.0, math.inf, coefficient=2.0)
    e = Exponents(2.0, 4.0)
    worst = 0.0
    for _ in range(n_cases):
        c = float(rng.uniform(0.1, 10.0))
        gamma = float(rng.uniform(0.5, 2.0))
        delta = float(rng.uniform(0.5, 2.0))
        base = rayleigh(Bliss(gamma=gamma, delta=delta, r=e.r), nu, mu, e).value
        scaled = rayleigh(Bliss(gamma=c * gamma, delta=delta, r=e.r), nu, mu, e).value
        worst = max(worst, abs(scaled - base) / base)

        bk = np.sort(rng.uniform(0.5, 6.0, size=4))
        vals = rng.uniform(0.1, 1.0, size=3)
        anu = _random_atomic(rng)
        amu = _random_atomic(rng)
        e2 = Exponents(2.0, 2.0)
        try:
            b2 = rayleigh(PiecewiseConstant(tuple(bk), tuple(vals)), anu, amu, e2).value
            s2 = rayleigh(
                PiecewiseConstant(tuple(bk), tuple(c * vals)), anu, amu, e2
            ).value
        except ValueError:
            continue  # trial may vanish nu-a.e. for this instance
        if b2 > 0.0:
            worst = max(worst, abs(s2 - b2) / b2)
    return SuiteResult("rayleigh-homogeneity", n_cases, worst, 1e-12)


def suite_cantor_self_similarity(n_samples: int = 10_000, seed: int = 4) -> SuiteResult:
    """Lam(x/3) = Lam(x)/2 on [0, 1].

    x/3 rounds to the nearest double and Lam is only Holder continuous, so the
    identity holds to ~1e-11, not machine precision.
    """
    rng = np.random.default_rng(seed)
    xs = rng.uniform(0.0, 1.0, size=n_samples)
    worst = 0.0
    for x in xs:
        worst = max(worst, abs(cantor_cdf(x / 3.0) - cantor_cdf(float(x)) / 2.0))
    return SuiteResult("cantor-self-similarity", n_samples, worst, 1e-9)


def run_all(seed: int = 0) -> list[SuiteResult]:
    return [
        suite_cdf_inverse(seed=seed),
        suite_pushforward(seed=seed + 1),
        suite_domination(seed=seed + 2),
        suite_rayleigh_homogeneity(seed=seed + 3),
        suite_cantor_self_similarity(seed=seed + 4),
    ]
