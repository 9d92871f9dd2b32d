"""Closed-form constants and the sup-product bound for Hardy-type inequality pairs.

Given exponents 1 < p <= q < inf and measures (nu, mu), the quantity

    h(x) = nu((-inf, x])^(1/p*) * mu([x, +inf))^(1/q)

has supremum B over x, and the optimal inequality constant A satisfies
B <= A <= k_sharp * B, where k_sharp is expressed through the Euler Beta
function (p < q) or in closed form (p = q).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import MeasureError
from .measures import INF, IntervalQuery, Measure


@dataclass(frozen=True)
class Exponents:
    """The tuple (p, q) with its conjugates p* = p/(p-1), q* = q/(q-1) and r = q/p - 1."""

    p: float
    q: float

    def __post_init__(self):
        if not (self.p > 1.0 and math.isfinite(self.p)):
            raise MeasureError(f"p must be finite and > 1, got {self.p}")
        if not (self.q >= self.p and math.isfinite(self.q)):
            raise MeasureError(f"q must be finite and >= p, got {self.q}")

    @property
    def p_star(self) -> float:
        return self.p / (self.p - 1.0)

    @property
    def q_star(self) -> float:
        return self.q / (self.q - 1.0)

    @property
    def r(self) -> float:
        return self.q / self.p - 1.0


def euler_beta(a: float, b: float) -> float:
    """Euler Beta function B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b)."""
    if not (a > 0 and b > 0):
        raise MeasureError(f"euler_beta needs positive arguments, got ({a}, {b})")
    return math.exp(math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b))


def euler_beta_exact_int(a: int, b: int):
    """Exact rational value for positive integer arguments (cross-check path)."""
    if a < 1 or b < 1:
        raise MeasureError("integer Beta path needs a, b >= 1")
    from fractions import Fraction

    return Fraction(math.factorial(a - 1) * math.factorial(b - 1), math.factorial(a + b - 1))


def k_sharp(e: Exponents) -> float:
    """The sharp universal factor with A <= k_sharp * B.

    Uses the Beta-function expression for p < q and the closed form
    p^(1/p) * (p*)^(1/p*) at p = q (never the 0/0 Beta limit).
    """
    if e.r == 0.0:
        return e.p ** (1.0 / e.p) * e.p_star ** (1.0 / e.p_star)
    r = e.r
    log_beta = math.lgamma(1.0 / r) + math.lgamma((e.q - 1.0) / r) - math.lgamma(e.q / r)
    return math.exp((1.0 / e.p - 1.0 / e.q) * (math.log(r) - log_beta))


def k_literature(e: Exponents) -> dict[str, float]:
    """Previously published factors, for comparison against k_sharp.

    The `mazja` entry only applies for p < q and is omitted otherwise.
    """
    p, q, ps, qs = e.p, e.q, e.p_star, e.q_star
    out = {
        "prokhorov": p ** (1.0 / q) * ps ** (1.0 / ps),
        "opic_kufner": (1.0 + q / ps) ** (1.0 / q) * (1.0 + ps / q) ** (1.0 / ps),
    }
    if p < q:
        out["mazja"] = qs ** (1.0 / ps) * q ** (1.0 / q)
    return out


@dataclass(frozen=True)
class RefineConfig:
    tol: float = 1e-9
    window0: float = 1e4
    window_growth: float = 10.0
    window_max: float = 1e7
    depth0: int = 8
    depth_step: int = 3
    depth_max: int = 60
    grid0: int = 64
    max_levels: int = 8
    hard_max_levels: int = 40
    div_growth: float = 1.05
    div_runs: int = 5
    div_threshold: float = 1e6


@dataclass
class BoundReport:
    B: float
    B_divergent: bool
    k_sharp: float
    k_literature: dict[str, float]
    A_lower: float | None
    sandwich_ok: bool | None
    refinement_trace: list[tuple[int, float]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "B": self.B,
            "B_divergent": self.B_divergent,
            "k_sharp": self.k_sharp,
            "k_literature": dict(sorted(self.k_literature.items())),
            "A_lower": self.A_lower,
            "sandwich_ok": self.sandwich_ok,
            "refinement_trace": [[lvl, val] for lvl, val in self.refinement_trace],
        }


def h_value(nu: Measure, mu: Measure, e: Exponents, x: float) -> float:
    """The sup-product integrand at x, with the convention 0 * inf = 0."""
    left = nu.cdf(x)
    if left == 0.0:
        return 0.0
    right = mu.interval_mass(IntervalQuery.from_point(x))
    if right == 0.0:
        return 0.0
    if math.isinf(left) or math.isinf(right):
        return INF
    return left ** (1.0 / e.p_star) * right ** (1.0 / e.q)


def _candidates(nu: Measure, mu: Measure, window: float, depth: int, grid_n: int) -> np.ndarray:
    cands = np.concatenate(
        [
            np.atleast_1d(nu.supremum_candidates(window, depth, grid_n)),
            np.atleast_1d(mu.supremum_candidates(window, depth, grid_n)),
        ]
    )
    cands = cands[np.isfinite(cands)]
    return np.unique(cands)


def compute_B(
    nu: Measure, mu: Measure, e: Exponents, cfg: RefineConfig = RefineConfig()
) -> tuple[float, bool, list[tuple[int, float]]]:
    """Supremum of h over a refining candidate set, with divergence detection.

    Candidates are atoms, piece endpoints, triadic points and grids; each level
    widens the truncation window, deepens the triadic depth and densifies the
    grids.  Divergence is declared when the running maximum keeps growing by
    `div_growth` for `div_runs` consecutive levels and exceeds `div_threshold`.
    """
    trace: list[tuple[int, float]] = []
    prev = None
    streak = 0
    level = 0
    divergent = False
    while True:
        window = min(cfg.window0 * cfg.window_growth**level, cfg.window_max)
        depth = min(cfg.depth0 + cfg.depth_step * level, cfg.depth_max)
        grid_n = cfg.grid0 * 2 ** min(level, 5)
        best = 0.0
        for x in _candidates(nu, mu, window, depth, grid_n):
            hx = h_value(nu, mu, e, float(x))
            if hx > best:
                best = hx
        trace.append((level, best))
        if math.isinf(best):
            divergent = True
            break
        if prev is not None:
            growing = prev > 0 and best / prev >= cfg.div_growth
            streak = streak + 1 if growing else 0
            if streak >= cfg.div_runs and best > cfg.div_threshold:
                divergent = True
                break
            if not growing and abs(best - prev) <= cfg.tol * max(abs(best), 1e-300):
                prev = best
                break
        prev = best
        level += 1
        if level >= cfg.hard_max_levels:
            divergent = streak >= cfg.div_runs and prev is not None and prev > cfg.div_threshold
            break
        if level >= cfg.max_levels and streak == 0:
            break
    return (INF if divergent else (prev if prev is not None else 0.0)), divergent, trace


def triadic_profile(
    nu: Measure, mu: Measure, e: Exponents, m_lo: int, m_hi: int
) -> list[float]:
    """h evaluated at the triadic points 3^-m for m = m_lo..m_hi."""
    return [h_value(nu, mu, e, 3.0**-m) for m in range(m_lo, m_hi + 1)]


def divergence_ratio(values: list[float]) -> float:
    """Least-squares geometric growth ratio of successive positive trace values."""
    vals = [v for v in values if v > 0 and math.isfinite(v)]
    if len(vals) < 3:
        raise MeasureError("trace too short to estimate a growth ratio")
    logs = np.log(vals)
    idx = np.arange(len(logs))
    slope = np.polyfit(idx, logs, 1)[0]
    return float(math.exp(slope))


def bound_report(
    nu: Measure,
    mu: Measure,
    e: Exponents,
    cfg: RefineConfig = RefineConfig(),
    certify: bool = False,
    tol: float = 1e-9,
) -> BoundReport:
    """Full two-sided estimate: B, the sharp and literature factors, and optionally
    a variational lower bound for A obtained from step trial functions."""
    B, divergent, trace = compute_B(nu, mu, e, cfg)
    ks = k_sharp(e)
    a_lower = None
    sandwich = None
    if certify and not divergent and B > 0.0:
        from .variational import certify_lower_bound

        window = min(cfg.window0, cfg.window_max)
        xs = _candidates(nu, mu, window, min(cfg.depth0, cfg.depth_max), cfg.grid0)
        a_lower = certify_lower_bound(nu, mu, e, xs)
        sandwich = a_lower <= ks * B * (1.0 + tol)
    elif not divergent:
        sandwich = True
    return BoundReport(
        B=B,
        B_divergent=divergent,
        k_sharp=ks,
        k_literature=k_literature(e),
        A_lower=a_lower,
        sandwich_ok=sandwich,
        refinement_trace=trace,
    )
