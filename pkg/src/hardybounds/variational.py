"""Lower bounds for the optimal inequality constant via trial functions.

The Rayleigh quotient of a nonnegative trial f is

    [ int G(x)^q mu(dx) ]^(1/q) / [ int f^p dnu ]^(1/p),
    G(x) = int_{(-inf, x)} f dnu     (strict upper endpoint),

and its supremum over f is the optimal constant A.  This module evaluates the
quotient for several trial families, maximizes it over piecewise-constant
trials by coordinate ascent, and provides an exact operator-norm oracle for
p = q = 2 finite atomic instances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .constants import Exponents
from .errors import MeasureError, QuadratureError
from .measures import (
    INF,
    AtomicMeasure,
    DensityMeasure,
    IntervalQuery,
    Measure,
    PowerLawPiece,
)


# ---------------------------------------------------------------------------
# Trial families


class TrialFunction:
    """Nonnegative trial; callable on arrays.  `lebesgue_cumulative` (when
    defined) is the closed-form running integral from 0 against Lebesgue
    measure, used to avoid nested quadrature."""

    def __call__(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    lebesgue_cumulative: Callable[[np.ndarray], np.ndarray] | None = None


@dataclass(frozen=True)
class Bliss(TrialFunction):
    """f(x) = gamma * (delta x^r + 1)^(-(r+1)/r) on [0, inf); the extremal family."""

    gamma: float
    delta: float
    r: float

    def __post_init__(self):
        if self.r <= 0 or self.delta <= 0 or self.gamma < 0:
            raise MeasureError("Bliss trial needs r > 0, delta > 0, gamma >= 0")

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        xp = np.maximum(x, 0.0)
        return np.where(
            x >= 0.0,
            self.gamma * (self.delta * xp**self.r + 1.0) ** (-(self.r + 1.0) / self.r),
            0.0,
        )

    def lebesgue_cumulative(self, x):
        x = np.asarray(x, dtype=float)
        xp = np.maximum(x, 0.0)
        return self.gamma * xp * (self.delta * xp**self.r + 1.0) ** (-1.0 / self.r)


@dataclass(frozen=True)
class BlissComposed(TrialFunction):
    """The Bliss shape composed with a measure's cumulative function: f = g o S."""

    gamma: float
    delta: float
    r: float
    measure: Measure

    def __call__(self, x):
        x = np.atleast_1d(np.asarray(x, dtype=float))
        s = np.array([self.measure.cdf(float(t)) for t in x])
        shape = Bliss(self.gamma, self.delta, self.r)
        return shape(s)

    lebesgue_cumulative = None


@dataclass(frozen=True)
class Step(TrialFunction):
    """Indicator of (-inf, x0]."""

    x0: float

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return np.where(x <= self.x0, 1.0, 0.0)

    lebesgue_cumulative = None


@dataclass(frozen=True)
class PowerTail(TrialFunction):
    """f(x) = x^(-1/p - eps) on [1, inf); approaches the classical extremal as eps -> 0."""

    p: float
    eps: float

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            vals = np.power(np.maximum(x, 1.0), -1.0 / self.p - self.eps)
        return np.where(x >= 1.0, vals, 0.0)

    def lebesgue_cumulative(self, x):
        x = np.asarray(x, dtype=float)
        a = 1.0 - 1.0 / self.p - self.eps
        xp = np.maximum(x, 1.0)
        return np.where(x >= 1.0, (xp**a - 1.0) / a, 0.0)


@dataclass(frozen=True)
class PiecewiseConstant(TrialFunction):
    """Constant values on the cells of a partition, zero outside."""

    breakpoints: tuple[float, ...]
    values: tuple[float, ...]

    def __post_init__(self):
        bp = np.asarray(self.breakpoints, dtype=float)
        vals = np.asarray(self.values, dtype=float)
        if bp.ndim != 1 or len(bp) < 2 or np.any(np.diff(bp) <= 0):
            raise MeasureError("breakpoints must be strictly increasing, length >= 2")
        if len(vals) != len(bp) - 1:
            raise MeasureError("need exactly one value per partition cell")
        if np.any(vals < 0) or not np.all(np.isfinite(vals)):
            raise MeasureError("piecewise values must be finite and nonnegative")
        object.__setattr__(self, "breakpoints", tuple(bp.tolist()))
        object.__setattr__(self, "values", tuple(vals.tolist()))

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        bp = np.asarray(self.breakpoints)
        vals = np.asarray(self.values)
        idx = np.searchsorted(bp, x, side="right") - 1
        inside = (idx >= 0) & (idx < len(vals))
        return np.where(inside, vals[np.clip(idx, 0, len(vals) - 1)], 0.0)

    def lebesgue_cumulative(self, x):
        x = np.atleast_1d(np.asarray(x, dtype=float))
        bp = np.asarray(self.breakpoints)
        vals = np.asarray(self.values)
        cell = np.diff(bp) * vals
        cum = np.concatenate([[0.0], np.cumsum(cell)])
        idx = np.clip(np.searchsorted(bp, x, side="right") - 1, 0, len(vals) - 1)
        out = cum[idx] + vals[idx] * (np.clip(x, bp[0], bp[-1]) - bp[idx])
        return np.where(x <= bp[0], 0.0, np.where(x >= bp[-1], cum[-1], out))


def bliss_trial(e: Exponents, gamma: float, delta: float) -> Bliss:
    """The extremal family for the sharp factor; only defined for p < q."""
    if e.r <= 0:
        raise MeasureError("the Bliss family is undefined at p = q (r = 0)")
    return Bliss(gamma=gamma, delta=delta, r=e.r)


# ---------------------------------------------------------------------------
# Rayleigh quotient


@dataclass(frozen=True)
class RayleighResult:
    value: float
    numerator: float
    denominator: float
    quadrature_residual: float


def _is_plain_lebesgue(nu: Measure) -> bool:
    return isinstance(nu, DensityMeasure) and all(
        isinstance(p, PowerLawPiece) and p.coefficient == 1.0 and p.exponent == 0.0
        for p in nu.pieces
    )


def _running_integral(
    f: TrialFunction | Callable, nu: Measure, tol: float
) -> Callable[[np.ndarray], np.ndarray]:
    """G(x) = integral of f over (-inf, x) against nu, array-callable."""
    if isinstance(nu, AtomicMeasure):
        pts = np.asarray(nu.points)
        wts = np.asarray(nu.weights)
        contrib = np.asarray(f(pts), dtype=float) * wts
        prefix = np.concatenate([[0.0], np.cumsum(contrib)])

        def g_atomic(x):
            x = np.asarray(x, dtype=float)
            idx = np.searchsorted(pts, x, side="left")  # atoms strictly below x
            return prefix[idx]

        return g_atomic

    cum = getattr(f, "lebesgue_cumulative", None)
    if cum is not None and _is_plain_lebesgue(nu):
        segs = [(p.lo, p.hi) for p in nu.pieces]

        def g_lebesgue(x):
            x = np.asarray(x, dtype=float)
            total = np.zeros_like(x, dtype=float)
            for lo, hi in segs:
                mid = np.clip(x, lo, hi)
                total = total + np.asarray(cum(mid)) - np.asarray(cum(np.full_like(x, lo)))
            return total

        return g_lebesgue

    def g_generic(x):
        x = np.atleast_1d(np.asarray(x, dtype=float))
        return np.array(
            [nu.integrate(f, IntervalQuery.below(float(t)), tol=tol) for t in x]
        )

    return g_generic


def rayleigh(
    f: TrialFunction | Callable,
    nu: Measure,
    mu: Measure,
    e: Exponents,
    tol: float = 1e-8,
) -> RayleighResult:
    """Evaluate the Hardy-Rayleigh quotient of a trial function."""
    if isinstance(f, Step):
        return _rayleigh_step(f.x0, nu, mu, e, tol)
    fa = lambda x: np.asarray(f(np.asarray(x, dtype=float)), dtype=float)
    den = nu.integrate(lambda x: fa(x) ** e.p, tol=tol)
    if not (den > 0.0) or math.isinf(den):
        raise MeasureError(f"trial has unusable denominator integral {den}")
    g = _running_integral(f, nu, tol)
    num = mu.integrate(lambda x: np.asarray(g(x), dtype=float) ** e.q, tol=tol)
    if math.isinf(num):
        raise QuadratureError("numerator integral diverges", residual=INF)
    value = num ** (1.0 / e.q) / den ** (1.0 / e.p)
    # both integrals are enforced to relative tolerance tol, so the quotient's
    # relative quadrature error is bounded by a small multiple of tol
    residual = 2.0 * tol
    return RayleighResult(value=value, numerator=num, denominator=den, quadrature_residual=residual)


def _rayleigh_step(x0: float, nu: Measure, mu: Measure, e: Exponents, tol: float) -> RayleighResult:
    """Exact split evaluation for the indicator trial f = 1_(-inf, x0].

    The running integral is G(x) = nu((-inf, x)) for x <= x0 and the constant
    nu((-inf, x0]) for x > x0, so only the left part needs quadrature.
    """
    den = nu.interval_mass(IntervalQuery.upto(x0))
    if not (den > 0.0) or math.isinf(den):
        raise MeasureError(f"trial has unusable denominator integral {den}")

    def g_left_pow(x):
        arr = np.atleast_1d(np.asarray(x, dtype=float))
        vals = np.array([nu.cdf_left(float(t)) for t in arr]) ** e.q
        return vals if np.ndim(x) else float(vals[0])

    num = den**e.q * mu.interval_mass(IntervalQuery.above(x0))
    num += mu.integrate(g_left_pow, IntervalQuery.upto(x0), tol=tol)
    if math.isinf(num):
        raise QuadratureError("numerator integral diverges", residual=INF)
    value = num ** (1.0 / e.q) / den ** (1.0 / e.p)
    return RayleighResult(value=value, numerator=num, denominator=den, quadrature_residual=2.0 * tol)


def certify_lower_bound(
    nu: Measure,
    mu: Measure,
    e: Exponents,
    x_candidates: Sequence[float],
    tol: float = 1e-8,
) -> float:
    """Best step-trial Rayleigh quotient over the candidates: a lower bound for A."""
    if len(x_candidates) == 0:
        raise MeasureError("candidate list must be nonempty")
    best = None
    for x0 in x_candidates:
        try:
            res = rayleigh(Step(float(x0)), nu, mu, e, tol=tol)
        except (MeasureError, QuadratureError):
            continue
        if best is None or res.value > best:
            best = res.value
    if best is None:
        raise MeasureError("no step candidate produced a valid quotient")
    return best


# ---------------------------------------------------------------------------
# Exact oracle (p = q = 2, finite atomic)


def oracle_p2q2(nu: AtomicMeasure, mu: AtomicMeasure, tol: float = 1e-12) -> float:
    """Exact optimal constant for p = q = 2 finite atomic pairs.

    Equals the largest singular value of M[i, j] = sqrt(mu_i nu_j) over index
    pairs with the nu atom strictly left of the mu atom; computed by power
    iteration with a deterministic start vector.
    """
    if nu.tail is not None or mu.tail is not None:
        raise MeasureError("oracle requires finite atomic measures")
    nux = np.asarray(nu.points)
    nuw = np.asarray(nu.weights)
    mux = np.asarray(mu.points)
    muw = np.asarray(mu.weights)
    if len(nux) == 0 or len(mux) == 0:
        raise MeasureError("oracle requires nonempty measures")
    M = np.sqrt(np.outer(muw, nuw)) * (nux[None, :] < mux[:, None])
    v = np.ones(len(nux)) / math.sqrt(len(nux))
    sigma_prev = 0.0
    for _ in range(100_000):
        u = M @ v
        sigma = float(np.linalg.norm(u))
        if sigma == 0.0:
            return 0.0
        w = M.T @ u
        nw = float(np.linalg.norm(w))
        if nw == 0.0:
            return sigma
        v = w / nw
        if abs(sigma - sigma_prev) <= tol * max(sigma, 1e-300):
            break
        sigma_prev = sigma
    return float(np.linalg.norm(M @ v))


# ---------------------------------------------------------------------------
# Coordinate-ascent maximization over piecewise-constant trials


def _discretize(m: Measure, partition: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Atom positions/weights for atomic measures; cell masses at midpoints otherwise."""
    if isinstance(m, AtomicMeasure):
        return np.asarray(m.points), np.asarray(m.weights)
    mids = 0.5 * (partition[:-1] + partition[1:])
    masses = np.array(
        [m.interval_mass(IntervalQuery.half_open(a, b)) for a, b in zip(partition[:-1], partition[1:])]
    )
    keep = masses > 0
    return mids[keep], masses[keep]


def _golden_max(fun: Callable[[float], float], lo: float, hi: float, iters: int = 60) -> float:
    phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - phi * (b - a)
    d = a + phi * (b - a)
    fc, fd = fun(c), fun(d)
    for _ in range(iters):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - phi * (b - a)
            fc = fun(c)
        else:
            a, c, fc = c, d, fd
            d = a + phi * (b - a)
            fd = fun(d)
    return 0.5 * (a + b)


def optimize_quotient(
    nu: Measure,
    mu: Measure,
    e: Exponents,
    partition: Sequence[float],
    iters: int = 200,
    seed: int = 0,
) -> tuple[PiecewiseConstant, RayleighResult]:
    """Seeded coordinate ascent over piecewise-constant trial values.

    The objective (the Rayleigh quotient of the discretized instance) is
    nondecreasing across sweeps; non-atomic measures are discretized onto the
    partition cells first.
    """
    partition = np.asarray(partition, dtype=float)
    if partition.ndim != 1 or len(partition) < 2 or np.any(np.diff(partition) <= 0):
        raise MeasureError("partition must be strictly increasing with >= 2 points")
    if iters < 1:
        raise MeasureError("iters must be >= 1")
    nux, nuw = _discretize(nu, partition)
    inside = (nux >= partition[0]) & (nux < partition[-1])  # f vanishes outside
    nux, nuw = nux[inside], nuw[inside]
    mux, muw = _discretize(mu, partition)
    if len(nux) == 0 or len(mux) == 0:
        raise MeasureError("a measure has no mass on the partition")

    k = len(partition) - 1
    cell_of_atom = np.clip(np.searchsorted(partition, nux, side="right") - 1, 0, k - 1)
    # W[i, c]: nu mass in cell c strictly left of the i-th mu atom
    W = np.zeros((len(mux), k))
    for j, (xj, wj) in enumerate(zip(nux, nuw)):
        W[:, cell_of_atom[j]] += wj * (xj < mux)
    nu_cell = np.bincount(cell_of_atom, weights=nuw, minlength=k)

    p, q = e.p, e.q
    rng = np.random.default_rng(seed)
    v = rng.uniform(0.5, 1.5, size=k)
    v[nu_cell == 0.0] = 0.0

    def objective(vv, gg):
        den = float(np.dot(vv**p, nu_cell))
        if den <= 0.0:
            return 0.0
        num = float(np.dot(muw, gg**q))
        return num ** (1.0 / q) / den ** (1.0 / p)

    g = W @ v
    history = [objective(v, g)]
    for _ in range(iters):
        for c in range(k):
            if nu_cell[c] == 0.0:
                continue
            wc = W[:, c]
            g0 = g - v[c] * wc
            den0 = float(np.dot(v**p, nu_cell)) - nu_cell[c] * v[c] ** p
            if p == 2.0 and q == 2.0:
                a = float(np.dot(muw, g0**2))
                b = float(np.dot(muw, g0 * wc))
                cq = float(np.dot(muw, wc**2))
                # stationarity of (a + 2bt + cq t^2)/(den0 + nu_c t^2)
                roots = [0.0]
                if b != 0.0:
                    A2, B2, C2 = b * nu_cell[c], a * nu_cell[c] - cq * den0, -b * den0
                    disc = B2 * B2 - 4.0 * A2 * C2
                    if disc >= 0.0:
                        sq = math.sqrt(disc)
                        roots += [t for t in ((-B2 + sq) / (2 * A2), (-B2 - sq) / (2 * A2)) if t > 0]
                elif cq > 0.0:
                    roots.append(max(v[c], 1.0))

                def val2(t):
                    return (a + 2 * b * t + cq * t * t) / (den0 + nu_cell[c] * t * t) if (
                        den0 + nu_cell[c] * t * t
                    ) > 0 else 0.0

                t_best = max(roots, key=val2)
            else:

                def val(t):
                    den = den0 + nu_cell[c] * t**p
                    if den <= 0.0:
                        return 0.0
                    num = float(np.dot(muw, np.maximum(g0 + t * wc, 0.0) ** q))
                    return num ** (1.0 / q) / den ** (1.0 / p)

                hi = max(4.0 * v[c], 4.0 * (max(den0, 1e-12) / nu_cell[c]) ** (1.0 / p), 1.0)
                t_gold = _golden_max(val, 0.0, hi)
                t_best = max((0.0, t_gold, v[c]), key=val)  # never step downhill
            g = g0 + t_best * wc
            v[c] = t_best
        # renormalize the denominator to 1; the quotient is scale-invariant
        den = float(np.dot(v**p, nu_cell))
        if den > 0.0:
            scale = den ** (-1.0 / p)
            v *= scale
            g *= scale
        history.append(objective(v, g))
        if history[-1] + 1e-13 < history[-2]:
            raise RuntimeError("coordinate ascent objective decreased")
        if abs(history[-1] - history[-2]) <= 1e-14 * max(history[-1], 1.0):
            break

    den = float(np.dot(v**p, nu_cell))
    num = float(np.dot(muw, (W @ v) ** q))
    value = num ** (1.0 / q) / den ** (1.0 / p) if den > 0 else 0.0
    trial = PiecewiseConstant(breakpoints=tuple(partition.tolist()), values=tuple(v.tolist()))
    return trial, RayleighResult(value=value, numerator=num, denominator=den, quadrature_residual=0.0)
