"""Machinery for the middle-thirds Bernoulli measure and its extension to [0, inf).

The unit measure lives on the Cantor set K in [0, 1]; the extended measure puts
one copy of it on every integer translate n + K, so the cumulative function
satisfies Lam(n + t) = n + Lam(t).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np
from scipy.special import zeta as _zeta

from .errors import QuadratureError, ResourceError

# Ternary digits of a double never terminate (denominators are powers of two),
# so the scan is capped: hard cap plus a precision cap after the first
# significant binary digit of the result.
_HARD_DIGIT_CAP = 1400
_SIG_DIGIT_CAP = 64

# 2**(m+1) atom positions are materialized per level.
_MAX_LEVEL = 22


def cantor_cdf(x: float) -> float:
    """Cumulative function of the extended Bernoulli measure, exact in the input.

    Scans the ternary digits of the fractional part (computed with integer
    arithmetic, so there is no drift): digit 0 contributes bit 0, digit 2
    contributes bit 1, and the first digit 1 contributes a terminal half-step.
    """
    if x < 0.0:
        raise ValueError(f"cantor_cdf is defined on [0, inf), got {x}")
    if math.isinf(x):
        return math.inf
    n = math.floor(x)
    t = x - n
    if t == 0.0:
        return float(n)
    num, den = t.as_integer_ratio()  # den is a power of two
    val = 0.0
    first = None
    for i in range(_HARD_DIGIT_CAP):
        num *= 3
        d, num = divmod(num, den)
        if d:
            if first is None:
                first = i
            val += 0.5 ** (i + 1)
            if d == 1:
                break
        if num == 0:
            break
        if first is not None and i - first >= _SIG_DIGIT_CAP:
            break
    return n + val


def cantor_cdf_array(x: np.ndarray | Sequence[float]) -> np.ndarray:
    """Vectorized cumulative function, accurate to ~1e-9 relative.

    Small fractional parts are rescaled through the self-similarity
    Lam(t) = Lam(3^k t) / 2^k before the float digit scan, which keeps the
    relative accuracy scale-free.  Negative inputs map to 0.
    """
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    n = np.floor(np.maximum(x, 0.0))
    t = np.maximum(x, 0.0) - n
    pos = t > 0.0
    safe_t = np.where(pos, t, 0.5)
    with np.errstate(divide="ignore"):
        k = np.floor(-np.log(safe_t) / math.log(3.0))
    k = np.clip(k, 0.0, 600.0)
    ts = safe_t * np.power(3.0, k)
    over = ts >= 1.0
    k = np.where(over, k - 1.0, k)
    ts = np.where(over, ts / 3.0, ts)
    k = np.maximum(k, 0.0)

    val = np.zeros_like(ts)
    done = np.zeros(ts.shape, dtype=bool)
    y = ts.copy()
    for i in range(40):
        y *= 3.0
        d = np.floor(y)
        y -= d
        hit = (d >= 1.0) & ~done
        val += np.where(hit, 0.5 ** (i + 1), 0.0)
        done |= (d == 1.0) & hit
    out = n + np.where(pos, val * np.power(0.5, k), 0.0)
    return out[0] if scalar else out


def cantor_inverse_cdf(y: float, tol: float = 1e-13) -> float:
    """Generalized inverse of the extended cumulative function.

    Returns the infimum of {x : Lam(x) >= y}; on a flat segment this is its
    left edge.
    """
    if y <= 0.0:
        raise ValueError(f"inverse cdf needs y > 0, got {y}")
    if math.isinf(y):
        return math.inf
    lo = 0.0
    hi = float(math.ceil(y))  # Lam(ceil(y)) = ceil(y) >= y
    if cantor_cdf(hi) < y:
        hi += 1.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if cantor_cdf(mid) >= y:
            hi = mid
        else:
            lo = mid
        if hi - lo <= tol * max(1.0, hi):
            break
    return hi


@lru_cache(maxsize=None)
def _unit_atoms(m: int) -> np.ndarray:
    """Sorted level-m atom positions of the unit Cantor measure (2**(m+1) points)."""
    if m < 0:
        raise ValueError("level must be >= 0")
    if m > _MAX_LEVEL:
        raise ResourceError(f"level {m} exceeds cap {_MAX_LEVEL}")
    pts = np.array([0.0, 1.0])
    for _ in range(m):
        pts = np.concatenate([pts / 3.0, pts / 3.0 + 2.0 / 3.0])
    pts.flags.writeable = False
    return pts


@dataclass(frozen=True)
class LevelMApprox:
    """Level-m atomic approximation of the extended measure over integer translates."""

    m: int
    translates: range
    points: np.ndarray  # all atoms, sorted
    weight: float  # identical weight per atom, 2**-(m+1)

    def cdf(self, x: float) -> float:
        return self.weight * int(np.searchsorted(self.points, x, side="right"))

    def total_mass(self) -> float:
        return self.weight * len(self.points)


def level_m_atoms(m: int, translates: range = range(0, 1)) -> LevelMApprox:
    """Enumerate the level-m atoms (exact ternary-rational positions, uniform weight)."""
    if m < 0:
        raise ValueError("level must be >= 0")
    if len(translates) == 0:
        raise ValueError("translate range must be nonempty")
    if m > _MAX_LEVEL:
        raise ResourceError(f"level {m} exceeds cap {_MAX_LEVEL}")
    nums = [0, 1]
    for j in range(m):
        step = 2 * 3**j
        nums = nums + [v + step for v in nums]
    base = np.array(sorted(nums), dtype=float) / 3.0**m
    pts = np.concatenate([base + n for n in translates])
    pts.sort()
    return LevelMApprox(m=m, translates=translates, points=pts, weight=0.5 ** (m + 1))


def integrate_unit(f: Callable[[np.ndarray], np.ndarray], u: float, v: float, m: int) -> float:
    """Level-m integral of f over [u, v] intersected with the unit Cantor set.

    Descends through the self-similar halves until the clipped interval covers
    a full scaled copy, so resolution near a small left endpoint does not
    require a globally deep atom enumeration.
    """
    if v <= 0.0 or u >= 1.0 or v <= u:
        return 0.0
    if u <= 0.0 and v >= 1.0:
        pts = _unit_atoms(m)
        return float(np.sum(f(pts))) * 0.5 ** (m + 1)
    left = integrate_unit(lambda s: f(s / 3.0), 3.0 * u, 3.0 * v, m)
    right = integrate_unit(lambda s: f((s + 2.0) / 3.0), 3.0 * u - 2.0, 3.0 * v - 2.0, m)
    return 0.5 * (left + right)


def _translate_level(m: int, n: int, n0: int) -> int:
    # Far translates contribute slowly varying integrands; shed depth with distance.
    if n - n0 < 8:
        return m
    return max(4, m - int(2.0 * math.log2((n - n0) / 4.0)))


def integrate_extended(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    m: int,
    tol: float = 1e-9,
    max_translates: int = 200_000,
    diverge_to_inf: bool = False,
) -> tuple[float, float]:
    """Integrate f against the extended measure over [a, b]; returns (value, residual).

    Infinite upper limits are handled translate by translate with a power-law
    fit of the per-translate contributions; the fitted tail is added to the
    result and reported (scaled) as the residual.
    """
    a = max(a, 0.0)
    if b <= a:
        return 0.0, 0.0
    if math.isfinite(b):
        total = 0.0
        for n in range(int(math.floor(a)), int(math.ceil(b))):
            total += integrate_unit(lambda t, n=n: f(n + t), a - n, b - n, m)
        return total, 0.0

    n0 = int(math.floor(a))
    total = 0.0
    contribs: list[tuple[int, float]] = []
    zeros = 0
    n = n0
    while n - n0 < max_translates:
        mn = _translate_level(m, n, n0)
        c = integrate_unit(lambda t, n=n: f(n + t), a - n, 1.0, mn)
        total += c
        if math.isinf(c):
            return math.inf, math.inf
        if c == 0.0:
            zeros += 1
            if zeros > 8 and n > n0 + 4:
                return total, 0.0
        else:
            zeros = 0
            contribs.append((n, c))
        if len(contribs) >= 12 and c > 0.0 and n >= max(n0 + 8, 4):
            n_ref, c_ref = contribs[len(contribs) // 2]
            if 0.0 < c < c_ref and n > n_ref:
                s = math.log(c_ref / c) / math.log((n + 1.0) / (n_ref + 1.0))
                if s > 1.05:
                    # model c_k ~ C (k+1)^-s; sum the model tail exactly and
                    # budget its error as O(tail / n)
                    coef = c * (n + 1.0) ** s
                    tail = coef * float(_zeta(s, n + 2.0))
                    err = tail * min(1.0, 6.0 / (n - n0 + 1.0))
                    if err < tol * abs(total) or tail < 1e-300:
                        return total + tail, err
                elif diverge_to_inf and len(contribs) > 256:
                    return math.inf, math.inf
            elif diverge_to_inf and c >= c_ref > 0.0 and len(contribs) > 256:
                # contributions are not decaying; the integral diverges
                return math.inf, math.inf
        n += 1
    if diverge_to_inf:
        return math.inf, math.inf
    raise QuadratureError(
        f"translate sum did not meet tolerance {tol} within {max_translates} translates",
        residual=abs(contribs[-1][1]) if contribs else math.nan,
    )


@dataclass
class TailTable:
    """Per-translate integrals of a weight against the extended measure.

    contribs[k] is the integral over the translate [k, k+1]; `beyond` is the
    fitted power-law remainder past the table, with model c_k ~ coef * (k+1)^-s.
    Suffix sums answer every tail query without re-running the translate loop.
    """

    contribs: np.ndarray
    beyond: float
    coef: float
    s: float
    err: float
    divergent: bool

    def tail_from(self, n: int) -> float:
        if self.divergent:
            return math.inf
        n = max(n, 0)
        if n < len(self.contribs):
            return float(np.sum(self.contribs[n:])) + self.beyond
        if self.coef == 0.0:
            return 0.0
        return self.coef * float(_zeta(self.s, n + 1.0))


def extended_tail_table(
    f: Callable[[np.ndarray], np.ndarray],
    m: int,
    tol: float = 1e-6,
    max_translates: int = 200_000,
) -> TailTable:
    """Tabulate per-translate integrals of f from translate 0 until the fitted
    power-law remainder meets `tol` relative to the running sum."""
    contribs: list[float] = []
    total = 0.0  # finite contributions only; translate 0 may integrate to inf
    zeros = 0
    n = 0
    while n < max_translates:
        mn = _translate_level(m, n, 0)
        c = integrate_unit(lambda t, n=n: f(n + t), 0.0, 1.0, mn)
        contribs.append(c)
        if math.isfinite(c):
            total += c
        if c == 0.0:
            zeros += 1
            if zeros > 8 and n > 4:
                return TailTable(np.array(contribs), 0.0, 0.0, 2.0, 0.0, False)
        elif math.isfinite(c):
            zeros = 0
            c_ref = contribs[n // 2]
            if n >= 12 and math.isfinite(c_ref) and c_ref > 0.0:
                if c < c_ref:
                    s = math.log(c_ref / c) / math.log((n + 1.0) / (n // 2 + 1.0))
                    if s > 1.05:
                        coef = c * (n + 1.0) ** s
                        beyond = coef * float(_zeta(s, n + 2.0))
                        err = beyond * min(1.0, 6.0 / (n + 1.0))
                        if err < tol * abs(total) or beyond < 1e-300:
                            return TailTable(np.array(contribs), beyond, coef, s, err, False)
                    elif n > 256:
                        return TailTable(np.array(contribs), math.inf, 0.0, s, math.inf, True)
                elif n > 256:
                    # contributions are not decaying; the tail cannot converge
                    return TailTable(np.array(contribs), math.inf, 0.0, 0.0, math.inf, True)
        n += 1
    raise QuadratureError(
        f"translate table did not meet tolerance {tol} within {max_translates} translates",
        residual=abs(contribs[-1]) if contribs else math.nan,
    )


def weak_convergence_check(f: Callable[[np.ndarray], np.ndarray], m_max: int) -> list[float]:
    """Integrals of f against the level-m unit approximations for m = 0..m_max."""
    out = []
    for m in range(m_max + 1):
        pts = _unit_atoms(m)
        out.append(float(np.sum(f(pts))) * 0.5 ** (m + 1))
    return out
