"""Sigma-finite Borel measures on the real line.

Five variants (atomic, density, Cantor-type, weighted, transformed) behind one
interface: interval masses with explicit endpoint inclusion, the cumulative
function and its left limits, the generalized inverse, and integration of
pointwise-evaluable functions.  All measures are immutable after construction
and every operation is a pure function of its inputs.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy import integrate as _scipy_integrate

from . import cantor as _cantor
from .errors import MeasureError, QuadratureError

INF = math.inf

_BISECT_STEPS = 200
_PROBE_LIMIT = 1e15


@dataclass(frozen=True)
class IntervalQuery:
    """An interval on the extended reals with explicit endpoint inclusion."""

    a: float
    b: float
    include_a: bool = True
    include_b: bool = True

    def __post_init__(self):
        if math.isnan(self.a) or math.isnan(self.b):
            raise MeasureError("interval endpoints must not be NaN")
        if self.a > self.b:
            raise MeasureError(f"invalid interval: a={self.a} > b={self.b}")

    @classmethod
    def closed(cls, a: float, b: float) -> "IntervalQuery":
        return cls(a, b, True, True)

    @classmethod
    def half_open(cls, a: float, b: float) -> "IntervalQuery":
        """(a, b]"""
        return cls(a, b, False, True)

    @classmethod
    def upto(cls, x: float) -> "IntervalQuery":
        """(-inf, x]"""
        return cls(-INF, x, False, True)

    @classmethod
    def below(cls, x: float) -> "IntervalQuery":
        """(-inf, x)"""
        return cls(-INF, x, False, False)

    @classmethod
    def from_point(cls, x: float) -> "IntervalQuery":
        """[x, +inf)"""
        return cls(x, INF, True, False)

    @classmethod
    def above(cls, x: float) -> "IntervalQuery":
        """(x, +inf)"""
        return cls(x, INF, False, False)

    @classmethod
    def real_line(cls) -> "IntervalQuery":
        return cls(-INF, INF, False, False)


@dataclass(frozen=True)
class TailRule:
    """Infinite discrete tail: atoms at consecutive integers n >= start.

    `weight_at` must be positive and non-increasing so the integral test
    brackets the tail sums: integral <= sum <= integral + first weight.
    `tail_integral(n)` evaluates the antiderivative tail int_n^inf weight.
    """

    start: int
    weight_at: Callable[[float], float] = field(compare=False)
    tail_integral: Callable[[float], float] = field(compare=False)
    # identifies the rule for structural equality and serialization
    params: tuple = ()

    def __post_init__(self):
        w0 = self.weight_at(self.start)
        w1 = self.weight_at(self.start + 1)
        if not (w0 > 0 and w1 > 0 and w1 <= w0 * (1 + 1e-12)):
            raise MeasureError("tail weights must be positive and non-increasing")

    @classmethod
    def power(cls, start: int, coefficient: float = 1.0, exponent: float = 0.0) -> "TailRule":
        if coefficient <= 0 or exponent > 0:
            raise MeasureError("power tail needs coefficient > 0 and exponent <= 0")

        def weight_at(n: float) -> float:
            return coefficient * float(n) ** exponent

        def tail_integral(n: float) -> float:
            if exponent >= -1.0:
                return INF
            return coefficient * float(n) ** (exponent + 1.0) / (-(exponent + 1.0))

        return cls(
            start=start,
            weight_at=weight_at,
            tail_integral=tail_integral,
            params=("power", coefficient, exponent),
        )

    def bracket(self, n: int) -> tuple[float, float]:
        """Lower/upper integral-test bounds for sum_{k >= n} weight(k)."""
        n = max(n, self.start)
        lo = self.tail_integral(n)
        return lo, lo + self.weight_at(n)


class Measure:
    """Common interface; subclasses implement `interval_mass` and `integrate`."""

    label: str = ""

    # -- masses ------------------------------------------------------------

    def interval_mass(self, iq: IntervalQuery) -> float:
        raise NotImplementedError

    def cdf(self, x: float) -> float:
        """S(x) = mass of (-inf, x]; right-continuous and nondecreasing."""
        return self.interval_mass(IntervalQuery.upto(x))

    def cdf_left(self, x: float) -> float:
        """S(x-) = mass of (-inf, x); equals cdf(x) minus the atom at x."""
        return self.interval_mass(IntervalQuery.below(x))

    def tail_mass(self, x: float, include: bool = True) -> float:
        return self.interval_mass(
            IntervalQuery.from_point(x) if include else IntervalQuery.above(x)
        )

    # -- generalized inverse ----------------------------------------------

    def inv_cdf(self, y: float) -> float:
        """inf{x : S(x) >= y}; on flat segments, the left edge.  +inf if y exceeds the mass."""
        if not y > 0:
            raise MeasureError(f"inv_cdf needs y > 0, got {y}")
        if math.isinf(y):
            return INF
        lo, hi = self._inverse_bracket(y)
        if hi is None:
            return INF
        for _ in range(_BISECT_STEPS):
            mid = 0.5 * (lo + hi)
            if self.cdf(mid) >= y:
                hi = mid
            else:
                lo = mid
        return hi

    def _inverse_bracket(self, y: float) -> tuple[float, float | None]:
        hi = 1.0
        while self.cdf(hi) < y:
            hi *= 4.0
            if hi > _PROBE_LIMIT:
                return 0.0, None
        lo = -1.0
        while self.cdf(lo) >= y:
            lo *= 4.0
            if lo < -_PROBE_LIMIT:
                break
        return lo, hi

    # -- integration -------------------------------------------------------

    def integrate(
        self, f: Callable[[np.ndarray], np.ndarray], iq: IntervalQuery | None = None,
        tol: float = 1e-10,
    ) -> float:
        raise NotImplementedError

    # -- candidate points for supremum searches ---------------------------

    def supremum_candidates(self, window: float, depth: int, grid_n: int) -> np.ndarray:
        return np.array([0.0, 1.0])

    def atom_points(self, lo: float, hi: float) -> np.ndarray:
        """Atom locations inside [lo, hi] (empty for continuous variants)."""
        return np.array([])


def _as_array_fn(f: Callable) -> Callable[[np.ndarray], np.ndarray]:
    def wrapped(x: np.ndarray) -> np.ndarray:
        out = f(np.asarray(x, dtype=float))
        return np.asarray(out, dtype=float)

    return wrapped


# ---------------------------------------------------------------------------
# Atomic


@dataclass(frozen=True)
class AtomicMeasure(Measure):
    points: tuple[float, ...]
    weights: tuple[float, ...]
    tail: TailRule | None = None
    label: str = ""
    _pts: np.ndarray = field(init=False, repr=False, compare=False)
    _wts: np.ndarray = field(init=False, repr=False, compare=False)
    _cum: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        wts = np.asarray(self.weights, dtype=float)
        if pts.shape != wts.shape or pts.ndim != 1:
            raise MeasureError("points and weights must be 1-d and equal length")
        if pts.size and np.any(np.diff(pts) <= 0):
            raise MeasureError("atomic points must be strictly increasing")
        if np.any(wts < 0) or not np.all(np.isfinite(wts)):
            raise MeasureError("atomic weights must be finite and nonnegative")
        if self.tail is not None and pts.size and self.tail.start <= pts[-1]:
            raise MeasureError("tail must start strictly after the last explicit point")
        object.__setattr__(self, "points", tuple(pts.tolist()))
        object.__setattr__(self, "weights", tuple(wts.tolist()))
        object.__setattr__(self, "_pts", pts)
        object.__setattr__(self, "_wts", wts)
        object.__setattr__(self, "_cum", np.cumsum(wts))

    # explicit part -------------------------------------------------------

    def _explicit_range(self, iq: IntervalQuery) -> tuple[int, int]:
        side_a = "left" if iq.include_a else "right"
        side_b = "right" if iq.include_b else "left"
        i = int(np.searchsorted(self._pts, iq.a, side=side_a))
        j = int(np.searchsorted(self._pts, iq.b, side=side_b))
        return i, j

    def _tail_indices(self, iq: IntervalQuery) -> tuple[int, float] | None:
        """First tail index inside the query and its (possibly infinite) last index."""
        if self.tail is None:
            return None
        n1 = self.tail.start
        if math.isfinite(iq.a):
            n1 = max(n1, int(math.ceil(iq.a)))
        if float(n1) == iq.a and not iq.include_a:
            n1 += 1
        if math.isinf(iq.b):
            return n1, INF
        n2 = int(math.floor(iq.b))
        if float(n2) == iq.b and not iq.include_b:
            n2 -= 1
        if n2 < n1:
            return None
        return n1, float(n2)

    def interval_mass(self, iq: IntervalQuery) -> float:
        lo, hi = self.interval_mass_bracket(iq)
        if math.isinf(lo):
            return INF
        return 0.5 * (lo + hi)

    def interval_mass_bracket(self, iq: IntervalQuery) -> tuple[float, float]:
        """Rigorous (lower, upper) bounds; they coincide unless the tail is cut."""
        i, j = self._explicit_range(iq)
        explicit = float(self._cum[j - 1] - (self._cum[i - 1] if i > 0 else 0.0)) if j > i else 0.0
        tr = self._tail_indices(iq)
        if tr is None:
            return explicit, explicit
        n1, n2 = tr
        if math.isinf(n2):
            lo, hi = self.tail.bracket(n1)
            return explicit + lo, explicit + hi
        s = sum(self.tail.weight_at(n) for n in range(n1, int(n2) + 1))
        return explicit + s, explicit + s

    def integrate(self, f, iq=None, tol=1e-10):
        iq = iq or IntervalQuery.real_line()
        fa = _as_array_fn(f)
        i, j = self._explicit_range(iq)
        total = float(np.dot(fa(self._pts[i:j]), self._wts[i:j])) if j > i else 0.0
        tr = self._tail_indices(iq)
        if tr is not None:
            n1, n2 = tr
            if math.isinf(n2):
                small = 0
                n = n1
                while n - n1 < 1_000_000:
                    term = float(fa(np.array([float(n)]))[0]) * self.tail.weight_at(n)
                    total += term
                    small = small + 1 if abs(term) <= tol * max(abs(total), 1e-300) else 0
                    if small >= 8:
                        break
                    n += 1
                else:
                    raise QuadratureError("atomic tail sum did not converge", residual=abs(term))
            else:
                for n in range(n1, int(n2) + 1):
                    total += float(fa(np.array([float(n)]))[0]) * self.tail.weight_at(n)
        return total

    def inv_cdf(self, y: float) -> float:
        if not y > 0:
            raise MeasureError(f"inv_cdf needs y > 0, got {y}")
        k = int(np.searchsorted(self._cum, y, side="left"))
        if k < len(self._cum):
            return float(self._pts[k])
        if self.tail is None:
            return INF
        acc = float(self._cum[-1]) if len(self._cum) else 0.0
        n = self.tail.start
        while n - self.tail.start < 100_000_000:
            acc += self.tail.weight_at(n)
            if acc >= y:
                return float(n)
            n += 1
        return INF

    def total_mass(self) -> float:
        explicit = float(self._cum[-1]) if len(self._cum) else 0.0
        if self.tail is None:
            return explicit
        lo, hi = self.tail.bracket(self.tail.start)
        return explicit + 0.5 * (lo + hi)

    def atom_points(self, lo: float, hi: float) -> np.ndarray:
        i = int(np.searchsorted(self._pts, lo, side="left"))
        j = int(np.searchsorted(self._pts, hi, side="right"))
        return self._pts[i:j]

    def supremum_candidates(self, window, depth, grid_n):
        pts = [self._pts[self._pts <= window]]
        if self.tail is not None:
            top = min(window, 1e16)
            if top > self.tail.start:
                geo = np.unique(
                    np.floor(np.geomspace(self.tail.start, top, num=max(grid_n, 32)))
                )
                pts.append(geo)
        return np.concatenate(pts) if pts else np.array([])


# ---------------------------------------------------------------------------
# Densities


@dataclass(frozen=True)
class PowerLawPiece:
    """Density c * t**e on [lo, hi] with a closed-form antiderivative."""

    lo: float
    hi: float
    coefficient: float = 1.0
    exponent: float = 0.0

    def __post_init__(self):
        if self.lo >= self.hi:
            raise MeasureError("piece support must have lo < hi")
        if self.coefficient < 0:
            raise MeasureError("density coefficient must be nonnegative")
        if self.exponent != 0.0 and self.lo < 0:
            raise MeasureError("power-law pieces need nonnegative support")

    def _antiderivative(self, t: float) -> float:
        c, e = self.coefficient, self.exponent
        if e == -1.0:
            if t == 0.0:
                return -INF
            return c * math.log(t)
        k = e + 1.0
        if t == 0.0:
            return 0.0 if k > 0 else -INF
        if math.isinf(t):
            return INF if k > 0 else 0.0
        return c * t**k / k

    def mass(self, a: float, b: float) -> float:
        a = max(a, self.lo)
        b = min(b, self.hi)
        if b <= a:
            return 0.0
        fa, fb = self._antiderivative(a), self._antiderivative(b)
        if math.isinf(fb) and fb > 0:
            return INF
        if math.isinf(fa) and fa < 0:
            return INF
        return fb - fa

    def density(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        inside = (x >= self.lo) & (x <= self.hi)
        with np.errstate(divide="ignore", invalid="ignore"):
            vals = self.coefficient * np.power(np.where(inside, x, 1.0), self.exponent)
        return np.where(inside, vals, 0.0)


@dataclass(frozen=True)
class GenericPiece:
    """Density given by an arbitrary pointwise-evaluable nonnegative function."""

    lo: float
    hi: float
    fn: Callable[[np.ndarray], np.ndarray]

    def __post_init__(self):
        if self.lo >= self.hi:
            raise MeasureError("piece support must have lo < hi")

    def mass(self, a: float, b: float) -> float:
        a = max(a, self.lo)
        b = min(b, self.hi)
        if b <= a:
            return 0.0
        val, err = _scipy_integrate.quad(
            lambda t: float(self.fn(np.array([t]))[0]), a, b, limit=200
        )
        if err > 1e-8 * max(abs(val), 1.0):
            raise QuadratureError("generic density quadrature did not converge", residual=err)
        return val

    def density(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        inside = (x >= self.lo) & (x <= self.hi)
        return np.where(inside, _as_array_fn(self.fn)(x), 0.0)


@dataclass(frozen=True)
class DensityMeasure(Measure):
    pieces: tuple
    label: str = ""

    def __post_init__(self):
        if not self.pieces:
            raise MeasureError("density measure needs at least one piece")
        object.__setattr__(self, "pieces", tuple(self.pieces))

    def interval_mass(self, iq: IntervalQuery) -> float:
        return sum(p.mass(iq.a, iq.b) for p in self.pieces)

    def integrate(self, f, iq=None, tol=1e-10):
        iq = iq or IntervalQuery.real_line()
        fa = _as_array_fn(f)
        total = 0.0
        residual = 0.0
        for p in self.pieces:
            a = max(iq.a, p.lo)
            b = min(iq.b, p.hi)
            if b <= a:
                continue
            dens = p.density
            val, err = _scipy_integrate.quad(
                lambda t: float(fa(np.array([t]))[0] * dens(np.array([t]))[0]),
                a,
                b,
                epsabs=tol,
                epsrel=tol,
                limit=400,
            )
            total += val
            residual += err
        if residual > max(tol * abs(total), 100 * tol):
            raise QuadratureError("density quadrature did not meet tolerance", residual=residual)
        return total

    def supremum_candidates(self, window, depth, grid_n):
        pts = []
        for p in self.pieces:
            lo = p.lo if math.isfinite(p.lo) else -window
            hi = p.hi if math.isfinite(p.hi) else window
            hi = min(hi, window)
            if hi <= lo:
                continue
            pts.append(np.array([lo, hi]))
            pts.append(np.linspace(lo, hi, grid_n))
            glo = max(lo, hi * 1e-12, 1e-12)
            if hi > glo:
                pts.append(np.geomspace(glo, hi, grid_n))
        return np.concatenate(pts) if pts else np.array([])


def lebesgue(lo: float = 0.0, hi: float = INF, label: str = "") -> DensityMeasure:
    return DensityMeasure(pieces=(PowerLawPiece(lo=lo, hi=hi),), label=label)


def power_density(
    exponent: float, lo: float, hi: float = INF, coefficient: float = 1.0, label: str = ""
) -> DensityMeasure:
    return DensityMeasure(
        pieces=(PowerLawPiece(lo=lo, hi=hi, coefficient=coefficient, exponent=exponent),),
        label=label,
    )


# ---------------------------------------------------------------------------
# Cantor


@dataclass(frozen=True)
class CantorMeasure(Measure):
    """Extended Bernoulli measure on the union of integer translates of the Cantor set.

    The cumulative function is exact; integration uses the level-`level`
    atomic approximation.
    """

    level: int = 14
    label: str = ""

    def __post_init__(self):
        if self.level < 0:
            raise MeasureError("level must be >= 0")

    def interval_mass(self, iq: IntervalQuery) -> float:
        if iq.b < 0:
            return 0.0
        a = max(iq.a, 0.0)
        b = iq.b
        if b <= a:
            return 0.0
        if math.isinf(b):
            return INF
        return _cantor.cantor_cdf(b) - _cantor.cantor_cdf(a)

    def integrate(self, f, iq=None, tol=1e-8):
        iq = iq or IntervalQuery.real_line()
        val, _ = _cantor.integrate_extended(_as_array_fn(f), iq.a, iq.b, self.level, tol=tol)
        return val

    def inv_cdf(self, y: float) -> float:
        if not y > 0:
            raise MeasureError(f"inv_cdf needs y > 0, got {y}")
        return _cantor.cantor_inverse_cdf(y)

    def supremum_candidates(self, window, depth, grid_n):
        triadic = 3.0 ** -np.arange(0, depth + 1)
        ints = np.arange(0.0, min(window, 64.0) + 1.0)
        offs = np.concatenate([ints, ints + 1.0 / 3.0, ints + 2.0 / 3.0])
        return np.concatenate([triadic, offs])


# ---------------------------------------------------------------------------
# Weighted


@dataclass(frozen=True)
class WeightRule:
    """Preset weight: kind in {"x_power", "cdf_power", "const"}."""

    kind: str
    value: float = 1.0

    def __post_init__(self):
        if self.kind not in ("x_power", "cdf_power", "const"):
            raise MeasureError(f"unknown weight kind {self.kind!r}")

    def as_function(self, base: Measure) -> Callable[[np.ndarray], np.ndarray]:
        if self.kind == "const":
            if self.value < 0:
                raise MeasureError("const weight must be nonnegative")
            return lambda x: np.full_like(np.asarray(x, dtype=float), self.value)
        if self.kind == "x_power":
            e = self.value

            def xw(x):
                x = np.asarray(x, dtype=float)
                with np.errstate(divide="ignore"):
                    return np.power(x, e)

            return xw
        # cdf_power: the base measure's own cumulative function raised to a power
        e = self.value
        if isinstance(base, CantorMeasure):
            def cw(x):
                with np.errstate(divide="ignore"):
                    return np.power(_cantor.cantor_cdf_array(x), e)

            return cw

        def gw(x):
            x = np.atleast_1d(np.asarray(x, dtype=float))
            vals = np.array([base.cdf(float(t)) for t in x])
            with np.errstate(divide="ignore"):
                return np.power(vals, e)

        return gw


@dataclass(frozen=True)
class WeightedMeasure(Measure):
    base: Measure
    weight: WeightRule | Callable[[np.ndarray], np.ndarray]
    label: str = ""
    mass_tol: float = 1e-6
    _cache: dict = field(default_factory=dict, repr=False, compare=False, hash=False)

    def _weight_fn(self) -> Callable[[np.ndarray], np.ndarray]:
        if isinstance(self.weight, WeightRule):
            return self.weight.as_function(self.base)
        return _as_array_fn(self.weight)

    def interval_mass(self, iq: IntervalQuery) -> float:
        key = (iq.a, iq.b, iq.include_a, iq.include_b)
        if key not in self._cache:
            self._cache[key] = self._mass_uncached(iq)
        return self._cache[key]

    def _mass_uncached(self, iq: IntervalQuery) -> float:
        w = self._weight_fn()
        if isinstance(self.base, CantorMeasure) and math.isinf(iq.b):
            # split at an integer; the translate table answers every integer tail
            n1 = max(1, int(math.ceil(max(iq.a, 0.0))))
            head, _ = _cantor.integrate_extended(
                w, max(iq.a, 0.0), float(n1), self.base.level, tol=self.mass_tol
            )
            if "tailtable" not in self._cache:
                self._cache["tailtable"] = _cantor.extended_tail_table(
                    w, self.base.level, tol=self.mass_tol
                )
            return head + self._cache["tailtable"].tail_from(n1)
        return self.base.integrate(w, iq, tol=self.mass_tol)

    def integrate(self, f, iq=None, tol=1e-10):
        w = self._weight_fn()
        fa = _as_array_fn(f)
        return self.base.integrate(lambda x: fa(x) * w(x), iq, tol=tol)

    def atom_points(self, lo: float, hi: float) -> np.ndarray:
        return self.base.atom_points(lo, hi)

    def supremum_candidates(self, window, depth, grid_n):
        return self.base.supremum_candidates(window, depth, grid_n)


# ---------------------------------------------------------------------------
# Transformed


@dataclass(frozen=True)
class TransformedMeasure(Measure):
    """Pushforward of `base` under shift(c), scale(s > 0), or reflect (x -> -x)."""

    base: Measure
    kind: str
    value: float = 0.0
    label: str = ""

    def __post_init__(self):
        if self.kind not in ("shift", "scale", "reflect"):
            raise MeasureError(f"unknown transform {self.kind!r}")
        if self.kind == "scale" and not self.value > 0:
            raise MeasureError("scale factor must be positive")

    def _forward(self, x: np.ndarray) -> np.ndarray:
        if self.kind == "shift":
            return x + self.value
        if self.kind == "scale":
            return x * self.value
        return -x

    def _pull_query(self, iq: IntervalQuery) -> IntervalQuery:
        if self.kind == "shift":
            return IntervalQuery(iq.a - self.value, iq.b - self.value, iq.include_a, iq.include_b)
        if self.kind == "scale":
            return IntervalQuery(iq.a / self.value, iq.b / self.value, iq.include_a, iq.include_b)
        return IntervalQuery(-iq.b, -iq.a, iq.include_b, iq.include_a)

    def interval_mass(self, iq: IntervalQuery) -> float:
        return self.base.interval_mass(self._pull_query(iq))

    def integrate(self, f, iq=None, tol=1e-10):
        iq = iq or IntervalQuery.real_line()
        fa = _as_array_fn(f)
        return self.base.integrate(lambda t: fa(self._forward(t)), self._pull_query(iq), tol=tol)

    def inv_cdf(self, y: float) -> float:
        if self.kind == "shift":
            return self.base.inv_cdf(y) + self.value
        if self.kind == "scale":
            return self.base.inv_cdf(y) * self.value
        return super().inv_cdf(y)

    def atom_points(self, lo: float, hi: float) -> np.ndarray:
        q = self._pull_query(IntervalQuery.closed(lo, hi))
        return np.sort(self._forward(self.base.atom_points(q.a, q.b)))

    def supremum_candidates(self, window, depth, grid_n):
        pts = self._forward(self.base.supremum_candidates(window, depth, grid_n))
        return np.sort(pts)


# ---------------------------------------------------------------------------
# Relations between measures


def pushforward_check(m: Measure, samples: Iterable[IntervalQuery]) -> list[float]:
    """Discrepancy |(S(b) - S(a)) - m((a, b])| for each half-open sample query."""
    out = []
    for iq in samples:
        if iq.include_a or not iq.include_b:
            raise MeasureError("pushforward_check expects half-open (a, b] queries")
        lhs = m.cdf(iq.b) - m.cdf(iq.a)
        out.append(abs(lhs - m.interval_mass(iq)))
    return out


def dominates(
    m1: Measure, m2: Measure, grid: Sequence[float], tol: float = 1e-12
) -> tuple[bool, float | None]:
    """Check m1((x, inf)) <= m2((x, inf)) at every grid point; witness on failure."""
    if len(grid) == 0:
        raise MeasureError("domination grid must be nonempty")
    for x in grid:
        t1 = m1.tail_mass(x, include=False)
        t2 = m2.tail_mass(x, include=False)
        if t1 > t2 + tol:
            return False, float(x)
    return True, None


def counting_measure(n_max: int, label: str = "") -> AtomicMeasure:
    """Counting measure on {1, ..., n_max} with a unit-weight integer tail beyond."""
    pts = np.arange(1.0, n_max + 1.0)
    return AtomicMeasure(
        points=tuple(pts),
        weights=tuple(np.ones_like(pts)),
        tail=TailRule.power(n_max + 1, 1.0, 0.0),
        label=label,
    )
