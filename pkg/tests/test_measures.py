import math

import numpy as np
import pytest

from hardybounds.errors import MeasureError
from hardybounds.measures import (
    AtomicMeasure,
    CantorMeasure,
    DensityMeasure,
    IntervalQuery,
    PowerLawPiece,
    TailRule,
    TransformedMeasure,
    WeightedMeasure,
    WeightRule,
    counting_measure,
    dominates,
    lebesgue,
    power_density,
    pushforward_check,
)


# ---------------------------------------------------------------------------
# Atomic


def test_atomic_cdf_endpoint_inclusion():
    m = AtomicMeasure(points=(0.0,), weights=(5.0,))
    assert m.cdf(0.0) == 5.0
    assert m.cdf_left(0.0) == 0.0
    assert m.cdf(-1e-9) == 0.0


def test_atomic_cdf_left():
    m = AtomicMeasure(points=(1.0, 2.0), weights=(1.0, 3.0))
    assert m.cdf_left(2.0) == 1.0
    assert m.cdf(2.0) == 4.0


def test_atomic_interval_masses():
    m = AtomicMeasure(points=(1.0, 2.0, 3.0), weights=(1.0, 1.0, 1.0))
    assert m.interval_mass(IntervalQuery.closed(1.0, 2.0)) == 2.0
    assert m.interval_mass(IntervalQuery.half_open(1.0, 2.0)) == 1.0
    assert m.interval_mass(IntervalQuery(1.0, 3.0, False, False)) == 1.0
    assert m.interval_mass(IntervalQuery.from_point(2.0)) == 2.0
    assert m.interval_mass(IntervalQuery.above(2.0)) == 1.0


def test_atomic_inv_cdf():
    m = AtomicMeasure(points=(1.0, 2.0), weights=(1.0, 1.0))
    assert m.inv_cdf(1.5) == 2.0
    assert m.inv_cdf(1.0) == 1.0
    assert m.inv_cdf(0.5) == 1.0
    assert math.isinf(m.inv_cdf(3.0))


def test_atomic_validation():
    with pytest.raises(MeasureError):
        AtomicMeasure(points=(2.0, 1.0), weights=(1.0, 1.0))
    with pytest.raises(MeasureError):
        AtomicMeasure(points=(1.0,), weights=(-1.0,))


def test_atomic_integrate():
    m = AtomicMeasure(points=(1.0, 2.0, 3.0), weights=(1.0, 1.0, 1.0))
    assert m.integrate(lambda x: x**2) == pytest.approx(14.0)


def test_tail_rule_brackets():
    tail = TailRule.power(10, 1.0, -2.0)
    lo, hi = tail.bracket(10)
    # integral-test bracket around sum_{k >= 10} k^-2
    exact = sum(k**-2.0 for k in range(10, 100_000))
    assert lo <= exact <= hi
    assert hi - lo == pytest.approx(tail.weight_at(10))


def test_atomic_with_tail_mass():
    n = np.arange(1.0, 101.0)
    m = AtomicMeasure(
        points=tuple(n), weights=tuple(n**-2.0), tail=TailRule.power(101, 1.0, -2.0)
    )
    total = m.interval_mass(IntervalQuery.real_line())
    assert total == pytest.approx(math.pi**2 / 6.0, abs=1e-4)
    lo, hi = m.interval_mass_bracket(IntervalQuery.from_point(50.0))
    exact = sum(k**-2.0 for k in range(50, 200_000))
    assert lo <= exact <= hi


def test_counting_measure_cdf():
    m = counting_measure(100)
    assert m.cdf(4.0) == 4.0
    assert m.cdf(4.5) == 4.0
    assert m.cdf(1000.5) == pytest.approx(1000.0, abs=1.0)


# ---------------------------------------------------------------------------
# Density


def test_lebesgue_masses():
    m = lebesgue(1.0, math.inf)
    assert m.cdf(4.0) == pytest.approx(3.0)
    assert m.interval_mass(IntervalQuery.closed(2.0, 5.0)) == pytest.approx(3.0)
    assert math.isinf(m.interval_mass(IntervalQuery.from_point(2.0)))


def test_power_density_masses():
    m = power_density(-2.0, 1.0, math.inf)
    assert m.interval_mass(IntervalQuery.from_point(1.0)) == pytest.approx(1.0)
    assert m.interval_mass(IntervalQuery.from_point(2.0)) == pytest.approx(0.5)
    assert m.inv_cdf(0.5) == pytest.approx(2.0, rel=1e-6)


def test_density_integrate():
    m = lebesgue(0.0, 1.0)
    assert m.integrate(lambda x: np.ones_like(x)) == pytest.approx(1.0)
    assert m.integrate(lambda x: x, IntervalQuery.closed(0.0, 1.0)) == pytest.approx(0.5)


def test_log_divergent_piece():
    m = power_density(-1.0, 1.0, math.inf)
    assert math.isinf(m.interval_mass(IntervalQuery.from_point(1.0)))


# ---------------------------------------------------------------------------
# Cantor variant


def test_cantor_measure_basics():
    m = CantorMeasure(level=10)
    assert m.cdf(1.0 / 3.0) == pytest.approx(0.5, abs=1e-9)
    assert m.interval_mass(IntervalQuery.upto(1.0 / 9.0)) == pytest.approx(0.25, abs=1e-9)
    assert m.inv_cdf(0.5) == pytest.approx(1.0 / 3.0, abs=1e-9)
    assert math.isinf(m.interval_mass(IntervalQuery.from_point(0.0)))


def test_cantor_integrate_tail_value():
    # closed form: the weighted tail integral equals 1 / Lambda(x) at q = 2
    m = CantorMeasure(level=14)
    val = m.integrate(
        lambda t: np.power(np.maximum(t, 1e-300), 0.0), IntervalQuery.closed(0.0, 1.0)
    )
    assert val == pytest.approx(1.0, abs=1e-9)


def test_weighted_cantor_tail_matches_closed_form():
    mu = WeightedMeasure(base=CantorMeasure(level=12), weight=WeightRule("cdf_power", -2.0))
    for x in (1.0 / 3.0, 1.5):
        got = mu.interval_mass(IntervalQuery.from_point(x))
        exact = 1.0 / CantorMeasure(level=12).cdf(x)
        assert got == pytest.approx(exact, rel=1e-3)


def test_weighted_x_power():
    mu = WeightedMeasure(base=lebesgue(1.0, math.inf), weight=WeightRule("x_power", -2.0))
    assert mu.interval_mass(IntervalQuery.from_point(2.0)) == pytest.approx(0.5, rel=1e-8)


# ---------------------------------------------------------------------------
# Transforms


def test_transform_shift_scale_reflect():
    base = AtomicMeasure(points=(1.0, 2.0), weights=(1.0, 3.0))
    shifted = TransformedMeasure(base=base, kind="shift", value=10.0)
    assert shifted.cdf(11.0) == 1.0
    scaled = TransformedMeasure(base=base, kind="scale", value=2.0)
    assert scaled.cdf(4.0) == 4.0
    assert scaled.cdf(3.9) == 1.0
    reflected = TransformedMeasure(base=base, kind="reflect")
    assert reflected.cdf(-1.0) == 4.0
    assert reflected.cdf(-1.5) == 3.0
    assert reflected.interval_mass(IntervalQuery.from_point(-2.0)) == 4.0


def test_transform_validation():
    base = AtomicMeasure(points=(0.0,), weights=(1.0,))
    with pytest.raises(MeasureError):
        TransformedMeasure(base=base, kind="scale", value=0.0)
    with pytest.raises(MeasureError):
        TransformedMeasure(base=base, kind="rotate")


# ---------------------------------------------------------------------------
# Identities


def test_pushforward_check_examples():
    m = AtomicMeasure(points=(0.0, 1.0), weights=(2.0, 3.0))
    discrepancies = pushforward_check(m, [IntervalQuery.half_open(0.0, 1.0)])
    assert discrepancies[0] <= 1e-12
    d = power_density(-2.0, 1.0, math.inf)
    discrepancies = pushforward_check(d, [IntervalQuery.half_open(1.0, 2.0)])
    assert discrepancies[0] <= 1e-12


def test_dominates():
    m2 = AtomicMeasure(points=(0.0, 1.0), weights=(1.0, 2.0))
    m1 = AtomicMeasure(points=(0.0, 1.0), weights=(0.5, 1.0))
    grid = [-1.0, 0.0, 0.5, 1.0, 2.0]
    ok, _ = dominates(m1, m2, grid)
    assert ok
    ok, witness = dominates(m2, m1, grid)
    assert not ok
    assert witness is not None


def test_zero_infinity_interval():
    m = DensityMeasure(pieces=(PowerLawPiece(lo=0.0, hi=1.0),))
    assert m.interval_mass(IntervalQuery.from_point(2.0)) == 0.0
    assert m.interval_mass(IntervalQuery.upto(-1.0)) == 0.0
