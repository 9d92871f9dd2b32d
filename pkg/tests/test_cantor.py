import math

import numpy as np
import pytest

from hardybounds.cantor import (
    cantor_cdf,
    cantor_cdf_array,
    cantor_inverse_cdf,
    extended_tail_table,
    integrate_extended,
    integrate_unit,
    level_m_atoms,
    weak_convergence_check,
)


def test_cdf_known_values():
    # the staircase is exactly 1/2 on the middle-thirds gap
    assert cantor_cdf(1.0 / 3.0) == pytest.approx(0.5, abs=1e-9)
    assert cantor_cdf(0.5) == pytest.approx(0.5, abs=1e-12)
    assert cantor_cdf(2.0 / 3.0) == pytest.approx(0.5, abs=1e-9)
    assert cantor_cdf(1.0 / 9.0) == pytest.approx(0.25, abs=1e-9)
    assert cantor_cdf(0.0) == 0.0
    assert cantor_cdf(1.0) == 1.0


def test_cdf_integer_translates():
    assert cantor_cdf(2.5) == 2.5
    assert cantor_cdf(7.0) == 7.0
    x = 3.0 + 1.0 / 9.0
    assert cantor_cdf(x) == pytest.approx(3.25, abs=1e-9)


def test_cdf_domain_and_infinity():
    with pytest.raises(ValueError):
        cantor_cdf(-0.1)
    assert math.isinf(cantor_cdf(math.inf))


def test_cdf_monotone():
    rng = np.random.default_rng(7)
    xs = np.sort(rng.uniform(0.0, 3.0, size=200))
    vals = [cantor_cdf(float(x)) for x in xs]
    assert all(b >= a for a, b in zip(vals, vals[1:]))


def test_cdf_array_matches_scalar():
    rng = np.random.default_rng(11)
    xs = rng.uniform(0.0, 2.0, size=100)
    arr = cantor_cdf_array(xs)
    for x, v in zip(xs, arr):
        assert v == pytest.approx(cantor_cdf(float(x)), abs=1e-9)


def test_cdf_array_small_arguments():
    # self-similar rescaling keeps relative accuracy for tiny inputs
    for m in (5, 20, 40):
        x = 3.0**-m
        assert cantor_cdf_array(np.array([x]))[0] == pytest.approx(2.0**-m, rel=1e-9)


def test_inverse_cdf():
    assert cantor_inverse_cdf(0.5) == pytest.approx(1.0 / 3.0, abs=1e-9)
    assert cantor_inverse_cdf(0.25) == pytest.approx(1.0 / 9.0, abs=1e-9)
    # y = 2.5 is first attained at the left edge of the central gap of 2 + K
    assert cantor_inverse_cdf(2.5) == pytest.approx(2.0 + 1.0 / 3.0, abs=1e-9)
    with pytest.raises(ValueError):
        cantor_inverse_cdf(0.0)


def test_inverse_cdf_relations():
    rng = np.random.default_rng(3)
    for y in rng.uniform(0.01, 3.0, size=50):
        x = cantor_inverse_cdf(float(y))
        assert cantor_cdf(x) >= y - 1e-9


def test_level_atoms():
    approx = level_m_atoms(1)
    assert approx.weight == 0.25
    assert np.allclose(approx.points, [0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0])
    assert approx.total_mass() == pytest.approx(1.0)
    assert approx.cdf(0.5) == pytest.approx(0.5)


def test_level_atoms_translates():
    approx = level_m_atoms(2, range(0, 3))
    assert approx.total_mass() == pytest.approx(3.0)
    assert approx.cdf(1.5) == pytest.approx(1.5)


def test_weak_convergence_moment():
    # second moment of the Bernoulli measure is 3/8
    vals = weak_convergence_check(lambda x: x**2, 12)
    assert vals[-1] == pytest.approx(3.0 / 8.0, abs=1e-6)
    diffs = [abs(v - 3.0 / 8.0) for v in vals]
    assert diffs[-1] < diffs[0]


def test_integrate_unit_mass_and_bands():
    assert integrate_unit(lambda x: np.ones_like(x), 0.0, 1.0, 10) == pytest.approx(1.0)
    # each half of the set carries mass 1/2
    assert integrate_unit(lambda x: np.ones_like(x), 0.0, 0.5, 10) == pytest.approx(0.5)
    left = integrate_unit(lambda x: x, 0.0, 0.5, 12)
    right = integrate_unit(lambda x: x, 0.5, 1.0, 12)
    assert left + right == pytest.approx(0.5, abs=1e-9)  # mean is 1/2 by symmetry


def test_integrate_extended_finite():
    val, res = integrate_extended(lambda x: np.ones_like(x), 0.0, 2.0, 10)
    assert val == pytest.approx(2.0)
    assert res == 0.0


def test_integrate_extended_infinite_tail():
    # integral of (1 + t)^-2 against the extended measure is finite
    val, res = integrate_extended(lambda x: (1.0 + x) ** -2.0, 0.0, math.inf, 10, tol=1e-6)
    assert math.isfinite(val)
    # bracket by the per-translate extremes: sum (2+k)^-2 <= val <= sum (1+k)^-2
    assert math.pi**2 / 6.0 - 1.25 < val < math.pi**2 / 6.0
    assert res <= 1e-5


def test_tail_table_consistency():
    table = extended_tail_table(lambda x: (1.0 + x) ** -2.0, 10, tol=1e-7)
    assert not table.divergent
    # suffix sums agree with the recurrence tail(n) = c_n + tail(n+1)
    for n in (0, 1, 5):
        assert table.tail_from(n) == pytest.approx(
            table.contribs[n] + table.tail_from(n + 1), rel=1e-12
        )
    # far queries fall back on the fitted model and keep decreasing
    assert table.tail_from(10_000) < table.tail_from(1_000) < table.tail_from(100)


def test_tail_table_divergent_weight():
    table = extended_tail_table(lambda x: np.ones_like(np.asarray(x, dtype=float)), 8, tol=1e-6)
    assert table.divergent
    assert math.isinf(table.tail_from(5))
