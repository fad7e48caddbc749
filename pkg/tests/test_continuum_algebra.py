import numpy as np
import pytest

from basic_groupoid.chart_generator import generate_continuum_chart
from basic_groupoid.continuum_algebra import (
    check_monotone_grid,
    check_monotone_on_points,
    double_negation_error,
    find_oplus_nonassociativity,
    multiply,
    negation,
    oplus,
    ua_eval,
    unit_grid,
    witness_no_right_residuum,
)
from basic_groupoid.errors import ContinuumDomainError


def test_scalar_operations():
    assert ua_eval("mult", 0.6, 1) == pytest.approx(0.6)
    assert ua_eval("mult", 0.6, 0.5) == 0.0
    assert ua_eval("neg", 0) == 1.0
    assert ua_eval("neg", 1) == 0.0
    assert ua_eval("neg", 0.6) == pytest.approx(0.8)


def test_product_below_one_subtracts_negation():
    assert ua_eval("mult", 0.8, 0.9) == pytest.approx(0.3)


def test_zero_and_one_behave_as_constants():
    grid = unit_grid(0.1)
    assert np.allclose(oplus(grid, 0.0), grid)
    assert np.allclose(oplus(grid, 1.0), 1.0)
    assert np.allclose(multiply(grid, 1.0), grid)


@pytest.mark.parametrize(
    "arguments",
    [("mult", 0.5), ("neg", 0.2, 0.3), ("pow", 0.5, 0.5), ("neg", 1.5), ("mult", -0.1, 0.5)],
)
def test_invalid_scalar_calls(arguments):
    with pytest.raises(ContinuumDomainError):
        ua_eval(*arguments)


def test_unit_grid_contains_endpoints():
    grid = unit_grid(0.1)
    assert grid.size == 11
    assert grid[0] == 0.0
    assert grid[-1] == 1.0


@pytest.mark.parametrize("step", [0.0, 1.0, -0.5])
def test_unit_grid_rejects_bad_steps(step):
    with pytest.raises(ContinuumDomainError):
        unit_grid(step)


@pytest.mark.parametrize("step", [0.1, 0.01])
def test_multiplication_is_monotone_on_grid(step):
    report = check_monotone_grid(step)
    assert report.holds
    assert report.grid_points == int(round(1 / step)) + 1


def test_monotone_check_counts_triples():
    report = check_monotone_on_points([0.0, 0.5, 1.0])
    assert report.triples_checked == 18
    assert report.holds


def test_monotone_check_rejects_points_outside_unit_interval():
    with pytest.raises(ContinuumDomainError):
        check_monotone_on_points([0.0, 1.2])


def test_double_negation_is_numerically_exact():
    assert double_negation_error(0.01) < 1e-9


@pytest.mark.parametrize("x, y", [(0.6, 0.2), (0.8, 0.4)])
def test_right_residuum_witness(x, y):
    witness = witness_no_right_residuum(x)
    assert witness.y == pytest.approx(y)
    assert witness.product_at_one == pytest.approx(x)
    assert witness.largest_sampled_product < witness.y
    assert witness.is_valid


@pytest.mark.parametrize("x", [0.0, 1.0, 1.5])
def test_witness_needs_interior_point(x):
    with pytest.raises(ContinuumDomainError):
        witness_no_right_residuum(x)


def test_sum_is_not_associative():
    x, y, z, left, right = find_oplus_nonassociativity(0.1)
    assert (x, y, z) == pytest.approx((0.1, 0.1, 0.1))
    assert left == pytest.approx(0.8359, abs=1e-3)
    assert right == pytest.approx(0.6066, abs=1e-3)


def test_negation_is_involutive_array():
    grid = unit_grid(0.05)
    assert np.allclose(negation(negation(grid)), grid)


def test_chart_is_written(tmp_path):
    chart_file = generate_continuum_chart(tmp_path / "charts" / "continuum.png", step=0.05)
    assert chart_file.exists()
    assert chart_file.stat().st_size > 0
