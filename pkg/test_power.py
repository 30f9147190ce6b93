import numpy as np
import pytest

from EquivRand.errors import ConfigurationError, InputDomainError
from EquivRand.power import (CENTERING_RULES, argmax_power_theta, cdf_curve, detect_nonmonotone, power_vs_delta,
                             power_vs_n, register_centering_rule, theta_grid)
from EquivRand.types import CurveSeries, EquivProblem, MaxPowerResult
from EquivRand.types.MaxPowerResult import RAND2, UMP

T_GRID = np.round(np.arange(1, 100) / 100.0, 12)


def test_power_grows_with_n_at_the_midpoint():
    series = power_vs_n(0.25, 0.75, 0.5, c=0.5, level_t=0.05, n_range=range(20, 501))
    assert len(series) == 481
    assert detect_nonmonotone(series) == {"UMP": [], "RAND2": []}


def test_power_is_not_monotone_off_the_midpoint():
    series = power_vs_n(0.25, 0.75, 0.4, c=0.5, level_t=0.05, n_range=range(1, 301))
    drops = detect_nonmonotone(series)
    assert [n for n, _ in drops["UMP"]] == [7, 9, 11, 13]
    assert drops["RAND2"]
    assert all(drop > 0 for _, drop in drops["UMP"] + drops["RAND2"])


def test_narrower_lower_margin_has_fewer_drops():
    wide = detect_nonmonotone(power_vs_n(0.25, 0.75, 0.4, n_range=range(1, 301)))
    narrow = detect_nonmonotone(power_vs_n(0.35, 0.75, 0.4, n_range=range(1, 301)))
    assert 0 < len(narrow["UMP"]) < len(wide["UMP"])


def test_power_is_symmetric_for_a_symmetric_problem():
    left = power_vs_n(0.25, 0.75, 0.4, n_range=range(20, 61))
    right = power_vs_n(0.25, 0.75, 0.6, n_range=range(20, 61))
    assert np.allclose(left.ump_values, right.ump_values, rtol=0, atol=1e-9)
    assert np.allclose(left.rand2_values, right.rand2_values, rtol=0, atol=1e-9)


def test_power_vs_n_workers_do_not_change_values():
    serial = power_vs_n(0.25, 0.75, 0.4, n_range=range(20, 41))
    threaded = power_vs_n(0.25, 0.75, 0.4, n_range=range(20, 41), workers=3)
    assert serial == threaded


def test_power_vs_n_needs_an_alternative():
    with pytest.raises(InputDomainError):
        power_vs_n(0.25, 0.75, 0.8)
    with pytest.raises(InputDomainError):
        power_vs_n(0.25, 0.75, 0.5, n_range=[])


def test_detect_nonmonotone_ignores_ties():
    flat = CurveSeries([1, 2, 3], [0.2, 0.2, 0.2], [0.1, 0.3, 0.3])
    assert detect_nonmonotone(flat) == {"UMP": [], "RAND2": []}
    bumpy = CurveSeries([1, 2, 3], [0.2, 0.1, 0.3], [0.1, 0.3, 0.3])
    found = detect_nonmonotone(bumpy)
    assert [x for x, _ in found["UMP"]] == [2]
    assert found["UMP"][0][1] == pytest.approx(0.1)


def test_null_cdfs_are_conservative(problem):
    series = cdf_curve(problem, 0.2, 0.5, T_GRID)
    ump, rand2 = np.array(series.ump_values), np.array(series.rand2_values)
    assert np.all(ump <= T_GRID + 1e-12)
    assert np.all(rand2 <= T_GRID + 1e-12)
    assert np.all(rand2 >= ump - 1e-12)
    assert all(series.null_side)


def test_conservativeness_with_growing_n():
    small = cdf_curve(EquivProblem(50, 0.25, 0.75), 0.2, 0.5, T_GRID)
    large = cdf_curve(EquivProblem(100, 0.25, 0.75), 0.2, 0.5, T_GRID)

    def gap(values):
        return float(np.max(T_GRID - np.array(values)))

    assert gap(large.ump_values) > gap(small.ump_values)
    assert gap(large.rand2_values) < gap(small.rand2_values)


def test_cdf_curve_single_point(problem):
    series = cdf_curve(problem, 0.6, 0.5, [0.5])
    assert len(series) == 1
    assert 0.0 <= series.ump_values[0] <= 1.0
    assert series.null_side == (False,)
    assert list(series.to_frame().columns) == ["x", "ump", "rand2", "null_side"]


def test_theta_grid_is_interior():
    grid = theta_grid(EquivProblem(50, 0.15, 0.45), 0.005)
    assert grid[0] == pytest.approx(0.155)
    assert grid[-1] < 0.45
    with pytest.raises(InputDomainError):
        theta_grid(EquivProblem(50, 0.15, 0.45), 0.5)


def test_max_power_at_the_midpoint_of_a_symmetric_problem(problem):
    ump, rand2 = argmax_power_theta(problem, c=0.5, level_t=0.05, grid_step=0.005)
    assert isinstance(ump, MaxPowerResult)
    assert ump.method_tag == UMP
    assert rand2.method_tag == RAND2
    assert ump.argmax_theta == pytest.approx(0.5, abs=0.005 + 1e-9)
    assert 0.0 < rand2.max_power <= 1.0


def test_max_power_near_the_midpoint():
    ump, _ = argmax_power_theta(EquivProblem(50, 0.15, 0.45), c=0.5, level_t=0.05, grid_step=0.005)
    assert ump.argmax_theta == pytest.approx(0.30, abs=0.02)


def test_max_power_is_stable_under_threads():
    problem = EquivProblem(50, 0.25, 0.45)
    assert argmax_power_theta(problem, workers=1) == argmax_power_theta(problem, workers=4)


def test_power_vs_delta_flags_null_widths():
    series = power_vs_delta(0.2, c=0.5, level_t=0.05, delta_grid=[0.2, 0.4, 0.8], centering="symmetric", n=50)
    assert series.null_side == (True, True, False)
    assert series.metadata["centering"] == "symmetric"
    assert series.ump_values[0] < 0.05


@pytest.mark.parametrize("centering", ["centered", "proportional"])
def test_power_vs_delta_rules_containing_theta(centering):
    series = power_vs_delta(0.3, delta_grid=[0.3, 0.4, 0.5], centering=centering, n=50)
    assert series.null_side == (False, False, False)
    assert np.all(np.diff(series.ump_values) >= -1e-12)
    assert series.ump_values[-1] > series.ump_values[0]


def test_power_vs_delta_single_point():
    series = power_vs_delta(0.5, delta_grid=[0.5])
    assert len(series) == 1


def test_power_vs_delta_errors():
    with pytest.raises(ConfigurationError):
        power_vs_delta(0.2, delta_grid=[0.2], centering="no-such-rule")
    with pytest.raises(InputDomainError):
        power_vs_delta(0.2, delta_grid=[0.5], centering="centered")


def test_register_centering_rule():
    register_centering_rule("left", lambda theta, delta: (theta - delta, theta + 0.01))
    try:
        series = power_vs_delta(0.5, delta_grid=[0.1, 0.2], centering="left")
        assert series.null_side == (False, False)
    finally:
        CENTERING_RULES.pop("left")


def test_halving_the_grid_step_keeps_the_argmax():
    problem = EquivProblem(50, 0.25, 0.45)
    coarse = argmax_power_theta(problem, grid_step=0.01)
    fine = argmax_power_theta(problem, grid_step=0.005)
    for before, after in zip(coarse, fine):
        assert abs(before.argmax_theta - after.argmax_theta) <= 0.01 + 1e-9
        assert after.max_power >= before.max_power - 1e-12


def test_max_power_result_stays_inside_the_bounds():
    for result in argmax_power_theta(EquivProblem(30, 0.25, 0.45), grid_step=0.05):
        assert result.theta1 < result.argmax_theta < result.theta2
    with pytest.raises(InputDomainError):
        MaxPowerResult(argmax_theta=0.5, max_power=0.3, grid_step=0.01, method_tag=UMP, theta1=0.15, theta2=0.45)
    with pytest.raises(InputDomainError):
        MaxPowerResult(argmax_theta=0.3, max_power=0.3, grid_step=0.01, method_tag="other")
