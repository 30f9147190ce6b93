from fractions import Fraction
from math import comb

from hypothesis import given, settings, strategies as st
import numpy as np
import pytest

from EquivRand.binomkernel import pmf_values, sf_values
from EquivRand.errors import InputDomainError
from EquivRand.harness import exact_rand2_cdf_oracle, exact_ump_cdf_oracle
from EquivRand.pvalues import (constants, draw_pvalue, draw_pvalue_seeded, one_sided_pvalue_arrays,
                               one_sided_pvalues, rand2_cdf, rand2_pvalue, ump_cdf, ump_pvalue)
from EquivRand.types import EquivProblem, PValueDraw

T_GRID = np.round(np.arange(1, 100) / 100.0, 12)


def rational_one_sided(n, theta1, theta2, s, u):
    def mass(theta, x):
        theta = Fraction(theta)
        return comb(n, x) * theta ** x * (1 - theta) ** (n - x)
    u = Fraction(u)
    p_upper = sum(mass(theta1, x) for x in range(s + 1, n + 1)) + u * mass(theta1, s)
    p_lower = sum(mass(theta2, x) for x in range(s)) + u * mass(theta2, s)
    return float(p_lower), float(p_upper)


def test_one_sided_pvalues_single_trial():
    problem = EquivProblem(1, 0.25, 0.75)
    p_lower, p_upper = one_sided_pvalues(problem, 1, 0.5)
    assert p_upper == pytest.approx(0.125, abs=1e-15)
    assert p_lower == pytest.approx(0.625, abs=1e-15)
    assert one_sided_pvalues(problem, 0, 0.0)[0] == 0.0
    assert ump_pvalue(problem, 1, 0.5) == pytest.approx(0.625, abs=1e-15)


def test_one_sided_pvalues_match_rational_arithmetic(problem):
    for s, u in ((25, 0.3), (10, 0.9), (40, 0.05)):
        expected = rational_one_sided(50, 0.25, 0.75, s, u)
        assert one_sided_pvalues(problem, s, u) == pytest.approx(expected, rel=1e-12)


def test_one_sided_pvalues_reject_bad_input(problem):
    with pytest.raises(InputDomainError):
        one_sided_pvalues(problem, 51, 0.5)
    with pytest.raises(InputDomainError):
        one_sided_pvalues(problem, -1, 0.5)
    with pytest.raises(InputDomainError):
        one_sided_pvalues(problem, 3, 1.5)
    with pytest.raises(InputDomainError):
        one_sided_pvalues(problem, 2.5, 0.5)


def test_ump_pvalue_is_the_larger_one_sided_pvalue():
    for n in range(1, 21):
        problem = EquivProblem(n, 0.3, 0.7)
        for s in range(n + 1):
            for u in np.linspace(0.0, 1.0, 11):
                assert ump_pvalue(problem, s, u) == max(one_sided_pvalues(problem, s, u))


def test_array_form_agrees_with_scalar_form(problem):
    s = np.arange(51)
    u = np.linspace(0.0, 1.0, 51)
    p_lower, p_upper = one_sided_pvalue_arrays(50, 0.25, 0.75, s, u)
    for i in (0, 12, 25, 37, 50):
        expected = one_sided_pvalues(problem, int(s[i]), float(u[i]))
        assert (p_lower[i], p_upper[i]) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("p_ump, u_tilde, c, expected", [
    (0.2, 0.9, 0.5, 0.4),
    (0.7, 0.31, 0.5, 0.31),
    (0.7, 0.31, 1.0, 0.7),
    (0.7, 0.31, 0.0, 0.31),
    (0.5, 0.12, 0.5, 0.12),
])
def test_rand2_pvalue_branches(p_ump, u_tilde, c, expected):
    assert rand2_pvalue(p_ump, u_tilde, c) == pytest.approx(expected, abs=1e-15)


def test_rand2_pvalue_arrays_and_validation():
    result = rand2_pvalue(np.array([0.1, 0.6]), np.array([0.3, 0.4]), 0.5)
    assert np.allclose(result, [0.2, 0.4])
    with pytest.raises(InputDomainError):
        rand2_pvalue(0.5, 0.5, 1.5)
    with pytest.raises(InputDomainError):
        rand2_pvalue(-0.1, 0.5, 0.5)


def test_draw_pvalue_records_everything():
    draw = draw_pvalue(EquivProblem(1, 0.25, 0.75), 1, 0.5, 0.9, 0.5)
    assert draw.p_ump == pytest.approx(0.625)
    assert draw.p_rand2 == pytest.approx(0.9)
    assert draw.as_dict()["s"] == 1


def test_draw_pvalue_seeded_is_reproducible(problem):
    first = draw_pvalue_seeded(problem, 20, 7, 0.5)
    assert first == draw_pvalue_seeded(problem, 20, 7, 0.5)
    assert first.u != draw_pvalue_seeded(problem, 20, 8, 0.5).u


def test_constants_single_trial():
    bundle = constants(EquivProblem(1, 0.25, 0.75), 0.05)
    assert (bundle.c_n, bundle.d_n) == (1, 0)
    assert bundle.gamma_n == pytest.approx(0.2)
    assert bundle.delta_n == pytest.approx(0.2)
    assert constants(EquivProblem(1, 0.25, 0.75), 0.999).c_n == 0


def test_constants_in_range_at_n50(problem):
    bundle = constants(problem, 0.05)
    assert 0.0 <= bundle.gamma_n <= 1.0
    assert 0.0 <= bundle.delta_n <= 1.0
    assert not bundle.clamped
    assert bundle.c_n < bundle.d_n


@pytest.mark.parametrize("level", [0.0, 1.0, -0.2])
def test_constants_reject_levels(problem, level):
    with pytest.raises(InputDomainError):
        constants(problem, level)


def test_cdf_boundaries(problem):
    assert ump_cdf(problem, 0.4, 1.0) == 1.0
    assert ump_cdf(problem, 0.4, 0.0) == 0.0
    assert rand2_cdf(problem, 0.4, 1.0, 0.5) == 1.0
    assert rand2_cdf(problem, 0.4, 0.37, 0.0) == pytest.approx(0.37)
    with pytest.raises(InputDomainError):
        ump_cdf(problem, 1.0, 0.5)
    with pytest.raises(InputDomainError):
        ump_cdf(problem, 0.5, 1.2)


def test_single_trial_cdf_by_hand():
    problem = EquivProblem(1, 0.25, 0.75)
    assert ump_cdf(problem, 0.5, 0.625) == pytest.approx(0.5, abs=1e-15)
    assert exact_ump_cdf_oracle(problem, 0.5, 0.625) == pytest.approx(0.5, abs=1e-15)
    # C_n > D_n at t = 0.05, no outcome rejects
    assert ump_cdf(problem, 0.5, 0.05) == 0.0


def test_ump_cdf_matches_enumeration_at_n8():
    problem = EquivProblem(8, 0.25, 0.75)
    assert ump_cdf(problem, 0.5, 0.3) == pytest.approx(exact_ump_cdf_oracle(problem, 0.5, 0.3), abs=1e-10)


def test_cdfs_accept_level_arrays(problem):
    values = ump_cdf(problem, 0.5, T_GRID)
    assert values.shape == T_GRID.shape
    assert np.all(np.diff(values) >= -1e-12)
    assert values[4] == pytest.approx(ump_cdf(problem, 0.5, float(T_GRID[4])))


@pytest.mark.parametrize("n", [3, 8, 12])
@pytest.mark.parametrize("theta", [0.2, 0.5, 0.7])
def test_c_equal_one_reduces_to_ump(n, theta):
    problem = EquivProblem(n, 0.3, 0.75)
    assert np.array_equal(rand2_cdf(problem, theta, T_GRID, 1.0), ump_cdf(problem, theta, T_GRID))


@pytest.mark.parametrize("n", [1, 2, 5, 9, 12])
@pytest.mark.parametrize("bounds", [(0.25, 0.75), (0.3, 0.75), (0.15, 0.45)])
def test_rand2_cdf_matches_enumeration(n, bounds):
    problem = EquivProblem(n, *bounds)
    for theta in (0.1, 0.35, 0.6):
        for c in (0.25, 0.5):
            analytic = rand2_cdf(problem, theta, T_GRID[::7], c)
            exact = [exact_rand2_cdf_oracle(problem, theta, t, c) for t in T_GRID[::7]]
            assert np.allclose(analytic, exact, rtol=0, atol=1e-10)


def test_rand2_cdf_against_monte_carlo():
    problem = EquivProblem(8, 0.25, 0.75)
    rng = np.random.default_rng(20200512)
    size = 10 ** 6
    x = rng.binomial(8, 0.5, size)
    u, u_tilde = rng.random(size), rng.random(size)
    p_lower, p_upper = one_sided_pvalue_arrays(8, 0.25, 0.75, x, u)
    p_rand2 = rand2_pvalue(np.maximum(p_lower, p_upper), u_tilde, 0.5)
    expected = rand2_cdf(problem, 0.5, 0.3, 0.5)
    observed = np.mean(p_rand2 <= 0.3)
    assert abs(observed - expected) <= 3 * np.sqrt(expected * (1 - expected) / size)


@pytest.mark.parametrize("n", [50, 100])
@pytest.mark.parametrize("side", [0, 1])
def test_validity_at_least_favourable_configuration(n, side):
    problem = EquivProblem(n, 0.25, 0.75)
    theta = (problem.theta1, problem.theta2)[side]
    assert np.all(ump_cdf(problem, theta, T_GRID) <= T_GRID + 1e-9)
    assert np.all(rand2_cdf(problem, theta, T_GRID, 0.5) <= T_GRID + 1e-9)


@settings(deadline=None, max_examples=80)
@given(st.integers(1, 40), st.data(), st.floats(0.0, 1.0))
def test_shared_randomizer_identity(n, data, u):
    problem = EquivProblem(n, 0.2, 0.6)
    s = data.draw(st.integers(0, n))
    p_lower, p_upper = one_sided_pvalues(problem, s, u)
    assert ump_pvalue(problem, s, u) == max(p_lower, p_upper)
    assert 0.0 <= p_lower <= 1.0 and 0.0 <= p_upper <= 1.0


@pytest.mark.parametrize("n", [1, 4, 12])
def test_upper_pvalue_is_uniform_at_its_boundary(n):
    x = np.arange(n + 1)
    tail = sf_values(x, n, 0.3)
    mass = pmf_values(x, n, 0.3)
    for t in T_GRID[::9]:
        measure = np.clip((t - tail) / mass, 0.0, 1.0)
        assert np.sum(mass * measure) == pytest.approx(t, abs=1e-12)


@pytest.mark.parametrize("theta", [0.4, 0.5, 0.6])
def test_ump_is_more_powerful_than_rand2(problem, theta):
    assert np.all(ump_cdf(problem, theta, T_GRID) >= rand2_cdf(problem, theta, T_GRID, 0.5) - 1e-12)


def test_draw_record_checks_its_pvalues():
    with pytest.raises(InputDomainError):
        PValueDraw(s=1, u=0.5, u_tilde=0.9, c=0.5, p_lower=0.625, p_upper=0.125, p_ump=0.125, p_rand2=0.9)
    with pytest.raises(InputDomainError):
        PValueDraw(s=1, u=1.5, u_tilde=0.9, c=0.5, p_lower=0.625, p_upper=0.125, p_ump=0.625, p_rand2=0.9)
