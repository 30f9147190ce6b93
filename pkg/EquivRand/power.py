""" Power and conservativity curves

Power of a p-value at level t is its CDF at t under an alternative theta;
the same CDFs under a null theta measure conservativity. Grid points are
independent, so every curve can be evaluated on a thread pool; values are
always assembled in input order.
"""
import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import settings
from .errors import ConfigurationError, InputDomainError
from .pvalues import rand2_cdf, ump_cdf
from .types import CurveSeries, EquivProblem, MaxPowerResult
from .types.MaxPowerResult import RAND2, UMP

logger = logging.getLogger(__name__)

NONMONOTONE_TOLERANCE = 1e-12


def _evaluate(fn, items, workers):
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def _both_cdfs(problem, theta, t, c):
    return ump_cdf(problem, theta, t), rand2_cdf(problem, theta, t, c)


def power_vs_n(theta1, theta2, theta, c=settings.DEFAULT_C, level_t=settings.DEFAULT_LEVEL,
               n_range=range(20, 201), workers=1):
    """ Power of both p-values at a fixed alternative over a range of sample sizes

    Args:
        theta1 (float): lower bound
        theta2 (float): upper bound
        theta (float): alternative in (theta1, theta2)
        c (float): second-stage tuning constant
        level_t (float): level
        n_range (iterable): increasing sample sizes

    Returns:
        CurveSeries with x = n
    """
    sizes = [int(n) for n in n_range]
    if not sizes:
        raise InputDomainError("n_range is empty")
    template = EquivProblem(sizes[0], theta1, theta2)
    if not template.contains(theta):
        raise InputDomainError("theta=%r is not an alternative in (%r, %r)" % (theta, theta1, theta2))
    values = _evaluate(lambda n: _both_cdfs(template.with_n(n), theta, level_t, c), sizes, workers)
    logger.debug("power at theta=%g over n=%d..%d", theta, sizes[0], sizes[-1])
    return CurveSeries(sizes, [v[0] for v in values], [v[1] for v in values],
                       metadata={"theta1": theta1, "theta2": theta2, "theta": theta, "c": c, "level": level_t})


def detect_nonmonotone(series):
    """ Points where a curve drops by more than 1e-12

    Returns:
        dict mapping ``UMP`` / ``RAND2`` to lists of (x, drop) with x the point after the drop
    """
    found = {}
    for method, values in ((UMP, series.ump_values), (RAND2, series.rand2_values)):
        values = np.asarray(values, dtype=float)
        drops = values[:-1] - values[1:]
        found[method] = [(series.x_values[i + 1], float(drops[i]))
                         for i in np.flatnonzero(drops > NONMONOTONE_TOLERANCE)]
    return found


def cdf_curve(problem, theta, c, t_grid):
    """ UMP and RAND2 CDFs over a grid of levels """
    grid = np.asarray(t_grid, dtype=float)
    return CurveSeries(grid.tolist(), np.atleast_1d(ump_cdf(problem, theta, grid)).tolist(),
                       np.atleast_1d(rand2_cdf(problem, theta, grid, c)).tolist(),
                       metadata={"n": problem.n, "theta1": problem.theta1, "theta2": problem.theta2,
                                 "theta": theta, "c": c},
                       null_side=[not problem.contains(theta)] * grid.size)


def theta_grid(problem, grid_step):
    if not 0.0 < grid_step < problem.delta:
        raise InputDomainError("grid_step must lie in (0, %g) to leave a non-empty grid" % problem.delta)
    steps = int(np.floor((problem.delta - 1e-12) / grid_step))
    if steps < 1:
        raise InputDomainError("grid_step %g leaves no point inside (%g, %g)" % (grid_step, problem.theta1,
                                                                                 problem.theta2))
    return problem.theta1 + grid_step * np.arange(1, steps + 1)


def argmax_power_theta(problem, c=settings.DEFAULT_C, level_t=settings.DEFAULT_LEVEL, grid_step=0.005, workers=1):
    """ Grid search of the alternative with the largest power

    Ties go to the smallest theta.

    Returns:
        (MaxPowerResult for UMP, MaxPowerResult for RAND2)
    """
    grid = theta_grid(problem, grid_step)
    values = np.array(_evaluate(lambda theta: _both_cdfs(problem, theta, level_t, c), grid.tolist(), workers))
    results = []
    for column, tag in ((0, UMP), (1, RAND2)):
        best = int(np.argmax(values[:, column]))
        results.append(MaxPowerResult(argmax_theta=float(grid[best]), max_power=float(values[best, column]),
                                      grid_step=grid_step, method_tag=tag, theta1=problem.theta1,
                                      theta2=problem.theta2))
    return tuple(results)


def _symmetric(theta, delta):
    return (1.0 - delta) / 2.0, (1.0 + delta) / 2.0


def _centered(theta, delta):
    return theta - delta / 2.0, theta + delta / 2.0


def _proportional(theta, delta):
    return theta * (1.0 - delta), theta + (1.0 - theta) * delta


CENTERING_RULES = {
    "symmetric": _symmetric,
    "centered": _centered,
    "proportional": _proportional,
}


def register_centering_rule(name, rule):
    """ Add a rule mapping (theta, delta) to (theta1, theta2) """
    CENTERING_RULES[name] = rule


def power_vs_delta(theta, c=settings.DEFAULT_C, level_t=settings.DEFAULT_LEVEL, delta_grid=(0.5,),
                   centering="symmetric", n=50, workers=1):
    """ Power against the equivalence limit

    Bounds for each width come from a named centering rule. Widths whose
    interval does not contain theta are kept and flagged as null side.

    Raises:
        ConfigurationError: unknown centering rule
        InputDomainError: a width yields bounds outside (0, 1)
    """
    try:
        rule = CENTERING_RULES[centering]
    except KeyError:
        raise ConfigurationError("unknown centering rule '%s', known: %s"
                                 % (centering, ", ".join(sorted(CENTERING_RULES))))
    problems = []
    for delta in delta_grid:
        theta1, theta2 = rule(theta, float(delta))
        if not 0.0 < theta1 < theta2 < 1.0:
            raise InputDomainError("width %r gives bounds (%r, %r) under rule '%s'" % (delta, theta1, theta2, centering))
        problems.append(EquivProblem(n, theta1, theta2))
    values = _evaluate(lambda problem: _both_cdfs(problem, theta, level_t, c), problems, workers)
    return CurveSeries([float(d) for d in delta_grid], [v[0] for v in values], [v[1] for v in values],
                       metadata={"theta": theta, "c": c, "level": level_t, "n": n, "centering": centering},
                       null_side=[not problem.contains(theta) for problem in problems])
