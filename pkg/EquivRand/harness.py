""" Random streams, replicate simulation and exact enumeration oracles

Every uniform used in a simulation is a function of (seed, replicate id,
hypothesis id, draw index) only. The stream key comes from the seed, and the
replicate and hypothesis ids are written into separate words of the Philox
counter, so any subset of replicates can be regenerated alone and in any order.

Each hypothesis of a replicate consumes exactly three draws of its stream:
the first is mapped to the binomial observation by inverse transform, the
second is U, the third is U-tilde.
"""
import functools
import logging

import numpy as np

from . import settings
from .binomkernel import cdf_values, pmf_values, sf_values
from .errors import InputDomainError, OracleGuardError
from .pvalues import one_sided_pvalue_arrays, rand2_pvalue
from .types import HypothesisConfig, HypothesisFamily

logger = logging.getLogger(__name__)

DRAWS_PER_HYPOTHESIS = 3
_UINT64_LIMIT = 2 ** 64

# (theta1, theta2, k0, reported mean UMP estimate, reported mean RAND2 estimate)
COVID_TABLE_BOUNDS = (
    (0.4791, 0.5413, 45, 90.0050, 44.3586),
    (0.4509, 0.5681, 43, 86.0006, 43.1554),
    (0.4444, 0.5946, 40, 80.0034, 39.4800),
    (0.4066, 0.6800, 34, 67.9996, 33.5392),
    (0.3389, 0.7219, 31, 60.0002, 33.7460),
    (0.3188, 0.7478, 29, 55.9958, 28.2846),
    (0.3076, 0.7566, 28, 55.9958, 28.6418),
    (0.2963, 0.9029, 16, 32.0070, 15.2562),
    (0.2725, 0.9319, 12, 26.0192, 12.9908),
    (0.2456, 0.9399, 12, 24.6468, 13.9496),
)


@functools.lru_cache(maxsize=64)
def _philox_key(seed):
    key = np.random.SeedSequence(seed).generate_state(2, dtype=np.uint64)
    key.setflags(write=False)
    return key


def _check_id(name, value):
    if not 0 <= int(value) < _UINT64_LIMIT:
        raise InputDomainError("%s must be a 64-bit unsigned integer, got %r" % (name, value))
    return int(value)


def rng_stream(seed, replicate_id, hypothesis_id):
    """ Counter-based uniform stream for one hypothesis of one replicate

    Args:
        seed (int): run seed
        replicate_id (int): replicate index
        hypothesis_id (int): hypothesis index within the family

    Returns:
        numpy.random.Generator positioned at draw 0 of the stream
    """
    seed = _check_id("seed", seed)
    counter = np.array([0, _check_id("replicate_id", replicate_id),
                        _check_id("hypothesis_id", hypothesis_id), 0], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(counter=counter, key=_philox_key(seed)))


@functools.lru_cache(maxsize=16)
def sampling_tables(family):
    """CDF table of Bin(n_i, theta_true_i) over 0..n_i for every hypothesis"""
    return tuple(cdf_values(np.arange(cfg.n + 1), cfg.n, cfg.theta_true) for cfg in family.configs)


def stream_draws(seed, replicate_ids, k):
    draws = np.empty((len(replicate_ids), k, DRAWS_PER_HYPOTHESIS))
    for row, replicate_id in enumerate(replicate_ids):
        for hypothesis_id in range(k):
            draws[row, hypothesis_id] = rng_stream(seed, replicate_id, hypothesis_id).random(DRAWS_PER_HYPOTHESIS)
    return draws


def simulate_block(family, spec, replicate_ids):
    """ Simulate several replicates of a family at once

    Returns:
        dict with ``x`` (observations), ``UMP`` and ``RAND2`` arrays of shape (replicates, k)
    """
    replicate_ids = [int(r) for r in replicate_ids]
    draws = stream_draws(spec.seed, replicate_ids, family.k)
    x = np.empty((len(replicate_ids), family.k), dtype=np.int64)
    for hypothesis_id, table in enumerate(sampling_tables(family)):
        index = np.searchsorted(table, draws[:, hypothesis_id, 0], side="left")
        x[:, hypothesis_id] = np.minimum(index, len(table) - 1)
    p_lower, p_upper = one_sided_pvalue_arrays(family.column("n", np.int64), family.column("theta1"),
                                               family.column("theta2"), x, draws[:, :, 1])
    p_ump = np.maximum(p_lower, p_upper)
    return {"x": x, "UMP": p_ump, "RAND2": rand2_pvalue(p_ump, draws[:, :, 2], spec.c)}


def simulate_family(family, spec, replicate_id):
    """ One replicate: observation and UMP / RAND2 p-value per hypothesis

    Returns:
        dict with ``x``, ``UMP`` and ``RAND2`` arrays of length k
    """
    block = simulate_block(family, spec, [replicate_id])
    return {name: values[0] for name, values in block.items()}


def synthetic_family(k, pi0, n, theta_null, theta_alt, theta1, theta2):
    """ Family with round(pi0 k) nulls at theta_null followed by alternatives at theta_alt """
    if k < 1 or not 0.0 <= pi0 <= 1.0:
        raise InputDomainError("need k >= 1 and pi0 in [0, 1]")
    k0 = int(round(pi0 * k))
    null = HypothesisConfig(n, theta_null, theta1, theta2)
    alternative = HypothesisConfig(n, theta_alt, theta1, theta2)
    if k0 and not null.is_null:
        raise InputDomainError("theta_null=%r is not on the null side" % (theta_null,))
    if k0 < k and alternative.is_null:
        raise InputDomainError("theta_alt=%r is not inside (theta1, theta2)" % (theta_alt,))
    return HypothesisFamily((null,) * k0 + (alternative,) * (k - k0))


def _guard(problem):
    if problem.n > settings.ORACLE_MAX_N:
        raise OracleGuardError("enumeration oracle is limited to n <= %d, got n=%d"
                               % (settings.ORACLE_MAX_N, problem.n))


def _below_level(a, b, level):
    with np.errstate(divide="ignore", invalid="ignore"):
        raw = (level - a) / b
    raw = np.where(b > 0, raw, np.where(a <= level, 1.0, 0.0))
    return np.clip(raw, 0.0, 1.0)


def ump_u_lengths(problem, level):
    """ Lebesgue measure of {u : p_ump(x, u) <= level} for every x in 0..n

    Both one-sided p-values are increasing and linear in u, so each set is an
    interval [0, L] and the intersection is [0, min(L_upper, L_lower)].
    """
    x = np.arange(problem.n + 1)
    upper = _below_level(sf_values(x, problem.n, problem.theta1), pmf_values(x, problem.n, problem.theta1), level)
    lower = _below_level(cdf_values(x - 1, problem.n, problem.theta2), pmf_values(x, problem.n, problem.theta2),
                         level)
    return np.minimum(upper, lower)


def exact_ump_cdf_oracle(problem, theta, t):
    """ P_theta(P^UMP <= t) by enumerating every outcome x

    Raises:
        OracleGuardError: n above settings.ORACLE_MAX_N
    """
    _guard(problem)
    if t <= 0.0:
        return 0.0
    if t >= 1.0:
        return 1.0
    weights = pmf_values(np.arange(problem.n + 1), problem.n, theta)
    return float(np.sum(weights * ump_u_lengths(problem, t)))


def exact_rand2_cdf_oracle(problem, theta, t, c):
    """ P_theta(P^RAND2 <= t) by enumeration: U-tilde branch above c, rescaled branch below """
    _guard(problem)
    if c == 0:
        return float(t)
    if t <= 0.0:
        return 0.0
    if t >= 1.0:
        return 1.0
    weights = pmf_values(np.arange(problem.n + 1), problem.n, theta)
    below_c = ump_u_lengths(problem, c)
    return float(np.sum(weights * (t * (1.0 - below_c) + ump_u_lengths(problem, t * c))))


ORACLE_BOUNDS = ((0.25, 0.75), (0.3, 0.75), (0.15, 0.45))
ORACLE_THETAS = tuple(round(0.1 * i, 1) for i in range(1, 10))
ORACLE_C_VALUES = (0.25, 0.5, 1.0)


def oracle_check(n_values=range(1, 13), thetas=ORACLE_THETAS, bounds=ORACLE_BOUNDS, t_grid=None,
                 c_values=ORACLE_C_VALUES):
    """ Largest gap between the analytic CDFs and the enumeration oracles

    Args:
        n_values (iterable): sample sizes, each at most settings.ORACLE_MAX_N
        thetas (iterable): true parameters
        bounds (iterable): (theta1, theta2) pairs
        t_grid (sequence): levels, 0.01..0.99 if None
        c_values (iterable): second-stage constants

    Returns:
        dict with ``max_deviation``, ``worst`` (the configuration reaching it) and ``cases``
    """
    from .pvalues import rand2_cdf, ump_cdf
    from .types import EquivProblem

    grid = np.round(np.arange(1, 100) / 100.0, 12) if t_grid is None else np.asarray(t_grid, dtype=float)
    worst, largest, cases = None, 0.0, 0
    for n in n_values:
        for theta1, theta2 in bounds:
            problem = EquivProblem(int(n), theta1, theta2)
            for theta in thetas:
                analytic = np.atleast_1d(ump_cdf(problem, theta, grid))
                exact = np.array([exact_ump_cdf_oracle(problem, theta, t) for t in grid])
                gaps = [("UMP", None, np.abs(analytic - exact))]
                for c in c_values:
                    analytic = np.atleast_1d(rand2_cdf(problem, theta, grid, c))
                    exact = np.array([exact_rand2_cdf_oracle(problem, theta, t, c) for t in grid])
                    gaps.append(("RAND2", c, np.abs(analytic - exact)))
                for method, c, gap in gaps:
                    cases += gap.size
                    at = int(np.argmax(gap))
                    if gap[at] > largest or worst is None:
                        largest = float(gap[at])
                        worst = {"method": method, "n": int(n), "theta1": theta1, "theta2": theta2,
                                 "theta": theta, "c": c, "t": float(grid[at])}
    logger.info("oracle check over %d cases, max deviation %.3g", cases, largest)
    return {"max_deviation": largest, "worst": worst, "cases": cases}
