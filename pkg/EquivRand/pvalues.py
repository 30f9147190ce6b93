""" Randomized p-values for the binomial equivalence problem

The UMP p-value is the larger of two randomized one-sided p-values that share
one uniform randomizer U. The two-stage RAND2 p-value replaces a UMP p-value
at or above ``c`` by an independent uniform and rescales the rest by 1/c.
Randomizers are always passed in; nothing in this module draws random numbers.
"""
import logging
from numbers import Integral

import numpy as np

from .binomkernel import cdf_values, pmf_values, quantile, sf_values
from .errors import InputDomainError
from .types import BinomParams, ConstantsBundle, PValueDraw

logger = logging.getLogger(__name__)


def _check_unit(name, value):
    values = np.asarray(value, dtype=float)
    if np.any(np.isnan(values)) or np.any((values < 0.0) | (values > 1.0)):
        raise InputDomainError("%s must lie in [0, 1], got %r" % (name, value))


def _check_observation(problem, s, u):
    if isinstance(s, bool) or not isinstance(s, Integral):
        raise InputDomainError("s must be an integer, got %r" % (s,))
    if not 0 <= s <= problem.n:
        raise InputDomainError("s must lie in 0..%d, got %d" % (problem.n, s))
    _check_unit("u", u)


def one_sided_pvalue_arrays(n, theta1, theta2, s, u):
    """ Vectorized one-sided p-values, broadcasting over all arguments

    Returns:
        (p_lower, p_upper) where p_upper tests theta <= theta1 and p_lower tests theta >= theta2
    """
    p_upper = sf_values(s, n, theta1) + u * pmf_values(s, n, theta1)
    p_lower = cdf_values(np.asarray(s) - 1, n, theta2) + u * pmf_values(s, n, theta2)
    return np.minimum(p_lower, 1.0), np.minimum(p_upper, 1.0)


def one_sided_pvalues(problem, s, u):
    """ Randomized p-values of the two one-sided tests

    Args:
        problem (EquivProblem): n, theta1, theta2
        s (int): observed number of successes
        u (float): uniform randomizer

    Returns:
        (p_lower, p_upper)

    Raises:
        InputDomainError: s outside 0..n or u outside [0, 1]
    """
    _check_observation(problem, s, u)
    p_lower, p_upper = one_sided_pvalue_arrays(problem.n, problem.theta1, problem.theta2, s, u)
    return float(p_lower), float(p_upper)


def ump_pvalue(problem, s, u):
    """ UMP p-value: maximum of the one-sided p-values, one U for both """
    p_lower, p_upper = one_sided_pvalues(problem, s, u)
    return max(p_lower, p_upper)


def rand2_pvalue(p_ump, u_tilde, c):
    """ Two-stage randomized p-value

    Returns ``u_tilde`` when ``p_ump >= c`` and ``p_ump / c`` otherwise, with
    the conventions c = 0 -> u_tilde and c = 1 -> p_ump. Accepts arrays for
    ``p_ump`` and ``u_tilde``.
    """
    _check_unit("p_ump", p_ump)
    _check_unit("u_tilde", u_tilde)
    _check_unit("c", c)
    if c == 0:
        result = np.asarray(u_tilde, dtype=float)
    elif c == 1:
        result = np.asarray(p_ump, dtype=float)
    else:
        p = np.asarray(p_ump, dtype=float)
        result = np.where(p >= c, u_tilde, p / c)
    if np.ndim(p_ump) == 0 and np.ndim(u_tilde) == 0:
        return float(result)
    return result


def draw_pvalue(problem, s, u, u_tilde, c):
    """ Evaluate one test completely

    Returns:
        PValueDraw
    """
    p_lower, p_upper = one_sided_pvalues(problem, s, u)
    p_ump = max(p_lower, p_upper)
    return PValueDraw(s=int(s), u=float(u), u_tilde=float(u_tilde), c=float(c),
                      p_lower=p_lower, p_upper=p_upper, p_ump=p_ump,
                      p_rand2=rand2_pvalue(p_ump, u_tilde, c))


def draw_pvalue_seeded(problem, s, seed, c):
    """ Like :func:`draw_pvalue` with U and U-tilde taken from stream (seed, 0, 0) """
    from .harness import rng_stream
    u, u_tilde = rng_stream(seed, 0, 0).random(2)
    return draw_pvalue(problem, s, float(u), float(u_tilde), c)


def _critical_arrays(problem, t):
    lower, upper = problem.lower, problem.upper
    c_n = quantile(lower, 1.0 - t)
    d_n = quantile(upper, t)
    f_c = pmf_values(c_n, problem.n, problem.theta1)
    f_d = pmf_values(d_n, problem.n, problem.theta2)
    with np.errstate(divide="ignore", invalid="ignore"):
        gamma = np.where(f_c > 0, (cdf_values(c_n, problem.n, problem.theta1) - (1.0 - t)) / f_c, 1.0)
        delta = np.where(f_d > 0, (t - cdf_values(d_n - 1, problem.n, problem.theta2)) / f_d, 1.0)
    clamped = (gamma < 0) | (gamma > 1) | (delta < 0) | (delta > 1)
    return c_n, d_n, np.clip(gamma, 0.0, 1.0), np.clip(delta, 0.0, 1.0), clamped


def constants(problem, level_t):
    """ Critical constants C_n, D_n and randomization constants at level t

    Args:
        problem (EquivProblem): test problem
        level_t (float): level in (0, 1)

    Returns:
        ConstantsBundle

    Raises:
        InputDomainError: level_t outside (0, 1)
    """
    if not 0.0 < level_t < 1.0:
        raise InputDomainError("level_t must lie in (0, 1), got %r" % (level_t,))
    c_n, d_n, gamma, delta, clamped = _critical_arrays(problem, float(level_t))
    if clamped:
        logger.debug("randomization constants clamped for n=%d at t=%g", problem.n, level_t)
    return ConstantsBundle(level_t=float(level_t), c_n=int(c_n), d_n=int(d_n),
                           gamma_n=float(gamma), delta_n=float(delta), clamped=bool(clamped))


def ump_cdf(problem, theta, t):
    """ P_theta(P^UMP <= t)

    Interval term plus the randomized point masses at C_n and D_n. When C_n
    equals D_n both one-sided conditions must hold for the same U, giving
    min(gamma_n, delta_n) P(T = C_n); when C_n exceeds D_n no outcome rejects.
    t = 0 maps to 0 and t = 1 to 1.

    Args:
        problem (EquivProblem): test problem
        theta (float): true parameter in (0, 1)
        t (float or array): level(s) in [0, 1]

    Raises:
        InputDomainError: theta outside (0, 1) or t outside [0, 1]
    """
    params = BinomParams(problem.n, theta) if 0.0 < theta < 1.0 else None
    if params is None:
        raise InputDomainError("theta must lie in (0, 1), got %r" % (theta,))
    _check_unit("t", t)
    ts = np.asarray(t, dtype=float)
    interior = (ts > 0.0) & (ts < 1.0)
    c_n, d_n, gamma, delta, _ = _critical_arrays(problem, np.where(interior, ts, 0.5))
    f_c = pmf_values(c_n, params.n, params.theta)
    f_d = pmf_values(d_n, params.n, params.theta)
    between = cdf_values(d_n - 1, params.n, params.theta) - cdf_values(c_n, params.n, params.theta)
    value = np.where(c_n < d_n, between + gamma * f_c + delta * f_d,
                     np.where(c_n == d_n, np.minimum(gamma, delta) * f_c, 0.0))
    value = np.clip(value, 0.0, 1.0)
    value = np.where(ts <= 0.0, 0.0, np.where(ts >= 1.0, 1.0, value))
    return value.item() if value.ndim == 0 else value


def rand2_cdf(problem, theta, t, c):
    """ P_theta(P^RAND2 <= t) = t P(P^UMP > c) + P(P^UMP <= t c)

    c = 0 gives the uniform CDF t; c = 1 reduces to :func:`ump_cdf`.
    """
    _check_unit("c", c)
    _check_unit("t", t)
    ts = np.asarray(t, dtype=float)
    if c == 0:
        value = ts.copy()
    else:
        value = ts * (1.0 - ump_cdf(problem, theta, c)) + ump_cdf(problem, theta, ts * c)
        value = np.clip(value, 0.0, 1.0)
    return value.item() if value.ndim == 0 else value
