""" Binomial distribution primitives

Thin, numerically stable wrappers around :mod:`scipy.stats.binom`. Tails come
from the regularized incomplete beta function, so the upper tail is computed
directly and never as ``1 - cdf``. Every function accepts a scalar or an array
of evaluation points and returns a float or an ndarray accordingly.

The ``*_values`` functions take raw ``n`` / ``theta`` arrays and broadcast
them; they are what the vectorized p-value code and the Monte Carlo harness use.
"""
import numpy as np
from scipy import special, stats

from .errors import InputDomainError


def _shape_like(result, like):
    if np.ndim(like) == 0:
        return result.item() if isinstance(result, np.ndarray) else result
    return result


def pmf_values(x, n, theta):
    x = np.asarray(x)
    result = stats.binom.pmf(x, n, theta)
    return np.where((x < 0) | (x > n), 0.0, result)


def cdf_values(x, n, theta):
    x = np.floor(np.asarray(x, dtype=float))
    result = stats.binom.cdf(x, n, theta)
    result = np.where(x < 0, 0.0, result)
    return np.where(x >= n, 1.0, result)


def sf_values(x, n, theta):
    x = np.floor(np.asarray(x, dtype=float))
    result = stats.binom.sf(x, n, theta)
    result = np.where(x < 0, 1.0, result)
    return np.where(x >= n, 0.0, result)


def pmf(params, x):
    """ Probability mass function of Bin(n, theta)

    Args:
        params (BinomParams): distribution
        x (int or array): evaluation points, values outside 0..n give 0

    Returns:
        P(T = x)
    """
    return _shape_like(pmf_values(x, params.n, params.theta), x)


def log_pmf(params, x):
    """ Log of the mass function via log-gamma; -inf outside the support

    Stays finite where :func:`pmf` underflows, e.g. far tails at n in the tens of thousands.
    """
    xs = np.asarray(x, dtype=float)
    n, theta = params.n, params.theta
    inside = (xs >= 0) & (xs <= n)
    xc = np.clip(xs, 0, n)
    logcomb = special.gammaln(n + 1) - special.gammaln(xc + 1) - special.gammaln(n - xc + 1)
    result = logcomb + xc * np.log(theta) + (n - xc) * np.log1p(-theta)
    return _shape_like(np.where(inside, result, -np.inf), x)


def cdf(params, x):
    """ P(T <= x); 0 below the support, exactly 1 from n on """
    return _shape_like(cdf_values(x, params.n, params.theta), x)


def survival(params, x):
    """ P(T > x), summed over the upper tail rather than subtracted from 1 """
    return _shape_like(sf_values(x, params.n, params.theta), x)


def quantile(params, q):
    """ Generalized inverse inf{x : F(x) >= q}

    Bisection over the integer support, so that ``quantile(q) <= x`` holds
    exactly when ``q <= cdf(x)``.

    Args:
        params (BinomParams): distribution
        q (float or array): probabilities in [0, 1]

    Returns:
        int (or integer ndarray) in 0..n
    """
    qs = np.asarray(q, dtype=float)
    if np.any(np.isnan(qs)) or np.any((qs < 0.0) | (qs > 1.0)):
        raise InputDomainError("quantile level must lie in [0, 1]")
    lo = np.zeros(qs.shape, dtype=np.int64)
    hi = np.full(qs.shape, params.n, dtype=np.int64)
    active = lo < hi
    while np.any(active):
        mid = (lo + hi) // 2
        reached = cdf_values(mid, params.n, params.theta) >= qs
        hi = np.where(active & reached, mid, hi)
        lo = np.where(active & ~reached, mid + 1, lo)
        active = lo < hi
    if qs.ndim == 0:
        return int(lo)
    return lo
