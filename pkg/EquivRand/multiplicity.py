""" Proportion of true nulls and adaptive Bonferroni

k0_hat(lambda) = k (1 - F_k(lambda)) / (1 - lambda) with F_k the ECDF of the
k p-values. The same number is the slope of the line through (lambda, F_k)
and (1, 1); that line meets the y axis at 1 - pi0_hat.
"""
import logging

import numpy as np

from .errors import InputDomainError
from .types import CurveSeries, Pi0Estimate
from .types.CurveSeries import COUNT

logger = logging.getLogger(__name__)


def _pvalue_array(pvalues):
    values = np.asarray(pvalues, dtype=float).ravel()
    if values.size == 0:
        raise InputDomainError("need at least one p-value")
    if np.any(np.isnan(values)) or np.any((values < 0.0) | (values > 1.0)):
        raise InputDomainError("p-values must lie in [0, 1]")
    return values


def _check_lambda(lambda_):
    if not 0.0 <= lambda_ < 1.0:
        raise InputDomainError("lambda must lie in [0, 1), got %r" % (lambda_,))


def ecdf(pvalues, t):
    """Fraction of p-values <= t"""
    values = _pvalue_array(pvalues)
    return float(np.count_nonzero(values <= t)) / values.size


def ecdf_curve(pvalues, t_grid):
    values = np.sort(_pvalue_array(pvalues))
    return np.searchsorted(values, np.asarray(t_grid, dtype=float), side="right") / values.size


def schweder_k0(pvalues, lambda_=0.5):
    """ Schweder-Spjotvoll estimate of the number of true nulls

    Args:
        pvalues (sequence): marginal p-values
        lambda_ (float): tuning parameter in [0, 1)

    Returns:
        Pi0Estimate, k0_hat is not capped at k

    Raises:
        InputDomainError: lambda outside [0, 1) or invalid p-values
    """
    _check_lambda(lambda_)
    values = _pvalue_array(pvalues)
    k = values.size
    at_lambda = ecdf(values, lambda_)
    k0_hat = k * (1.0 - at_lambda) / (1.0 - lambda_)
    pi0_hat = k0_hat / k
    return Pi0Estimate(lambda_=float(lambda_), ecdf_at_lambda=at_lambda, k=k, k0_hat=k0_hat,
                       pi0_hat=pi0_hat, intercept=1.0 - pi0_hat)


def k0_hat_matrix(pmatrix, lambda_):
    """Row-wise Schweder-Spjotvoll estimates for a (replicates, k) matrix"""
    _check_lambda(lambda_)
    pmatrix = np.atleast_2d(pmatrix)
    k = pmatrix.shape[1]
    return k * (1.0 - np.count_nonzero(pmatrix <= lambda_, axis=1) / k) / (1.0 - lambda_)


def adaptive_threshold(alpha, k0_hat):
    return alpha / np.maximum(1.0, k0_hat)


def adaptive_bonferroni(pvalues, alpha, k0_hat, cap_at_k=False):
    """ Adaptive Bonferroni with a plug-in estimate of k0

    Each hypothesis is tested at alpha / max(1, k0_hat).

    Args:
        pvalues (sequence): marginal p-values
        alpha (float): familywise level in (0, 1)
        k0_hat (float): estimated number of true nulls
        cap_at_k (bool): use min(k0_hat, k) in the threshold

    Returns:
        (threshold, rejection mask)
    """
    if not 0.0 < alpha < 1.0:
        raise InputDomainError("alpha must lie in (0, 1), got %r" % (alpha,))
    if k0_hat < 0:
        raise InputDomainError("k0_hat must be non-negative")
    values = _pvalue_array(pvalues)
    if cap_at_k:
        k0_hat = min(k0_hat, values.size)
    threshold = float(adaptive_threshold(alpha, k0_hat))
    return threshold, values <= threshold


def bonferroni(pvalues, alpha):
    values = _pvalue_array(pvalues)
    return adaptive_bonferroni(values, alpha, float(values.size))


def lambda_sweep(pvalue_generator, lambda_grid, reps):
    """ Mean k0_hat per lambda and method

    Args:
        pvalue_generator (callable): maps a sequence of replicate ids to a dict
            with ``UMP`` and ``RAND2`` matrices of shape (replicates, k)
        lambda_grid (sequence): increasing values in [0, 1)
        reps (int): number of replicates, ids 0..reps-1

    Returns:
        CurveSeries of mean estimates (value_kind ``count``)
    """
    grid = [float(v) for v in lambda_grid]
    for value in grid:
        _check_lambda(value)
    if reps < 1:
        raise InputDomainError("reps must be at least 1")
    simulated = pvalue_generator(range(reps))
    means = {method: [float(np.mean(k0_hat_matrix(simulated[method], value))) for value in grid]
             for method in ("UMP", "RAND2")}
    logger.debug("lambda sweep over %d values with %d replicates", len(grid), reps)
    return CurveSeries(grid, means["UMP"], means["RAND2"], metadata={"reps": int(reps)}, value_kind=COUNT)
