from dataclasses import dataclass

from ..errors import InputDomainError


@dataclass(frozen=True)
class Pi0Estimate:
    """ Schweder-Spjotvoll estimate of the number of true nulls

    :type lambda_: float
    :param lambda_: tuning parameter in [0, 1)
    :type ecdf_at_lambda: float
    :type k: int
    :param k: number of p-values the estimate is based on
    :type k0_hat: float
    :param k0_hat: k (1 - ecdf) / (1 - lambda), not capped at k
    :type pi0_hat: float
    :type intercept: float
    :param intercept: y-intercept of the line through (lambda, ecdf) and (1, 1)
    """
    lambda_: float
    ecdf_at_lambda: float
    k: int
    k0_hat: float
    pi0_hat: float
    intercept: float

    def __post_init__(self):
        if not 0.0 <= self.lambda_ < 1.0:
            raise InputDomainError("lambda must lie in [0, 1)")
        if self.k < 1 or not 0.0 <= self.ecdf_at_lambda <= 1.0 or self.k0_hat < 0:
            raise InputDomainError("inconsistent estimate: k=%r, ecdf=%r, k0_hat=%r"
                                   % (self.k, self.ecdf_at_lambda, self.k0_hat))

    def as_dict(self):
        return {"lambda": self.lambda_, "ecdf_at_lambda": self.ecdf_at_lambda, "k": self.k,
                "k0_hat": self.k0_hat, "pi0_hat": self.pi0_hat, "intercept": self.intercept}
