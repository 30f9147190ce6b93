from dataclasses import dataclass
from numbers import Integral

from ..errors import InputDomainError


@dataclass(frozen=True)
class HypothesisConfig:
    """
    :type n: int
    :param n: sample size of this hypothesis
    :type theta_true: float
    :param theta_true: ground-truth success probability used for simulation, in [0, 1]
    :type theta1: float
    :type theta2: float
    """
    n: int
    theta_true: float
    theta1: float
    theta2: float

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, Integral) or self.n < 1:
            raise InputDomainError("n must be a positive integer, got %r" % (self.n,))
        if not 0.0 <= self.theta_true <= 1.0:
            raise InputDomainError("theta_true must lie in [0, 1], got %r" % (self.theta_true,))
        if not 0.0 < self.theta1 < self.theta2 < 1.0:
            raise InputDomainError("bounds must satisfy 0 < theta1 < theta2 < 1")
        object.__setattr__(self, "n", int(self.n))

    @property
    def is_null(self):
        return self.theta_true <= self.theta1 or self.theta_true >= self.theta2
