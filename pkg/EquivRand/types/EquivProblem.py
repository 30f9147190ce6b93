from dataclasses import dataclass, field
from numbers import Integral

from ..errors import InputDomainError
from .BinomParams import BinomParams


@dataclass(frozen=True)
class EquivProblem:
    """ Binomial equivalence problem H: theta not in (theta1, theta2)

    :type n: int
    :param n: sample size
    :type theta1: float
    :param theta1: lower equivalence bound
    :type theta2: float
    :param theta2: upper equivalence bound
    :type delta: float
    :param delta: equivalence limit theta2 - theta1 (derived)
    """
    n: int
    theta1: float
    theta2: float
    delta: float = field(init=False)

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, Integral) or self.n < 1:
            raise InputDomainError("n must be a positive integer, got %r" % (self.n,))
        theta1, theta2 = float(self.theta1), float(self.theta2)
        if not 0.0 < theta1 < theta2 < 1.0:
            raise InputDomainError("bounds must satisfy 0 < theta1 < theta2 < 1, got (%r, %r)"
                                   % (self.theta1, self.theta2))
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "theta1", theta1)
        object.__setattr__(self, "theta2", theta2)
        object.__setattr__(self, "delta", theta2 - theta1)

    @property
    def lower(self):
        """Bin(n, theta1), the boundary of the upper-tailed test"""
        return BinomParams(self.n, self.theta1)

    @property
    def upper(self):
        """Bin(n, theta2), the boundary of the lower-tailed test"""
        return BinomParams(self.n, self.theta2)

    def with_n(self, n):
        return EquivProblem(n, self.theta1, self.theta2)

    def contains(self, theta):
        """True if theta lies in the open alternative (theta1, theta2)"""
        return self.theta1 < theta < self.theta2
