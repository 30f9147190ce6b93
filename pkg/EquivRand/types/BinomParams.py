from dataclasses import dataclass
from numbers import Integral

from ..errors import InputDomainError


@dataclass(frozen=True)
class BinomParams:
    """
    :type n: int
    :param n: number of Bernoulli trials (>= 1)
    :type theta: float
    :param theta: success probability, strictly between 0 and 1
    """
    n: int
    theta: float

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, Integral) or self.n < 1:
            raise InputDomainError("n must be a positive integer, got %r" % (self.n,))
        if not 0.0 < float(self.theta) < 1.0:
            raise InputDomainError("theta must lie in (0, 1), got %r" % (self.theta,))
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "theta", float(self.theta))
