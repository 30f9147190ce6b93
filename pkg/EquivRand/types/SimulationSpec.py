from dataclasses import dataclass

from ..errors import ConfigurationError, InputDomainError

METHODS = ("UMP", "RAND2")


@dataclass(frozen=True)
class SimulationSpec:
    """
    :type seed: int
    :param seed: 64-bit seed of every random stream of a run
    :type reps: int
    :param reps: number of Monte Carlo replicates r
    :type c: float
    :param c: second-stage tuning constant
    :type lambda_: float
    :param lambda_: Schweder-Spjotvoll tuning parameter
    :type alpha: float
    :param alpha: familywise significance level
    :type method_set: tuple
    :param method_set: subset of ("UMP", "RAND2")
    """
    seed: int
    reps: int = 10000
    c: float = 0.5
    lambda_: float = 0.5
    alpha: float = 0.05
    method_set: tuple = METHODS

    def __post_init__(self):
        if not 0 <= int(self.seed) < 2 ** 64:
            raise InputDomainError("seed must be a 64-bit unsigned integer")
        if int(self.reps) < 1:
            raise InputDomainError("reps must be at least 1")
        if not 0.0 <= self.c <= 1.0:
            raise InputDomainError("c must lie in [0, 1]")
        if not 0.0 <= self.lambda_ < 1.0:
            raise InputDomainError("lambda must lie in [0, 1)")
        if not 0.0 <= self.alpha < 1.0:
            raise InputDomainError("alpha must lie in [0, 1)")
        methods = tuple(m.upper() for m in self.method_set)
        if not methods or any(m not in METHODS for m in methods):
            raise ConfigurationError("method_set must be a non-empty subset of %s" % (METHODS,))
        object.__setattr__(self, "seed", int(self.seed))
        object.__setattr__(self, "reps", int(self.reps))
        object.__setattr__(self, "method_set", tuple(m for m in METHODS if m in methods))

    def as_dict(self):
        return {"seed": self.seed, "reps": self.reps, "c": self.c, "lambda": self.lambda_,
                "alpha": self.alpha, "method_set": list(self.method_set)}
