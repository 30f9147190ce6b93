from dataclasses import dataclass, field

import numpy as np

from ..errors import InputDomainError


@dataclass(frozen=True)
class HypothesisFamily:
    """ k equivalence hypotheses with their ground truth

    :type configs: tuple
    :param configs: HypothesisConfig per hypothesis
    :type labels: tuple
    :param labels: optional names (region names when built from data)
    :type truth_mask: tuple
    :param truth_mask: True where the null hypothesis is true (derived)
    :type k0: int
    :param k0: number of true nulls (derived)
    """
    configs: tuple
    labels: tuple = ()
    truth_mask: tuple = field(init=False)
    k0: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "configs", tuple(self.configs))
        object.__setattr__(self, "labels", tuple(self.labels))
        if not self.configs:
            raise InputDomainError("a hypothesis family needs at least one hypothesis")
        if self.labels and len(self.labels) != len(self.configs):
            raise InputDomainError("labels differ in length from configs")
        mask = tuple(cfg.is_null for cfg in self.configs)
        object.__setattr__(self, "truth_mask", mask)
        object.__setattr__(self, "k0", sum(mask))

    @property
    def k(self):
        return len(self.configs)

    @property
    def pi0(self):
        return self.k0 / self.k

    def column(self, name, dtype=float):
        return np.array([getattr(cfg, name) for cfg in self.configs], dtype=dtype)
