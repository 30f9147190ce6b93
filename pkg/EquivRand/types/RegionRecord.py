from dataclasses import dataclass, field

from ..errors import InputDomainError


@dataclass(frozen=True)
class RegionRecord:
    """
    :type region: str
    :type confirmed: int
    :param confirmed: confirmed cases, the sample size n_i
    :type recovered: int
    :type rate: float
    :param rate: recovered / confirmed, the assumed true proportion (derived)
    """
    region: str
    confirmed: int
    recovered: int
    rate: float = field(init=False)

    def __post_init__(self):
        if self.confirmed < 1:
            raise InputDomainError("%s: confirmed must be at least 1" % self.region)
        if not 0 <= self.recovered <= self.confirmed:
            raise InputDomainError("%s: recovered must lie in [0, confirmed]" % self.region)
        object.__setattr__(self, "confirmed", int(self.confirmed))
        object.__setattr__(self, "recovered", int(self.recovered))
        object.__setattr__(self, "rate", self.recovered / self.confirmed)
