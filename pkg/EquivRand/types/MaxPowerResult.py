from dataclasses import dataclass

from ..errors import InputDomainError

UMP = "UMP"
RAND2 = "RAND2"


@dataclass(frozen=True)
class MaxPowerResult:
    """ Grid maximizer of the power under the alternative

    :type argmax_theta: float
    :param argmax_theta: parameter in (theta1, theta2) with the largest power, smallest on ties
    :type max_power: float
    :type grid_step: float
    :type method_tag: str
    :param method_tag: ``UMP`` or ``RAND2``
    :type theta1: float
    :param theta1: lower bound of the searched problem
    :type theta2: float
    :param theta2: upper bound of the searched problem
    """
    argmax_theta: float
    max_power: float
    grid_step: float
    method_tag: str
    theta1: float = 0.0
    theta2: float = 1.0

    def __post_init__(self):
        if self.method_tag not in (UMP, RAND2):
            raise InputDomainError("unknown method %r" % (self.method_tag,))
        if not self.theta1 < self.argmax_theta < self.theta2:
            raise InputDomainError("argmax %r lies outside (%r, %r)" % (self.argmax_theta, self.theta1, self.theta2))
        if self.grid_step <= 0 or not 0.0 <= self.max_power <= 1.0:
            raise InputDomainError("grid_step must be positive and max_power a probability")

    def as_dict(self):
        return {"method": self.method_tag, "argmax_theta": self.argmax_theta,
                "max_power": self.max_power, "grid_step": self.grid_step}
