from dataclasses import dataclass

from ..errors import InputDomainError


@dataclass(frozen=True)
class PValueDraw:
    """ One realized equivalence test

    :type s: int
    :param s: observed number of successes
    :type u: float
    :param u: randomizer shared by both one-sided p-values
    :type u_tilde: float
    :param u_tilde: second-stage randomizer
    :type c: float
    :param c: second-stage tuning constant
    """
    s: int
    u: float
    u_tilde: float
    c: float
    p_lower: float
    p_upper: float
    p_ump: float
    p_rand2: float

    def __post_init__(self):
        for name in ("u", "u_tilde", "c", "p_lower", "p_upper", "p_ump", "p_rand2"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise InputDomainError("%s must lie in [0, 1], got %r" % (name, getattr(self, name)))
        if self.p_ump != max(self.p_lower, self.p_upper):
            raise InputDomainError("p_ump must be the larger one-sided p-value")

    def as_dict(self):
        return {
            "s": self.s, "u": self.u, "u_tilde": self.u_tilde, "c": self.c,
            "p_lower": self.p_lower, "p_upper": self.p_upper,
            "p_ump": self.p_ump, "p_rand2": self.p_rand2,
        }
