from dataclasses import dataclass


@dataclass(frozen=True)
class ConstantsBundle:
    """ Critical and randomization constants of the UMP test at level t

    :type level_t: float
    :type c_n: int
    :param c_n: quantile of Bin(n, theta1) at 1 - t
    :type d_n: int
    :param d_n: quantile of Bin(n, theta2) at t
    :type gamma_n: float
    :param gamma_n: randomization weight on T = c_n
    :type delta_n: float
    :param delta_n: randomization weight on T = d_n
    :type clamped: bool
    :param clamped: True if a raw weight fell outside [0, 1] and was clipped
    """
    level_t: float
    c_n: int
    d_n: int
    gamma_n: float
    delta_n: float
    clamped: bool = False
