from dataclasses import dataclass

COLUMNS = ("theta1", "theta2", "delta", "k0", "k0_hat_ump", "k0_hat_rand2", "stderr_ump", "stderr_rand2")


@dataclass(frozen=True)
class TableRow:
    """ One row of the true-null estimation table

    :type k0: int
    :param k0: number of regions whose rate lies outside (theta1, theta2)
    :type k0_hat_ump: float
    :param k0_hat_ump: mean Schweder-Spjotvoll estimate over replicates, UMP p-values
    :type mc_stderr_ump: float
    :param mc_stderr_ump: Monte Carlo standard error of that mean
    """
    theta1: float
    theta2: float
    delta: float
    k0: int
    k0_hat_ump: float
    k0_hat_rand2: float
    mc_stderr_ump: float
    mc_stderr_rand2: float

    def as_record(self):
        return dict(zip(COLUMNS, (self.theta1, self.theta2, self.delta, self.k0, self.k0_hat_ump,
                                  self.k0_hat_rand2, self.mc_stderr_ump, self.mc_stderr_rand2)))
