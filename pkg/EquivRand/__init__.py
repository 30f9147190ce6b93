__version__ = "0.1.0"

from .errors import EquivRandError, InputDomainError, ConfigurationError, OracleGuardError
from .pvalues import ump_pvalue, rand2_pvalue, constants, ump_cdf, rand2_cdf
from .MonteCarloEngine import MonteCarloEngine
