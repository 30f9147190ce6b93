from .BinomParams import BinomParams
from .ConstantsBundle import ConstantsBundle
from .CurveSeries import CurveSeries
from .EquivProblem import EquivProblem
from .HypothesisConfig import HypothesisConfig
from .HypothesisFamily import HypothesisFamily
from .MaxPowerResult import MaxPowerResult
from .Pi0Estimate import Pi0Estimate
from .PValueDraw import PValueDraw
from .RegionRecord import RegionRecord
from .SimulationSpec import SimulationSpec
from .TableRow import TableRow
