import pytest

from EquivRand import settings
from EquivRand.regions import load_regions
from EquivRand.types import EquivProblem, SimulationSpec


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-size Monte Carlo reproductions")


@pytest.fixture
def problem():
    return EquivProblem(50, 0.25, 0.75)


@pytest.fixture(scope="session")
def regions():
    records, _ = load_regions(settings.default_regions_path())
    return records


@pytest.fixture
def spec():
    return SimulationSpec(seed=settings.DEFAULT_SEED, reps=200)
