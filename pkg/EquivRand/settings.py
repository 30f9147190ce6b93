""" Defaults for the library and the command line

Every value here can be overridden by a command line flag. The data directory
and the worker count can also be set through the environment.
"""
import logging
import os
from pathlib import Path

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20200512
DEFAULT_LEVEL = 0.05
DEFAULT_ALPHA = 0.05
DEFAULT_C = 0.5
DEFAULT_LAMBDA = 0.5
DEFAULT_REPS = 10000
DEFAULT_WORKERS = 1
DEFAULT_CHUNK_SIZE = 500

ORACLE_MAX_N = 1000
FLOAT_FORMAT = "%.6f"

DATA_DIR_ENV = "EQUIVRAND_DATA_DIR"
WORKERS_ENV = "EQUIVRAND_WORKERS"
REGIONS_SNAPSHOT = "covid19_us_2020-05-12.csv"

_PACKAGE_DATA = Path(__file__).resolve().parent / "data"


def data_dir():
    """ Directory holding region snapshots

    Returns:
        Path: value of ``EQUIVRAND_DATA_DIR`` if set, the vendored data directory otherwise.
    """
    configured = os.environ.get(DATA_DIR_ENV)
    if configured:
        return Path(configured)
    return _PACKAGE_DATA


def default_regions_path():
    return data_dir() / REGIONS_SNAPSHOT


def default_workers():
    configured = os.environ.get(WORKERS_ENV)
    if configured:
        try:
            return max(1, int(configured))
        except ValueError:
            logger.warning("ignoring %s=%r, not an integer; using %d worker(s)", WORKERS_ENV, configured,
                           DEFAULT_WORKERS)
    return DEFAULT_WORKERS
