""" Region snapshots and hypothesis families

A snapshot is a UTF-8 CSV with one row per region and at least the columns
region, confirmed and recovered (names remappable). Rows that cannot serve
as a binomial sample are dropped and reported, never repaired.
"""
import logging
from dataclasses import dataclass

import numpy as np
import pandas as pd

from .errors import ConfigurationError, InputDomainError, RegionFileError, RegionSchemaError
from .types import HypothesisConfig, HypothesisFamily, RegionRecord

logger = logging.getLogger(__name__)

FIELDS = ("region", "confirmed", "recovered")
FAMILY_COLUMNS = ("label", "n", "theta_true", "theta1", "theta2")

MISSING = "missing %s"
NON_NUMERIC = "non-numeric %s"
NON_INTEGER = "non-integer %s"
NEGATIVE = "negative %s"
ZERO_CONFIRMED = "zero confirmed"
EXCEEDS = "recoveries exceed confirmed"


@dataclass(frozen=True)
class CleaningReport:
    """
    :type retained: int
    :type dropped: tuple
    :param dropped: (region, reason) per dropped row, in file order
    """
    retained: int
    dropped: tuple = ()

    def as_dict(self):
        return {"retained": self.retained, "dropped": [{"region": r, "reason": why} for r, why in self.dropped]}


def parse_column_mapping(text):
    """ Parse ``region=Province_State,confirmed=Confirmed`` into a mapping

    Unnamed fields keep their default column name.
    """
    mapping = {name: name for name in FIELDS}
    if not text:
        return mapping
    for item in text.split(","):
        if "=" not in item:
            raise ConfigurationError("column mapping entry '%s' is not field=column" % item)
        field, column = (part.strip() for part in item.split("=", 1))
        if field not in FIELDS:
            raise ConfigurationError("unknown field '%s' in column mapping, expected one of %s" % (field, FIELDS))
        mapping[field] = column
    return mapping


def read_csv(path, **kwargs):
    """pandas.read_csv with read failures raised as RegionFileError"""
    try:
        return pd.read_csv(path, **kwargs)
    except (OSError, UnicodeDecodeError, pd.errors.ParserError, pd.errors.EmptyDataError) as exc:
        raise RegionFileError(path, exc)


def _count(raw, name):
    if raw is None or (isinstance(raw, float) and np.isnan(raw)) or str(raw).strip() == "":
        return None, MISSING % name
    try:
        value = float(str(raw).strip())
    except ValueError:
        return None, NON_NUMERIC % name
    if np.isnan(value):
        return None, MISSING % name
    if not value.is_integer():
        return None, NON_INTEGER % name
    if value < 0:
        return None, NEGATIVE % name
    return int(value), None


def load_regions(path, columns=None):
    """ Read and clean a region snapshot

    Args:
        path (str or Path): CSV file
        columns (dict): field -> column name, see :func:`parse_column_mapping`

    Returns:
        (list of RegionRecord, CleaningReport)

    Raises:
        RegionFileError: the file cannot be read
        RegionSchemaError: a mapped column is absent
    """
    mapping = columns or parse_column_mapping(None)
    frame = read_csv(path, dtype=str, keep_default_na=False, comment="#")
    for field in FIELDS:
        if mapping[field] not in frame.columns:
            raise RegionSchemaError(mapping[field], path)
    records, dropped = [], []
    for position, row in enumerate(frame.to_dict("records")):
        region = str(row[mapping["region"]]).strip() or "row %d" % (position + 1)
        confirmed, reason = _count(row[mapping["confirmed"]], "confirmed")
        if reason is None:
            recovered, reason = _count(row[mapping["recovered"]], "recovered")
        if reason is None and confirmed == 0:
            reason = ZERO_CONFIRMED
        if reason is None and recovered > confirmed:
            reason = EXCEEDS
        if reason is not None:
            logger.info("dropping region %s: %s", region, reason)
            dropped.append((region, reason))
            continue
        records.append(RegionRecord(region, confirmed, recovered))
    logger.info("loaded %d regions from %s, dropped %d", len(records), path, len(dropped))
    return records, CleaningReport(retained=len(records), dropped=tuple(dropped))


def write_regions(records, path):
    """Write cleaned records with the default column names"""
    frame = pd.DataFrame([(r.region, r.confirmed, r.recovered) for r in records], columns=list(FIELDS))
    frame.to_csv(path, index=False)


def build_family(records, theta1, theta2):
    """ One equivalence hypothesis per region

    The region's recovery rate is the ground truth and its confirmed count
    the sample size; the null is true when rate <= theta1 or rate >= theta2.

    Raises:
        InputDomainError: empty record list or bounds not 0 < theta1 < theta2 < 1
    """
    if not records:
        raise InputDomainError("no regions to build a family from")
    if not 0.0 < theta1 < theta2 < 1.0:
        raise InputDomainError("bounds must satisfy 0 < theta1 < theta2 < 1, got (%r, %r)" % (theta1, theta2))
    configs = [HypothesisConfig(r.confirmed, r.rate, theta1, theta2) for r in records]
    return HypothesisFamily(configs, labels=[r.region for r in records])


def write_family(family, path):
    labels = family.labels or ["h%d" % i for i in range(family.k)]
    frame = pd.DataFrame([(label, cfg.n, cfg.theta_true, cfg.theta1, cfg.theta2)
                          for label, cfg in zip(labels, family.configs)], columns=list(FAMILY_COLUMNS))
    frame.to_csv(path, index=False)


def load_family(path):
    frame = read_csv(path, comment="#", dtype={"label": str}, float_precision="round_trip")
    for column in FAMILY_COLUMNS:
        if column not in frame.columns:
            raise RegionSchemaError(column, path)
    configs = [HypothesisConfig(int(row.n), float(row.theta_true), float(row.theta1), float(row.theta2))
               for row in frame.itertuples(index=False)]
    return HypothesisFamily(configs, labels=[str(v) for v in frame["label"]])
