from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from ..errors import InputDomainError

PROBABILITY = "probability"
COUNT = "count"


@dataclass(frozen=True)
class CurveSeries:
    """ Paired UMP / RAND2 values over an ordered x axis

    :type x_values: tuple
    :param x_values: strictly increasing sample sizes, levels, widths or lambdas
    :type ump_values: tuple
    :type rand2_values: tuple
    :type metadata: dict
    :param metadata: configuration echo written next to the data
    :type null_side: tuple
    :param null_side: per-point flag, True where the evaluated parameter lies in the null
    :type value_kind: str
    :param value_kind: ``probability`` (values checked against [0, 1]) or ``count``
    """
    x_values: tuple
    ump_values: tuple
    rand2_values: tuple
    metadata: dict = field(default_factory=dict)
    null_side: tuple = ()
    value_kind: str = PROBABILITY

    def __post_init__(self):
        for name in ("x_values", "ump_values", "rand2_values", "null_side"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        size = len(self.x_values)
        if len(self.ump_values) != size or len(self.rand2_values) != size:
            raise InputDomainError("curve columns differ in length")
        if self.null_side and len(self.null_side) != size:
            raise InputDomainError("null_side flags differ in length from x_values")
        if size > 1 and np.any(np.diff(np.asarray(self.x_values, dtype=float)) <= 0):
            raise InputDomainError("x_values must be strictly increasing")
        if self.value_kind == PROBABILITY:
            values = np.asarray(self.ump_values + self.rand2_values, dtype=float)
            if np.any((values < 0.0) | (values > 1.0)):
                raise InputDomainError("curve values must lie in [0, 1]")

    def __len__(self):
        return len(self.x_values)

    def to_frame(self):
        frame = pd.DataFrame({"x": self.x_values, "ump": self.ump_values, "rand2": self.rand2_values})
        if self.null_side:
            frame["null_side"] = list(self.null_side)
        return frame

    def as_dict(self):
        payload = {
            "x": list(self.x_values),
            "ump": [float(v) for v in self.ump_values],
            "rand2": [float(v) for v in self.rand2_values],
            "metadata": self.metadata,
        }
        if self.null_side:
            payload["null_side"] = [bool(v) for v in self.null_side]
        return payload
