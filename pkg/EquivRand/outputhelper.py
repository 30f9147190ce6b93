import json
from pathlib import Path

from . import settings
from .errors import ConfigurationError
from .utils import round_floats

PROVENANCE_PREFIX = "# provenance: "


def _open(path, exclusive):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    try:
        return open(path, "x" if exclusive else "w", encoding="utf-8", newline="")
    except FileExistsError:
        raise ConfigurationError("%s already exists, pass --overwrite to replace it" % path)


def write_csv(frame, path, provenance, float_format=settings.FLOAT_FORMAT, exclusive=True):
    """ Write a DataFrame with a provenance comment as first line

    Args:
        frame (pandas.DataFrame): table to write, the index is dropped
        path (str or Path): destination
        provenance (dict): see :func:`utils.provenance`
        float_format (str): printf format for floats
        exclusive (bool): refuse to replace an existing file
    """
    with _open(path, exclusive) as handle:
        handle.write(PROVENANCE_PREFIX + json.dumps(provenance, sort_keys=True) + "\n")
        frame.to_csv(handle, index=False, float_format=float_format, lineterminator="\n")
    return Path(path)


def write_json(payload, path, provenance, exclusive=True):
    document = {"provenance": provenance, "data": round_floats(payload)}
    with _open(path, exclusive) as handle:
        json.dump(document, handle, sort_keys=True, indent=2)
        handle.write("\n")
    return Path(path)


def read_provenance(path):
    """ Provenance block of a file written by this module, None if absent """
    path = Path(path)
    if path.suffix == ".json":
        with open(path, encoding="utf-8") as handle:
            return json.load(handle).get("provenance")
    with open(path, encoding="utf-8") as handle:
        first = handle.readline()
    if not first.startswith(PROVENANCE_PREFIX):
        return None
    return json.loads(first[len(PROVENANCE_PREFIX):])
