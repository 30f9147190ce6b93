import numpy as np

from .errors import ConfigurationError

FLOAT_DIGITS = 6


def provenance(command, config, seed=None):
    """ Record of how an output file was produced: command, parameters, seed and package version """
    from . import __version__
    record = {"command": command, "config": round_floats(dict(config)), "version": __version__}
    if seed is not None:
        record["seed"] = int(seed)
    return record


def round_floats(value, digits=FLOAT_DIGITS):
    """Round every float in nested dicts, lists and numpy values"""
    if isinstance(value, dict):
        return {str(k): round_floats(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [round_floats(v, digits) for v in value]
    if isinstance(value, np.ndarray):
        return round_floats(value.tolist(), digits)
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return round(float(value), digits)
    return value


def parse_grid(text):
    """ Parse ``0.1,0.2,0.5`` or the inclusive range ``start:stop:step`` into a list of floats """
    text = text.strip()
    try:
        if ":" in text:
            start, stop, step = (float(part) for part in text.split(":"))
            if step <= 0 or stop < start:
                raise ConfigurationError("grid '%s' needs step > 0 and stop >= start" % text)
            count = int(np.floor((stop - start) / step + 1e-9)) + 1
            return [round(start + i * step, 12) for i in range(count)]
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ConfigurationError("cannot parse grid '%s'" % text)


def parse_int_range(text):
    """ Parse the inclusive range ``20:300`` """
    try:
        start, stop = (int(part) for part in text.split(":"))
    except ValueError:
        raise ConfigurationError("cannot parse range '%s', expected start:stop" % text)
    if stop < start:
        raise ConfigurationError("range '%s' is empty" % text)
    return range(start, stop + 1)
