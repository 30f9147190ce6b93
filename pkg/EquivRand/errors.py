class EquivRandError(Exception):
    """Base class of every error raised by EquivRand."""


class InputDomainError(EquivRandError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class ConfigurationError(EquivRandError, ValueError):
    """An option names something that does not exist or cannot be parsed."""


class OracleGuardError(EquivRandError):
    """The enumeration oracle refuses problems above its size guard."""


class RegionSchemaError(EquivRandError, ValueError):
    def __init__(self, column, path=None):
        self.column = column
        self.path = path
        where = " in %s" % path if path else ""
        super().__init__("missing column '%s'%s" % (column, where))


class RegionFileError(EquivRandError, OSError):
    def __init__(self, path, reason):
        self.path = path
        super().__init__("cannot read %s: %s" % (path, reason))
