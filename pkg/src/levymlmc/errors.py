"""Exception hierarchy shared across the library and the CLI exit codes."""


class LevyMlmcError(Exception):
    """Base class for library errors."""

    exit_code = 4


class ConfigError(LevyMlmcError):
    """Invalid configuration: bad keys, bad values, incompatible grids."""

    exit_code = 2


class SchemeUnsupportedError(ConfigError):
    """Requested scheme cannot be simulated exactly for the given driver."""


class InfeasibleScheduleError(LevyMlmcError):
    """No jump threshold can satisfy the requested schedule constraints."""

    exit_code = 3


class NumericError(LevyMlmcError):
    """Runtime numerical failure (singular jumps, degenerate inputs)."""

    exit_code = 4
