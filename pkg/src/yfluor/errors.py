"""Exception hierarchy for yfluor."""


class YFluorError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParams(YFluorError, ValueError):
    """An AtomParams field violates its physical constraints."""


class InvalidP(InvalidParams):
    """Interference parameter outside [-1, 1]."""


class InvalidRate(InvalidParams):
    """Negative decay rate, non-positive gamma3, or a non-finite value."""


class SingularMatrix(YFluorError, ArithmeticError):
    """A pivot fell below the relative singularity threshold."""


class SingularLiouvillian(SingularMatrix):
    """The Liouvillian has no unique steady state for these parameters."""


class NotSymmetric(YFluorError, ValueError):
    pass


class DegenerateSpectrum(YFluorError):
    """Two dressed-state eigenvalues coincide, so labels are ambiguous."""


class StepTooLarge(YFluorError):
    """A population left [0, 1] during time propagation."""


class NotConverged(YFluorError):
    pass


class ConfigError(YFluorError, ValueError):
    pass


class UnknownKey(ConfigError):
    pass


class ParseError(ConfigError):
    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class MissingExperiment(ConfigError):
    pass
