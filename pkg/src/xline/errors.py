"""Exception hierarchy shared by every xline module."""


class XlineError(Exception):
    """Base class for all library errors."""


class ConfigError(XlineError, ValueError):
    """Bad user-supplied configuration (curve parameters, scheme ids, flags)."""


class InvalidCurve(ConfigError):
    pass


class DivisionByZero(XlineError, ZeroDivisionError):
    pass


class FieldTooLarge(XlineError):
    pass


class ExceptionalInput(XlineError):
    """Every applicable addition law has a vanishing denominator."""


class SamplingFailed(XlineError):
    pass


class DegenerateSampleBudgetExceeded(SamplingFailed):
    pass


class UndefinedAtPoint(XlineError):
    """The compression function has a vanishing denominator at the point."""


class OmegaUnavailable(XlineError):
    """A primitive cube root of unity is required but p != 1 mod 3."""


class UnsupportedScheme(XlineError):
    pass


class DegenerateOutput(XlineError):
    """A projective formula produced (0:0)."""


class EqualInputs(DegenerateOutput):
    pass


class ZeroBaseValue(DegenerateOutput):
    pass


class DegenerateLadderState(DegenerateOutput):
    pass


class InvalidScalar(XlineError, ValueError):
    pass


class PoleOfMap(XlineError):
    pass


class NotFound(XlineError):
    """Formula search exhausted its budget."""

    def __init__(self, message, max_bound_reached=False):
        super().__init__(message)
        self.max_bound_reached = max_bound_reached
