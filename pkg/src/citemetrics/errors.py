"""Exception hierarchy shared by every module."""


class CitemetricsError(Exception):
    """Base class for all citemetrics errors."""


class RecordParseError(CitemetricsError):
    """Malformed input file; the message names the offending line or field."""


class RecordValidationError(CitemetricsError):
    """A record violates an invariant; the message names the publication id."""


class FidelityError(CitemetricsError):
    """The operation needs richer data (citation events, author counts)
    than the record carries."""


class UndefinedInputError(CitemetricsError):
    """The requested quantity is undefined for this input (e.g. empty record)."""


class DomainError(CitemetricsError):
    """A parameter lies outside the mathematical domain of the formula."""


class DegenerateCohortError(CitemetricsError):
    """The cohort is too small or degenerate for a regression fit."""
