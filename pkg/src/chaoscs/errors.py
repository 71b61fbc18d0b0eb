"""Exception hierarchy shared across the package."""


class ChaosCsError(Exception):
    """Base class for all errors raised by this package."""


class DivergenceError(ChaosCsError):
    """A trajectory left the finite domain during integration.

    Carries ``time`` (approximate integration time of the first non-finite
    sample) when known.
    """

    def __init__(self, message, time=None):
        super().__init__(message)
        self.time = time


class DegenerateSequenceError(ChaosCsError):
    """A sequence has zero variance (or zero range) where spread is required."""


class LengthMismatchError(ChaosCsError):
    """Sequence length does not match the requested matrix size."""


class DimensionMismatchError(ChaosCsError):
    """Operand shapes are incompatible."""


class SingularGramError(ChaosCsError):
    """The Gram matrix of the measurement operator is numerically singular."""


class ZeroColumnError(ChaosCsError):
    """A basis contains a zero column and cannot be normalized."""


class TooLargeError(ChaosCsError):
    """A brute-force computation exceeds its desk-scale guard."""


class NoCrossingError(ChaosCsError):
    """An error-rate sweep never crossed the requested threshold."""
