"""Exception types shared across the package.

Every error raised on a violated contract derives from GibbsChainError so
callers (notably the CLI) can distinguish domain failures from bugs.
"""


class GibbsChainError(Exception):
    """Base class for all domain errors."""


class EmptySupport(GibbsChainError):
    """A measure ended up with zero mass everywhere."""


class SupportMismatch(GibbsChainError):
    """Two measures live on different model spaces or supports."""


class NotAbsolutelyContinuous(GibbsChainError):
    """P puts mass where Q has none, so dP/dQ does not exist."""


class CumulantDiverged(GibbsChainError):
    """A log-normalizer came out non-finite."""


class DimensionMismatch(GibbsChainError):
    """Model, pattern, or space dimensions disagree."""


class EmptyInput(GibbsChainError):
    """An operation that needs at least one element got none."""


class ParseError(GibbsChainError):
    """A data file could not be parsed; the message names row and column."""


class LengthMismatch(GibbsChainError):
    """Parallel lists (risk vectors, regularization factors) differ in length."""


class RadiusUnreachable(GibbsChainError):
    """Requested divergence radius is outside (0, gamma_max)."""

    def __init__(self, message: str, gamma_max: float | None = None):
        super().__init__(message)
        self.gamma_max = gamma_max


class BracketExhausted(GibbsChainError):
    """The bisection bracket does not straddle the target value."""


class InvalidConfig(GibbsChainError):
    """A run configuration is malformed; the message names the field path."""


class SerializationError(GibbsChainError):
    """A wire payload is malformed; the message names field or byte offset."""


class ProtocolError(GibbsChainError):
    """A client received a message its state machine does not accept."""


class PreconditionUnmet(GibbsChainError):
    """A verification check was asked to run outside its stated assumptions."""


class NonSPD(GibbsChainError):
    """A matrix that must be symmetric positive-definite is not."""


class GridTooCoarse(UserWarning):
    """Advisory: grid bounds clip non-negligible posterior mass."""
