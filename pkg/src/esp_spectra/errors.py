"""Exception types raised across the package."""


class EspSpectraError(Exception):
    """Base class for all package errors."""


class DegreeError(EspSpectraError, ValueError):
    """An elementary symmetric degree or construction parameter is out of range."""


class DimensionError(EspSpectraError, ValueError):
    """Vector or matrix dimensions do not match."""


class PoleError(EspSpectraError, ZeroDivisionError):
    """A rational function was evaluated where its denominator vanishes."""


class NotHyperbolicError(EspSpectraError):
    """A univariate restriction was found to have non-real roots."""


class GuardExceeded(EspSpectraError):
    """A brute-force routine was asked to run beyond its size guard."""


class InconclusiveError(EspSpectraError):
    """Every sampled point was a pole, so nothing could be checked."""


class InadmissibleBasePoint(EspSpectraError, ValueError):
    """Some linear form vanishes at the requested base point."""
