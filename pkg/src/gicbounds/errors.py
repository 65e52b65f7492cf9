"""Exception types raised by :mod:`gicbounds`."""


class GICError(ValueError):
    """Base class for all domain errors in this package."""


class RegimeError(GICError):
    """The channel parameters fall outside the regime a bound applies to."""


class DomainError(GICError):
    """An argument lies outside the domain of a formula."""


class InfeasibleGridError(GICError):
    """Every grid point of an optimization was infeasible."""
