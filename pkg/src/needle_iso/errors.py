"""Semantic exception hierarchy shared across the library."""


class NeedleIsoError(ValueError):
    """Base class for all domain errors raised by this package."""


class ZeroMass(NeedleIsoError):
    """A density integrates to (numerically) zero and cannot be normalized."""


class OutOfDomain(NeedleIsoError):
    """An abscissa, mass fraction or interval lies outside the valid domain."""


class InvalidOrder(NeedleIsoError):
    """Concavity order must be strictly positive."""


class InvalidMass(NeedleIsoError):
    """Mass thresholds must lie in (0, 1]."""


class NonIntegerPower(NeedleIsoError):
    """Binomial decomposition requires an integer power."""


class HypothesisViolated(NeedleIsoError):
    """A mass pair does not straddle 1/2 as the needle bounds require."""


class PreconditionFailed(NeedleIsoError):
    """A verified precondition (concavity, location of maximum) does not hold."""


class NotApplicable(NeedleIsoError):
    """The requested operation is undefined for this space family."""


class RetryExhausted(NeedleIsoError):
    """Random generation failed repeatedly to produce a valid object."""


class QuadratureError(NeedleIsoError):
    """Adaptive quadrature failed to reach the requested tolerance."""
