"""Exception hierarchy shared by all cartanbal modules."""


class CartanbalError(Exception):
    """Base class for all errors raised by this package."""


class InvalidSizeError(CartanbalError, ValueError):
    """A domain family was given sizes outside its admissible range."""


class DomainParseError(CartanbalError, ValueError):
    """A domain string could not be parsed (syntax, not size range)."""


class NonpositiveParameterError(CartanbalError, ValueError):
    """A metric parameter that must be positive was not."""


class PoleError(CartanbalError, ZeroDivisionError):
    """A factored rational function was evaluated at a denominator root."""


class BallNotAllowedError(CartanbalError, ValueError):
    """An operation defined only for rank >= 2 domains got a ball."""


class PreconditionError(CartanbalError, ValueError):
    """A stated precondition failed; the message names the inequality."""


class InternalConsistencyError(CartanbalError, AssertionError):
    """Two independent computation routes disagreed.  Must never fire."""


class SampleOutsideDomainError(CartanbalError, ValueError):
    """A numeric sample point lies outside the domain of definition."""


class TrivialSpaceError(CartanbalError, ValueError):
    """The weighted Hilbert space contains no nonzero analytic functions."""


class QuadratureFailureError(CartanbalError, RuntimeError):
    """Adaptive quadrature could not reach the requested tolerance."""
