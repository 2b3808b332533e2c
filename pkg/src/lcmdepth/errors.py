"""Exception hierarchy shared by all modules."""


class LcmDepthError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(LcmDepthError, ValueError):
    """Exponent vectors of different ambient dimension were combined."""


class DegenerateQuotientError(LcmDepthError, ValueError):
    """A pair J, I is not a proper quotient (J = I, or J not contained in I)."""


class UndefinedInvariantError(LcmDepthError, ValueError):
    """The invariant is not defined for this input (e.g. no generators)."""


class PreconditionError(LcmDepthError, ValueError):
    pass


class InvariantError(LcmDepthError):
    """An internal consistency check failed."""


class NotFoundError(LcmDepthError, KeyError):
    pass


class ResourceCapError(LcmDepthError):
    """A configured size cap was exceeded."""


class BoundExceededError(ResourceCapError):
    """Order-dimension search passed ``d_max`` without finding a realizer."""


class GenerationError(LcmDepthError):
    pass


class ParseError(LcmDepthError, ValueError):
    pass
