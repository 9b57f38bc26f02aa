"""Exception hierarchy shared by every braidforge module."""


class BraidError(Exception):
    """Base class for all braidforge errors."""


class ParameterError(BraidError, ValueError):
    """Out-of-range indices, strand mismatches, malformed parameters."""


class WordFormatError(ParameterError):
    """A text word could not be parsed.

    ``position`` is the 0-based index of the first offending token
    (0 is the header).
    """

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class UnsupportedParameters(ParameterError):
    """Twisted torus parameters outside what the braid construction supports."""


class HypothesisViolation(UnsupportedParameters):
    """The fiberedness theorem's hypothesis does not hold for these parameters."""


class RewriteError(BraidError):
    """A rewrite rule was applied where its left-hand side does not occur."""


class CapacityError(BraidError):
    """A configured size bound was exceeded."""


class MultiComponentError(BraidError):
    """The braid closure has more than one component where a knot is required."""


class PreconditionError(BraidError):
    """An operation's input precondition does not hold."""


class InternalError(BraidError):
    """An exactness assertion failed; always indicates a bug."""
