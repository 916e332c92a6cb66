"""Exception types shared across the toolkit."""


class CollatzLabError(Exception):
    """Base class for all toolkit errors."""


class DomainError(CollatzLabError, ValueError):
    """Input outside an operation's domain (e.g. the glide of 1)."""


class LimitExceeded(CollatzLabError):
    """An iteration hit its step budget before finishing.

    Carries the partial result when one is available, so callers can see how
    far the walk got before retrying with a larger budget.  Raised instead of
    silently truncating: a truncated walk must never look like a verified one.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class InvalidPolyline(CollatzLabError, ValueError):
    """Vertex counts that do not describe any positive integer."""


class PatternMismatch(CollatzLabError, ValueError):
    """A vertex-count sequence does not fit the requested cycle pattern."""
