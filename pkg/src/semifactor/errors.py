"""Exception hierarchy shared by every engine."""


class SemifactorError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(SemifactorError, ValueError):
    """An input lies outside the domain of an operation (zero, negative, non-member...)."""


class ParseError(SemifactorError, ValueError):
    """Malformed textual input.

    ``position`` is the 0-based character offset where parsing failed.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class CapacityError(SemifactorError):
    """A configured cap (degree, depth, magnitude, budget) was exceeded."""
