"""Exceptions raised by the zz_strips package.

Every error derives from ZZError so callers (the CLI and the HTTP app) can
catch the whole family at once and map it to an exit code or a status code.
"""


class ZZError(Exception):
    """Base class for all zz_strips errors."""


class StripParseError(ZZError, ValueError):
    """A strip description could not be parsed."""


class InvalidStripError(ZZError, ValueError):
    """A strip failed structural validation."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NonKekuleanError(ZZError):
    """The strip has a negative interface order, so no DIB poset exists."""


class GuardExceededError(ZZError, RuntimeError):
    """A brute-force enumeration would exceed its configured limit."""

    def __init__(self, what, limit, actual):
        super().__init__(f"{what}: {actual} exceeds the limit of {limit}")
        self.what = what
        self.limit = limit
        self.actual = actual


class OrderMapError(ZZError, ValueError):
    """A map A -> [n] is not strictly order-preserving or leaves the poset."""


class KekuleAssignmentError(ZZError, ValueError):
    """A DIB position assignment (or label word) is not a valid structure."""
