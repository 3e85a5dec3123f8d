"""
Domain errors raised by qtcatalan.

Precondition failures are ValueErrors so callers that only care about
"bad input" can catch the builtin; the CLI maps them to exit code 2.
"""


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


class InexactDivisionError(ArithmeticError):
    """Polynomial division left a nonzero remainder."""


class InterpolationError(RuntimeError):
    """Interpolated polynomial failed its post-hoc certification."""


class InconsistencyError(RuntimeError):
    """Two computations that must agree did not (signals a bug)."""


class SearchExhaustedError(LookupError):
    """A bounded search finished without finding a witness."""


class RepeatedPointError(ValueError):
    """A point multiset that must be a set contains a repeated pair."""

    def __init__(self, message: str, witness: dict):
        super().__init__(message)
        self.witness = witness
