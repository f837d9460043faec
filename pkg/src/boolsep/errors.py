"""Exception hierarchy shared by all boolsep modules."""

from __future__ import annotations


class BoolsepError(Exception):
    """Base class for all errors raised by this package."""


class EmptyLabelSet(BoolsepError):
    """A or B is empty; labeled data requires both classes to be inhabited."""


class OverlappingLabels(BoolsepError):
    """A and B share a point."""


class LengthMismatch(BoolsepError):
    """An assignment's bit vector does not match the universe size."""


class ParseError(BoolsepError):
    """A document does not conform to the expected schema.

    The message carries the offending field or position.
    """


class ContradictoryPair(BoolsepError):
    """Both forms of a pair evaluate to 1 at the same point."""


class IndexOutOfRange(BoolsepError):
    """A variable index lies outside the universe."""


class MalformedDiagram(BoolsepError):
    """A decision diagram violates ordering or referential integrity."""


class Uncoverable(BoolsepError):
    """Some universe element is contained in no subset of the family."""


class InfeasibleInput(BoolsepError):
    """A solution handed to a mapping fails its feasibility precondition."""


class InfeasiblePair(BoolsepError):
    """A form pair handed to a mapping fails the pair feasibility check."""


class BudgetExceeded(BoolsepError):
    """A search budget ran out before optimality could be certified.

    Attributes:
        best_found: best feasible solution known when the budget ran out
            (may be None).
        lower_bound: certified lower bound on the optimal objective value.
    """

    def __init__(self, message: str, best_found=None, lower_bound: int | None = None):
        super().__init__(message)
        self.best_found = best_found
        self.lower_bound = lower_bound


class InvalidParams(BoolsepError):
    """Generator or solver parameters are out of range."""


class ConfigError(BoolsepError):
    """A benchmark suite configuration is malformed."""


class VerificationFailure(BoolsepError):
    """A solution failed re-verification, or a guaranteed inequality broke."""
