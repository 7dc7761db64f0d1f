"""
Exception hierarchy for the matching engine.

Validators report problems as data (lists of violation strings); constructors,
solvers and the market file parser raise one of the classes below.
"""

from typing import List, Optional


class MatchingError(Exception):
    """Base class for every error raised by the engine."""
    pass


class MarketValidationError(MatchingError):
    """Raised when a market (or team structure) violates its invariants."""

    def __init__(self, violations: List[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class SchemeValidationError(MatchingError):
    """Raised when a pi scheme violates its invariants."""

    def __init__(self, violations: List[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class AssignmentOwnershipError(MatchingError, ValueError):
    """Raised when an assignment is compared under a firm that does not own it."""
    pass


class SituationMismatchError(MatchingError, ValueError):
    """Raised when a situation is compared under a worker it does not involve."""
    pass


class UnknownAssignmentError(MatchingError, ValueError):
    """Raised when shares mention an assignment outside the acceptable collection."""
    pass


class InvalidMatchingError(MatchingError, ValueError):
    """Raised when a set of contracts gives some worker two contracts."""
    pass


class InvalidScheduleError(MatchingError, ValueError):
    """Raised when a schedule matching breaks its feasibility or slack equations."""
    pass


class ResourceBoundError(MatchingError):
    """Raised when an exhaustive search would exceed a configured bound."""
    pass


class PivotError(MatchingError):
    """Raised when a cardinal or ordinal pivot cannot be carried out."""
    pass


class NoOrdinalStartError(PivotError):
    """Raised when no agent row admits an assignment column outside its coalition."""
    pass


class InternalInconsistencyError(MatchingError):
    """Raised when a runtime invariant fails or an output does not re-verify."""
    pass


class MarketFileError(MatchingError):
    """Raised for syntax and semantic errors in a market file."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}" if line is not None else message)
