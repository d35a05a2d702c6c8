from __future__ import annotations

from typing import Any, Dict, Optional


class MotivicPVError(Exception):
    """Base error: a short reason plus an optional JSON-ready detail."""

    exit_code = 3

    def __init__(self, reason: str, detail: Optional[Any] = None):
        super().__init__(reason)
        self.reason = reason
        self.detail = detail

    @property
    def name(self) -> str:
        return type(self).__name__

    def to_dict(self) -> Dict[str, Any]:
        return {"error": self.name, "reason": self.reason, "detail": self.detail}


class ValidationError(MotivicPVError):
    """Malformed input (exit code 2)."""

    exit_code = 2


class ComputationError(MotivicPVError):
    """Well-formed input that a computation rejects (exit code 3)."""

    exit_code = 3


# -------------------------
# validation
# -------------------------
class ParseError(ValidationError):
    pass


class ZeroNormal(ValidationError):
    pass


class DuplicateHyperplane(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class DegreeCondition(ValidationError):
    pass


class InvalidExponent(ValidationError):
    pass


class NotAChain(ValidationError):
    pass


class NotNested(ValidationError):
    pass


class NotIntersectionClosed(ValidationError):
    pass


# -------------------------
# computation
# -------------------------
class LogarithmicPole(ComputationError):
    pass


class NonDivisible(ComputationError):
    pass


class NegativeExponentDetected(ComputationError):
    pass


class NonIntegralCoefficient(ComputationError):
    pass


class NotEssential(ComputationError):
    pass


class Decomposable(ComputationError):
    pass


class WitnessSearchFailed(ComputationError):
    pass


class IntegerDirection(ComputationError):
    pass


class InternalError(ComputationError):
    """An unexpected failure, reported in the result document instead of a traceback."""

    @classmethod
    def wrap(cls, exc: BaseException) -> "InternalError":
        return cls(f"{type(exc).__name__}: {exc}", {"exception": type(exc).__name__})
