"""
Exception hierarchy for walkreg.

Input problems derive from ValueError, numerical and theorem failures from
RuntimeError, so callers that only know the builtin types still catch them.
"""
from typing import Any, Dict, Optional, Tuple


class WalkRegError(Exception):
    """Base class for every error raised by walkreg."""


class GraphInputError(WalkRegError, ValueError):
    """Malformed graph input, unknown catalog entry or invalid vertex."""


class Graph6Error(GraphInputError):
    """A graph6 record could not be decoded or encoded."""


class PreconditionError(WalkRegError, ValueError):
    """An operation was called on a graph outside its domain."""


class ConstancyError(WalkRegError, ValueError):
    """A quantity that must depend only on distance does not."""

    def __init__(self, message: str, distance: int, witness: Tuple[int, ...], values: Optional[Tuple[Any, Any]] = None):
        super().__init__(message)
        self.distance = distance
        self.witness = witness
        self.values = values


class NumericalError(WalkRegError, RuntimeError):
    """Floating-point result failed a tolerance or consistency check."""


class OracleDisagreement(NumericalError):
    """The exact and the spectral walk-regularity orders differ."""


class TheoremViolation(WalkRegError, RuntimeError):
    """A statement that is proven to hold failed on the analysed graph."""

    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.witness = witness or {}


class BudgetExceeded(WalkRegError, RuntimeError):
    """A search cap (clique count or exact-cover nodes) was exhausted."""
