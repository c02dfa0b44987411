"""Value types for the floating-point spectral side."""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from .graph import Graph


@dataclass(frozen=True)
class Spectrum:
    """Distinct eigenvalues in strictly decreasing order with multiplicities."""

    values: Tuple[float, ...]
    multiplicities: Tuple[int, ...]
    tau: float
    # column indices of the eigenvector matrix belonging to each cluster
    clusters: Tuple[Tuple[int, ...], ...] = field(default=(), repr=False, compare=False)

    @property
    def d(self) -> int:
        return len(self.values) - 1

    def pairs(self) -> List[Tuple[float, int]]:
        return list(zip(self.values, self.multiplicities))

    def multiplicity(self, theta: float, tol: Optional[float] = None) -> int:
        """Multiplicity of theta, 0 if it is not an eigenvalue."""
        tol = self.tau if tol is None else tol
        for value, mult in self.pairs():
            if abs(value - theta) <= tol:
                return mult
        return 0

    def __str__(self) -> str:
        return "{" + ", ".join(f"{value:.6g}^{mult}" for value, mult in self.pairs()) + "}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "eigenvalues": [{"value": value, "multiplicity": mult} for value, mult in self.pairs()],
            "tau": self.tau,
        }


@dataclass(frozen=True, eq=False)
class Idempotent:
    """
    Minimal idempotent E = U U^T of one eigenvalue.

    alphas[j] is the mean of E over the distance-j class, constant[j] says
    whether E is constant there within tolerance and witnesses[j] holds the
    most deviating pair when it is not.
    """

    theta: float
    rank: int
    matrix: np.ndarray
    basis: np.ndarray
    alphas: Tuple[float, ...]
    constant: Tuple[bool, ...]
    witnesses: Tuple[Optional[Tuple[int, int]], ...] = ()

    @property
    def alpha0(self) -> float:
        return self.alphas[0]

    def order(self) -> Optional[int]:
        """Largest t with E constant on every class up to distance t, None if the diagonal varies."""
        t = None
        for j, flag in enumerate(self.constant):
            if not flag:
                break
            t = j
        return t


@dataclass(frozen=True, eq=False)
class Representation:
    """Vertex x maps to row x of the eigenbasis; <x^, y^> = E_xy."""

    theta: float
    vectors: np.ndarray
    alpha0: float

    def vector(self, x: int) -> np.ndarray:
        return self.vectors[x]

    def cosine(self, x: int, y: int) -> float:
        return float(self.vectors[x] @ self.vectors[y]) / self.alpha0


@dataclass(frozen=True)
class CoverReport:
    """How the identification classes of a representation sit inside the graph."""

    classes_independent: bool
    equitable: bool
    equal_sizes: bool
    quotient_degrees: Tuple[int, ...]
    quotient_is_cycle: bool
    predicted_s: Optional[float] = None
    measured_s: Optional[Tuple[int, int]] = None

    @property
    def is_cover(self) -> bool:
        return self.classes_independent and self.equitable and self.equal_sizes

    def to_dict(self) -> Dict[str, Any]:
        return {
            "classes_independent": self.classes_independent,
            "equitable": self.equitable,
            "equal_sizes": self.equal_sizes,
            "is_cover": self.is_cover,
            "quotient_degrees": list(self.quotient_degrees),
            "quotient_is_cycle": self.quotient_is_cycle,
            "predicted_s": self.predicted_s,
            "measured_s": list(self.measured_s) if self.measured_s else None,
        }


@dataclass(frozen=True, eq=False)
class QuotientResult:
    partition: Tuple[Tuple[int, ...], ...]
    quotient: Graph
    cover: CoverReport
