"""Deterministic exact cover by backtracking (Algorithm X without the dancing links)."""
from collections import defaultdict
from typing import Dict, FrozenSet, Generic, Hashable, List, Optional, Sequence, Set, TypeVar

from ..errors import BudgetExceeded
from ..utils.logging import get_logger

logger = get_logger(__name__)

T = TypeVar("T", bound=Hashable)


class ExactCoverSolver(Generic[T]):
    """
    Choose subsets so that every element of the universe is covered exactly once.

    Branching always takes the smallest uncovered element and tries the subsets
    containing it in their given order, so the first cover found is the same on
    every run. The search is an explicit stack; depth can reach the universe size.
    """

    def __init__(self, universe: Sequence[T], subsets: Sequence[FrozenSet[T]], node_budget: int):
        self.universe = sorted(universe)
        self.subsets = list(subsets)
        self.node_budget = node_budget
        self.nodes = 0
        self.membership: Dict[T, List[int]] = defaultdict(list)
        for index, subset in enumerate(self.subsets):
            for element in subset:
                self.membership[element].append(index)

    def _first_uncovered(self, covered: Set[T]) -> Optional[T]:
        return next((e for e in self.universe if e not in covered), None)

    def solve(self) -> Optional[List[int]]:
        """
        Returns:
            Indices of the chosen subsets, or None when no exact cover exists

        Raises:
            BudgetExceeded: More than node_budget branch nodes were visited
        """
        covered: Set[T] = set()
        chosen: List[int] = []
        start = self._first_uncovered(covered)
        if start is None:
            return []
        if any(not self.membership[e] for e in self.universe):
            return None

        # each frame: [element being covered, next candidate position]
        frames: List[list] = [[start, 0]]
        while frames:
            element, position = frames[-1]
            candidates = self.membership[element]
            advanced = False
            while position < len(candidates):
                index = candidates[position]
                position += 1
                if covered.isdisjoint(self.subsets[index]):
                    frames[-1][1] = position
                    self.nodes += 1
                    if self.nodes > self.node_budget:
                        raise BudgetExceeded(f"Exact cover search exceeded {self.node_budget} nodes")
                    chosen.append(index)
                    covered |= self.subsets[index]
                    following = self._first_uncovered(covered)
                    if following is None:
                        logger.debug(f"Exact cover found after {self.nodes} nodes")
                        return list(chosen)
                    frames.append([following, 0])
                    advanced = True
                    break
            if not advanced:
                frames.pop()
                if chosen:
                    covered -= self.subsets[chosen.pop()]

        logger.debug(f"Exact cover search exhausted after {self.nodes} nodes")
        return None
