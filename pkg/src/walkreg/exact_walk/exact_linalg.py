"""Exact integer helpers: overflow-aware products, Frobenius pairings and rational rank."""
from fractions import Fraction
from typing import List, Sequence

import numpy as np

# Entries up to this bound keep int64 products exact
INT64_SAFE = 2 ** 62


def exact_product(left: np.ndarray, right: np.ndarray, entry_bound: int) -> np.ndarray:
    """
    Integer matrix product, switching to Python integers when needed.

    Args:
        entry_bound: Upper bound on every entry (and partial sum) of the result
    """
    if entry_bound < INT64_SAFE and left.dtype != object and right.dtype != object:
        return left @ right
    return left.astype(object) @ right.astype(object)


def frobenius(left: np.ndarray, right: np.ndarray) -> int:
    """<left, right>_F = sum of entrywise products, as a Python int."""
    return int((left.astype(object) * right.astype(object)).sum())


def exact_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by Gaussian elimination on Fractions."""
    matrix: List[List[Fraction]] = [[Fraction(int(v)) for v in row] for row in rows]
    if not matrix:
        return 0
    n_rows, n_cols = len(matrix), len(matrix[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if matrix[r][col] != 0), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        lead = matrix[rank][col]
        for r in range(rank + 1, n_rows):
            factor = matrix[r][col] / lead
            if factor:
                matrix[r] = [x - factor * y for x, y in zip(matrix[r], matrix[rank])]
        rank += 1
        if rank == n_rows:
            break
    return rank
