"""Exact Gaussian elimination over rationals.

One general routine serves both the link-cycle least-squares solve and the
stationary-distribution solve: reduce the augmented matrix to reduced row
echelon form, set free variables to zero, back-substitute.  All arithmetic is
on :class:`fractions.Fraction`, so there are no tolerances anywhere.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence


def solve_linear_system(
    rows: Sequence[Sequence], rhs: Sequence
) -> Optional[list[Fraction]]:
    """Solve ``rows @ x = rhs`` exactly, free variables pinned to zero.

    Accepts any rectangular system (entries int or Fraction).  Returns one
    exact solution, or None when the system is inconsistent.  When the matrix
    has full column rank the solution is unique.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    aug = [
        [Fraction(value) for value in row] + [Fraction(b)]
        for row, b in zip(rows, rhs, strict=True)
    ]
    pivot_cols: list[int] = []
    rank = 0
    for col in range(n):
        pivot_row = next((r for r in range(rank, m) if aug[r][col] != 0), None)
        if pivot_row is None:
            continue
        aug[rank], aug[pivot_row] = aug[pivot_row], aug[rank]
        pivot = aug[rank][col]
        aug[rank] = [value / pivot for value in aug[rank]]
        for r in range(m):
            if r != rank and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[rank])]
        pivot_cols.append(col)
        rank += 1
        if rank == m:
            break
    for r in range(rank, m):
        if aug[r][n] != 0:
            return None
    solution = [Fraction(0)] * n
    for r, col in enumerate(pivot_cols):
        solution[col] = aug[r][n]
    return solution
