"""Exact linear algebra over the rationals for desk-scale systems."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

UNIQUE = "unique"
INCONSISTENT = "inconsistent"
UNDERDETERMINED = "underdetermined"


def rank_exact(rows: Iterable[Sequence[int]]) -> int:
    """Rank of a rational matrix, reading rows one at a time into a reduced echelon basis.

    Stops as soon as the rank equals the column count, so tall systems of full column rank
    are cheap.
    """
    basis: List[Tuple[int, List[Fraction]]] = []
    width: Optional[int] = None
    for raw in rows:
        row = [Fraction(x) for x in raw]
        if width is None:
            width = len(row)
        for col, pivot_row in basis:
            lead = row[col]
            if lead:
                row = [a - lead * b for a, b in zip(row, pivot_row)]
        col = next((k for k, a in enumerate(row) if a), None)
        if col is None:
            continue
        lead = row[col]
        basis.append((col, [a / lead for a in row]))
        if len(basis) == width:
            break
    return len(basis)


@dataclass(frozen=True)
class ExactSolution:
    status: str
    values: Optional[List[Fraction]] = None
    rank: int = 0


def solve_exact(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> ExactSolution:
    """Gauss-Jordan elimination on the augmented matrix with Fraction entries."""
    if len(rows) != len(rhs):
        raise ValueError("row count and right-hand side length differ")
    if not rows:
        return ExactSolution(UNDERDETERMINED)
    a = np.array([[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)], dtype=object)
    n_rows, n_cols = a.shape
    n_vars = n_cols - 1
    pivots: List[int] = []
    r = 0
    for col in range(n_vars):
        pivot = next((i for i in range(r, n_rows) if a[i, col] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            a[[r, pivot]] = a[[pivot, r]]
        a[r] = a[r] / a[r, col]
        for i in range(n_rows):
            if i != r and a[i, col] != 0:
                a[i] = a[i] - a[i, col] * a[r]
        pivots.append(col)
        r += 1
        if r == n_rows:
            break
    if any(a[i, n_vars] != 0 for i in range(r, n_rows)):
        return ExactSolution(INCONSISTENT, rank=r)
    if r < n_vars:
        return ExactSolution(UNDERDETERMINED, rank=r)
    values = [Fraction(0)] * n_vars
    for i, col in enumerate(pivots):
        values[col] = Fraction(a[i, n_vars])
    return ExactSolution(UNIQUE, values, r)
