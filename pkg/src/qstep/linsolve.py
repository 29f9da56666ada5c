"""Gaussian elimination with partial pivoting for small dense complex systems."""

from __future__ import annotations

from typing import List, Sequence

import numpy as np

from .errors import SingularMatrix

MAX_CONDITION = 1e12


def gauss_solve(A: Sequence[Sequence[complex]], b: Sequence[complex]) -> List[complex]:
    n = len(b)
    M = [[complex(x) for x in row] + [complex(b[i])] for i, row in enumerate(A)]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(M[r][col]))
        if M[piv][col] == 0:
            raise SingularMatrix(f"zero pivot in column {col}")
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
        pivot_row = M[col]
        for r in range(col + 1, n):
            f = M[r][col] / pivot_row[col]
            if f != 0:
                row = M[r]
                for c in range(col, n + 1):
                    row[c] -= f * pivot_row[c]
    x = [0j] * n
    for r in range(n - 1, -1, -1):
        s = M[r][n] - sum(M[r][c] * x[c] for c in range(r + 1, n))
        x[r] = s / M[r][r]
    return x


def condition_number(A) -> float:
    """2-norm condition number (inf when singular)."""
    return float(np.linalg.cond(np.asarray(A, dtype=complex)))


def checked_solve(A, b, max_condition: float = MAX_CONDITION) -> List[complex]:
    cond = condition_number(A)
    if not cond <= max_condition:
        raise SingularMatrix(f"condition number {cond:.3g} exceeds {max_condition:.1g}")
    return gauss_solve(A, b)
