"""Dense exact Gaussian elimination over Fractions for small systems.

Used by the degreewise hexagon solver and the associator-polynomial
decompositions; matrices here have at most a few dozen rows.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["solve_exact", "rref"]


def rref(matrix: list) -> tuple:
    """Reduced row echelon form (in place on a copy); returns (rows, pivot_cols)."""
    rows = [list(r) for r in matrix]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        pr = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return rows, pivots


def solve_exact(matrix: list, rhs: list) -> tuple:
    """Solve A x = b exactly.

    Returns (particular, kernel_basis) where ``particular`` sets every free
    variable to zero, or (None, kernel_basis) when the system is inconsistent.
    """
    n_cols = len(matrix[0]) if matrix else 0
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = rref(aug)
    piv_set = set(pivots)
    if n_cols in piv_set:
        # pivot in the augmented column: inconsistent
        kernel = _kernel_from_rref(
            [r[:n_cols] for r in rows], [p for p in pivots if p < n_cols], n_cols
        )
        return None, kernel
    particular = [Fraction(0)] * n_cols
    for r, c in enumerate(pivots):
        particular[c] = rows[r][n_cols]
    kernel = _kernel_from_rref([r[:n_cols] for r in rows], pivots, n_cols)
    return particular, kernel


def _kernel_from_rref(rows: list, pivots: list, n_cols: int) -> list:
    free_cols = [c for c in range(n_cols) if c not in set(pivots)]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * n_cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(v)
    return basis
