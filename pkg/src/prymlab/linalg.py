"""Exact dense linear algebra over the rationals.

Only what the Riemann-Roch solver needs: a deterministic right-null-space
computation.  Pivoting is by leftmost column with the first nonzero row, all
arithmetic is exact, so identical inputs always give identical bases.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence[Fraction]]


def kernel_basis(matrix: Matrix, cols: int) -> list[list[Fraction]]:
    """Basis of the right null space of an exact rational matrix.

    The matrix is given as an iterable of rows (each of length `cols`; the
    row count may be zero, which is why `cols` is explicit).  Returns one
    vector per free column, ordered by free column index, each scaled so its
    first nonzero entry is 1; stacked as rows the result is in reduced
    echelon form.  The dimension is cols - rank.
    """
    rows = [list(r) for r in matrix]
    for r in rows:
        if len(r) != cols:
            raise ValueError("ragged matrix")

    # Gauss-Jordan to reduced row echelon form.
    pivots: list[int] = []
    pivot_row = 0
    for col in range(cols):
        sel = None
        for i in range(pivot_row, len(rows)):
            if rows[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        rows[pivot_row], rows[sel] = rows[sel], rows[pivot_row]
        row = rows[pivot_row]
        inv = 1 / Fraction(row[col])
        for j in range(col, cols):
            row[j] = row[j] * inv
        for i in range(len(rows)):
            if i == pivot_row:
                continue
            factor = rows[i][col]
            if factor:
                other = rows[i]
                for j in range(col, cols):
                    other[j] = other[j] - factor * row[j]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == len(rows):
            break

    pivot_set = set(pivots)
    basis: list[list[Fraction]] = []
    for free in range(cols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * cols
        vec[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -Fraction(rows[i][free])
        lead = next(c for c in vec if c != 0)
        if lead != 1:
            inv = 1 / lead
            vec = [c * inv for c in vec]
        basis.append([Fraction(c) for c in vec])
    return basis


def matrix_rank(matrix: Matrix, cols: int) -> int:
    """Rank by forward elimination, exact."""
    rows = [list(r) for r in matrix]
    rank = 0
    for col in range(cols):
        sel = None
        for i in range(rank, len(rows)):
            if rows[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        row = rows[rank]
        for i in range(rank + 1, len(rows)):
            factor = rows[i][col]
            if factor:
                scale = factor / row[col]
                other = rows[i]
                for j in range(col, cols):
                    other[j] = other[j] - scale * row[j]
        rank += 1
        if rank == len(rows):
            break
    return rank
