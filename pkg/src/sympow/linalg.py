"""Small exact linear algebra helpers used for graded-piece computations.

Matrices are lists of rows; entries are coefficient-field elements of the
ring being worked over, so everything stays exact.
"""

from __future__ import annotations


def rref(rows: list, field) -> tuple:
    """Reduced row echelon form.

    Returns (reduced_rows, pivot_columns).  Zero rows are dropped.  The
    input is not modified.
    """
    m = [list(r) for r in rows]
    zero, one = field.zero(), field.one()
    pivots = []
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, len(m)):
            if m[r][col] != zero:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        inv = field.inv(m[rank][col])
        if m[rank][col] != one:
            m[rank] = [field.mul(inv, x) for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != zero:
                factor = m[r][col]
                m[r] = [
                    field.sub(x, field.mul(factor, y))
                    for x, y in zip(m[r], m[rank])
                ]
        pivots.append(col)
        rank += 1
    return m[:rank], pivots


def rank(rows: list, field) -> int:
    return len(rref(rows, field)[0])


def kernel_basis(rows: list, field, ncols: int) -> list:
    """Basis of the right kernel of the matrix, one vector per free column."""
    reduced, pivots = rref(rows, field)
    pivot_set = set(pivots)
    zero, one = field.zero(), field.one()
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [zero] * ncols
        vec[free] = one
        for r, p in enumerate(pivots):
            vec[p] = field.neg(reduced[r][free])
        basis.append(vec)
    return basis
