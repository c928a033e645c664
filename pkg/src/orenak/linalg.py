"""Exact linear algebra over Q plus fraction-free determinants over rings.

The scalar side is a plain dense row-reduction over `Fraction` entries:
enough for the affine solves and kernel computations the rest of the
package needs, with no floating point anywhere.  ``NoSolution`` is reported
as a ``None`` return value, never as an exception.

The ring side computes determinants of matrices whose entries live in a
commutative ring with exact division (polynomials, tensor-square elements)
via Bareiss elimination, with a naive cofactor expansion kept as an
independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "AffineSolution",
    "det_cofactor",
    "det_over_ring",
    "kernel",
    "rref",
    "solve_affine",
]


def _clone(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows):
    """Reduced row echelon form. Returns (new_rows, pivot_columns)."""
    rows = _clone(rows)
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        scale = rows[r][col]
        rows[r] = [x / scale for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


@dataclass
class AffineSolution:
    """One solution of A x = b plus a basis of the homogeneous kernel."""

    particular: list[Fraction]
    kernel: list[list[Fraction]]


def solve_affine(rows, rhs):
    """Solve A x = b exactly.

    Returns an :class:`AffineSolution` (particular solution with all free
    variables set to zero, kernel basis one vector per free variable), or
    ``None`` when the system is inconsistent.
    """
    if len(rows) != len(rhs):
        raise ValueError("matrix and right-hand side sizes differ")
    if not rows:
        return AffineSolution([], [])
    ncols = len(rows[0])
    augmented = [list(row) + [b] for row, b in zip(rows, rhs)]
    reduced, pivots = rref(augmented)
    if ncols in pivots:
        return None  # a pivot in the constant column: inconsistent
    particular = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        particular[col] = reduced[r][ncols]
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for free in free_cols:
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, col in enumerate(pivots):
            vec[col] = -reduced[r][free]
        basis.append(vec)
    return AffineSolution(particular, basis)


def kernel(rows, ncols=None):
    """Basis of the null space of A, one vector per free column.

    ``ncols`` is only consulted when ``rows`` is empty (no constraints), in
    which case the standard basis of the full space comes back.
    """
    if not rows:
        if ncols is None:
            raise ValueError("kernel of an empty constraint list needs ncols")
        basis = []
        for i in range(ncols):
            vec = [Fraction(0)] * ncols
            vec[i] = Fraction(1)
            basis.append(vec)
        return basis
    rhs = [Fraction(0)] * len(rows)
    solution = solve_affine(rows, rhs)
    assert solution is not None  # homogeneous systems are always consistent
    return solution.kernel


# -------------------------------------------------------------------- ring determinants


def _ring_div(a, b):
    """Exact division dispatch: Fractions divide, ring elements divexact."""
    if isinstance(a, Fraction):
        return a / b
    return a.divexact(b)


def _is_zero(a):
    if isinstance(a, Fraction):
        return a == 0
    return a.is_zero


def det_over_ring(matrix):
    """Exact determinant of a square matrix over a commutative domain.

    Entries must support ``*``, ``-`` and exact division (``divexact`` for
    ring elements, true division for Fractions).  Uses fraction-free Bareiss
    elimination with row pivoting; every intermediate division is exact.
    """
    size = len(matrix)
    if size == 0:
        raise ValueError("empty matrix has no determinant")
    for row in matrix:
        if len(row) != size:
            raise ValueError("determinant requires a square matrix")
    if size == 1:
        return matrix[0][0]
    rows = [list(row) for row in matrix]
    sign = 1
    previous_pivot = None
    for k in range(size - 1):
        if _is_zero(rows[k][k]):
            swap = None
            for i in range(k + 1, size):
                if not _is_zero(rows[i][k]):
                    swap = i
                    break
            if swap is None:
                return rows[k][k]  # whole column is zero: determinant vanishes
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                value = rows[i][j] * pivot - rows[i][k] * rows[k][j]
                if previous_pivot is not None:
                    value = _ring_div(value, previous_pivot)
                rows[i][j] = value
        previous_pivot = pivot
    result = rows[size - 1][size - 1]
    if sign < 0:
        result = -result
    return result


def det_cofactor(matrix):
    """Determinant by first-row cofactor expansion (independent slow path)."""
    size = len(matrix)
    if size == 0:
        raise ValueError("empty matrix has no determinant")
    for row in matrix:
        if len(row) != size:
            raise ValueError("determinant requires a square matrix")
    if size == 1:
        return matrix[0][0]
    total = None
    for j in range(size):
        entry = matrix[0][j]
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * det_cofactor(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total
