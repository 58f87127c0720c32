"""Exact integer linear algebra: determinants, solving, inversion, GF(2) systems.

Everything here works on plain Python integers, so results are exact at any
size; there is no overflow path.
"""

from __future__ import annotations

from fractions import Fraction

IntMatrix = tuple[tuple[int, ...], ...]


def det_bareiss(rows) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - head * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def solve_fractions(rows, rhs) -> list[Fraction] | None:
    """Solve a square system exactly; None if the matrix is singular."""
    n = len(rows)
    if len(rhs) != n or any(len(r) != n for r in rows):
        raise ValueError("shape mismatch")
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for col in range(n):
        pivot_row = next((i for i in range(col, n) if m[i][col] != 0), None)
        if pivot_row is None:
            return None
        m[col], m[pivot_row] = m[pivot_row], m[col]
        pivot = m[col][col]
        for i in range(n):
            if i == col:
                continue
            factor = m[i][col] / pivot
            if factor:
                m[i] = [a - factor * b for a, b in zip(m[i], m[col])]
    return [m[i][n] / m[i][i] for i in range(n)]


def solve_int(rows, rhs) -> tuple[int, ...]:
    """Solve a square system over the integers.

    Raises ValueError if the matrix is singular or the unique rational
    solution is not integral.
    """
    sol = solve_fractions(rows, rhs)
    if sol is None:
        raise ValueError("matrix is singular")
    if any(x.denominator != 1 for x in sol):
        raise ValueError("no integer solution")
    return tuple(int(x) for x in sol)


def inverse_unimodular(rows) -> IntMatrix:
    """Inverse of an integer matrix with determinant +-1, as an integer matrix."""
    n = len(rows)
    det = det_bareiss(rows)
    if det not in (1, -1):
        raise ValueError(f"matrix is not unimodular (determinant {det})")
    cols = []
    for j in range(n):
        unit = [1 if i == j else 0 for i in range(n)]
        cols.append(solve_int(rows, unit))
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def mat_vec(rows, vec) -> tuple[int, ...]:
    """Integer matrix times integer vector."""
    return tuple(sum(a * b for a, b in zip(row, vec)) for row in rows)


def gf2_solve(equations: list[tuple[int, int]], nvars: int) -> list[int]:
    """Solve a linear system over GF(2), rows given as (coefficient bitmask, rhs bit).

    Free variables are set to 0.  Raises ValueError naming the index of the
    first equation that makes the system inconsistent.
    """
    # (mask, rhs, origin index), reduced to row echelon form
    work: list[tuple[int, int, int]] = []
    pivot_of_col: dict[int, int] = {}
    for idx, (mask, rhs) in enumerate(equations):
        for col, row_pos in pivot_of_col.items():
            if (mask >> col) & 1:
                pmask, prhs, _ = work[row_pos]
                mask ^= pmask
                rhs ^= prhs
        if mask == 0:
            if rhs:
                raise ValueError(f"inconsistent equation at index {idx}")
            continue
        col = (mask & -mask).bit_length() - 1
        pivot_of_col[col] = len(work)
        work.append((mask, rhs, idx))
    # back-substitute, free variables 0
    solution = [0] * nvars
    for mask, rhs, _ in reversed(work):
        col = (mask & -mask).bit_length() - 1
        acc = rhs
        probe = mask >> (col + 1)
        j = col + 1
        while probe:
            if probe & 1:
                acc ^= solution[j]
            probe >>= 1
            j += 1
        solution[col] = acc
    return solution
