"""Exact linear algebra on small dense matrices.

Integer matrices go through fraction-free (Bareiss) elimination so all
intermediate values stay integral; rational matrices use plain Gaussian
elimination over Fraction.  Matrices are lists of row lists.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def det_int(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
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
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rank_int(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix, fraction-free elimination."""
    if not matrix or not matrix[0]:
        return 0
    m = [list(row) for row in matrix]
    rows, cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(cols):
        pivot = None
        for i in range(rank, rows):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(rank + 1, rows):
            for j in range(col + 1, cols):
                m[i][j] = (m[i][j] * m[rank][col] - m[i][col] * m[rank][j]) // prev
            m[i][col] = 0
        prev = m[rank][col]
        rank += 1
        if rank == rows:
            break
    return rank


def rank_frac(matrix: Sequence[Sequence[Fraction | int]]) -> int:
    """Rank over the rationals via exact Gaussian elimination."""
    if not matrix or not matrix[0]:
        return 0
    m = [[Fraction(x) for x in row] for row in matrix]
    rows, cols = len(m), len(m[0])
    rank = 0
    for col in range(cols):
        pivot = None
        for i in range(rank, rows):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = m[rank][col]
        for i in range(rank + 1, rows):
            if m[i][col] != 0:
                f = m[i][col] / inv
                for j in range(col, cols):
                    m[i][j] -= f * m[rank][j]
        rank += 1
        if rank == rows:
            break
    return rank


def mat_vec(matrix: Sequence[Sequence[int]], vec: Sequence[Fraction | int]) -> list[Fraction]:
    return [sum((Fraction(a) * Fraction(x) for a, x in zip(row, vec)), Fraction(0)) for row in matrix]


def transpose(matrix: Sequence[Sequence[int]]) -> list[list[int]]:
    if not matrix:
        return []
    return [list(col) for col in zip(*matrix)]


def submatrix(
    matrix: Sequence[Sequence[int]], rows: Sequence[int], cols: Sequence[int]
) -> list[list[int]]:
    return [[matrix[i][j] for j in cols] for i in rows]
