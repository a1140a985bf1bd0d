"""
Exact integer linear algebra for Kirchhoff matrices.

Matrices are numpy arrays of ``dtype=object`` so every entry is a Python int
and products never overflow.
"""

from math import gcd
from typing import Sequence, Tuple

import numpy as np

from app.core.exceptions import SingularMatrix


def as_exact(rows) -> np.ndarray:
    """Copy ``rows`` into an object array of Python ints."""
    data = [[int(v) for v in row] for row in rows]
    arr = np.empty((len(data), len(data[0]) if data else 0), dtype=object)
    for i, row in enumerate(data):
        arr[i, :] = row
    return arr


def to_rows(arr: np.ndarray) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(int(v) for v in row) for row in arr)


def bareiss_determinant(matrix) -> int:
    """Fraction-free Gaussian elimination; every division is exact."""
    m = [list(map(int, row)) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    previous = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]) // previous
            m[i][k] = 0
        previous = pivot
    return sign * m[n - 1][n - 1]


def adjugate(matrix) -> Tuple[int, np.ndarray]:
    """Return ``(det, adj)`` with ``matrix @ adj == det * I``.

    Integer-preserving Gauss-Jordan elimination on ``[matrix | I]``: after the
    last pivot the left block is ``det * I`` and the right block the adjugate.
    """
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1, np.zeros((0, 0), dtype=object)
    m = [a[i] + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    sign = 1
    previous = 1
    for k in range(n):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                raise SingularMatrix(f"{n}x{n} matrix is singular")
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(n):
            if i == k:
                continue
            factor = m[i][k]
            m[i] = [(pivot * m[i][j] - factor * m[k][j]) // previous for j in range(2 * n)]
        previous = pivot

    det = sign * m[0][0]
    adj = np.array([[sign * m[i][n + j] for j in range(n)] for i in range(n)], dtype=object)
    return det, adj


def row_gcds(matrix: np.ndarray) -> Tuple[int, ...]:
    return tuple(gcd(*(int(v) for v in row)) if len(row) else 0 for row in matrix)


def exact_matmul(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    return np.dot(left, right)


def identity(n: int, scale: int = 1) -> np.ndarray:
    eye = np.zeros((n, n), dtype=object)
    for i in range(n):
        eye[i, i] = scale
    return eye


def is_symmetric(matrix: Sequence[Sequence[int]]) -> bool:
    n = len(matrix)
    return all(matrix[i][j] == matrix[j][i] for i in range(n) for j in range(i + 1, n))
