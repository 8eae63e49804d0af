"""Exact integer linear algebra used as ground truth.

Everything here works on plain lists of Python ints and uses elimination or
trace recurrences only. Nothing in this module may call into the
cyclotomic/divisibility code: verdicts produced from polynomials are checked
against these results, so the two paths have to stay separate.
"""
from __future__ import annotations

from typing import Collection, Sequence

from .errors import ShapeError
from .polynomial import IntPolynomial

Matrix = list[list[int]]


def as_matrix(A: Sequence[Sequence[int]]) -> Matrix:
    rows = [list(map(int, r)) for r in A]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ShapeError("ragged matrix")
    return rows


def _require_square(A: Matrix) -> int:
    n = len(A)
    if any(len(r) != n for r in A):
        raise ShapeError(f"expected a square matrix, got {n}x{len(A[0]) if A else 0}")
    return n


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    if A and len(A[0]) != len(B):
        raise ShapeError("inner dimensions differ")
    cols = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in A]


def matadd(A, B) -> Matrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def matsub(A, B) -> Matrix:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def transpose(A) -> Matrix:
    return [list(c) for c in zip(*A)]


def _eliminate(A: Matrix):
    """Fraction-free (Bareiss) forward elimination with row pivoting.

    Returns the reduced matrix, the pivot columns and the number of row swaps.
    After k pivots each remaining entry is a (k+1)x(k+1) minor, so the
    division by the previous pivot is exact.
    """
    M = [row[:] for row in A]
    rows = len(M)
    cols = len(M[0]) if M else 0
    prev = 1
    r = 0
    swaps = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            M[r], M[p] = M[p], M[r]
            swaps += 1
        piv = M[r][c]
        for i in range(r + 1, rows):
            mi = M[i]
            f = mi[c]
            for j in range(c + 1, cols):
                q, rem = divmod(piv * mi[j] - f * M[r][j], prev)
                assert rem == 0, "Bareiss division was not exact"
                mi[j] = q
            mi[c] = 0
        pivots.append(c)
        prev = piv
        r += 1
    return M, pivots, swaps


def exact_determinant(A: Sequence[Sequence[int]]) -> int:
    M = as_matrix(A)
    n = _require_square(M)
    if n == 0:
        return 1
    R, pivots, swaps = _eliminate(M)
    if len(pivots) < n:
        return 0
    return -R[n - 1][n - 1] if swaps % 2 else R[n - 1][n - 1]


def exact_rank(A: Sequence[Sequence[int]]) -> int:
    M = as_matrix(A)
    if not M:
        return 0
    return len(_eliminate(M)[1])


def nullity(A: Sequence[Sequence[int]]) -> int:
    M = as_matrix(A)
    cols = len(M[0]) if M else 0
    return cols - exact_rank(M)


def exact_char_poly(A: Sequence[Sequence[int]]) -> IntPolynomial:
    """det(xI - A) by the Faddeev-LeVerrier recurrence.

    Every intermediate is an integer matrix and each trace division is exact
    because the resulting coefficients are integers.
    """
    M = as_matrix(A)
    n = _require_square(M)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    Mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        AM = matmul(M, Mk)
        c_prev = coeffs[n - k + 1]
        Mk = [[AM[i][j] + (c_prev if i == j else 0) for j in range(n)] for i in range(n)]
        AMk = matmul(M, Mk)
        tr = sum(AMk[i][i] for i in range(n))
        q, rem = divmod(-tr, k)
        assert rem == 0, "trace not divisible in Faddeev-LeVerrier step"
        coeffs[n - k] = q
    return IntPolynomial(coeffs)


def zero_root_multiplicity(p: IntPolynomial) -> int:
    """Number of leading zero coefficients, i.e. the multiplicity of x."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    return next(i for i, c in enumerate(p.coeffs) if c != 0)


def walk_count(
    A: Sequence[Sequence[int]],
    start: int,
    end: int,
    length: int,
    allowed: Collection[int] | None = None,
) -> int:
    """Number of walks start -> end of the given length.

    Every intermediate vertex must lie in ``allowed`` (all vertices if None).
    """
    if length < 1:
        raise ValueError("walk length must be >= 1")
    M = as_matrix(A)
    m = len(M)
    vec = [0] * m
    vec[start] = 1
    for step in range(length):
        vec = [sum(vec[k] * M[k][j] for k in range(m)) for j in range(m)]
        if step < length - 1 and allowed is not None:
            vec = [v if j in allowed else 0 for j, v in enumerate(vec)]
    return vec[end]


def matrix_power(A: Sequence[Sequence[int]], k: int) -> Matrix:
    M = as_matrix(A)
    out = identity(_require_square(M))
    for _ in range(k):
        out = matmul(out, M)
    return out
