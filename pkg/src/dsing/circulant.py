"""Circulant and anti-circulant matrices and the cyclotomic singularity test.

A circulant ``circ(y)`` has entry (i, j) = y[(j - i) mod n]; an
anti-circulant with first row x has entry (i, j) = x[(i + j) mod n]
(0-based indices). Circulants of size n multiply like polynomials modulo
x^n - 1, read off their first rows.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotReducedError, ShapeError
from .oracle import matmul
from .polynomial import (
    IntPolynomial,
    cyclotomic,
    divides,
    divisors,
    euler_totient,
    reduce_mod_xn_minus_1,
)


@dataclass(frozen=True)
class CirculantMatrix:
    first_row: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.first_row)

    def expand(self) -> list[list[int]]:
        y, n = self.first_row, self.n
        return [[y[(j - i) % n] for j in range(n)] for i in range(n)]

    def polynomial(self) -> IntPolynomial:
        return IntPolynomial(self.first_row)

    def __matmul__(self, other: CirculantMatrix) -> CirculantMatrix:
        return circulant_multiply(self, other)


@dataclass(frozen=True)
class AntiCirculantMatrix:
    first_row: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.first_row)

    def expand(self) -> list[list[int]]:
        x, n = self.first_row, self.n
        return [[x[(i + j) % n] for j in range(n)] for i in range(n)]


def circ(first_row: Sequence[int]) -> CirculantMatrix:
    return CirculantMatrix(tuple(int(v) for v in first_row))


def anticirc(first_row: Sequence[int]) -> AntiCirculantMatrix:
    return AntiCirculantMatrix(tuple(int(v) for v in first_row))


def expand(C: CirculantMatrix | AntiCirculantMatrix) -> list[list[int]]:
    return C.expand()


def _square_size(B: Sequence[Sequence[int]]) -> int:
    n = len(B)
    if any(len(row) != n for row in B):
        raise ShapeError("matrix is not square")
    return n


def is_circulant(B: Sequence[Sequence[int]]) -> bool:
    n = _square_size(B)
    return all(B[i][j] == B[0][(j - i) % n] for i in range(n) for j in range(n))


def is_anticirculant(B: Sequence[Sequence[int]]) -> bool:
    n = _square_size(B)
    return all(B[i][j] == B[0][(i + j) % n] for i in range(n) for j in range(n))


def associated_polynomial(B: Sequence[Sequence[int]]) -> IntPolynomial:
    """First row of B read as coefficients, constant term first."""
    _square_size(B)
    return IntPolynomial(B[0]) if B else IntPolynomial.zero()


def circulant_from_polynomial(p: IntPolynomial, n: int) -> CirculantMatrix:
    return circ(reduce_mod_xn_minus_1(p, n).padded(n))


def circulant_multiply(P: CirculantMatrix, Q: CirculantMatrix) -> CirculantMatrix:
    if P.n != Q.n:
        raise ShapeError(f"circulant sizes differ: {P.n} and {Q.n}")
    return circulant_from_polynomial(P.polynomial() * Q.polynomial(), P.n)


def anticirculant_square(X: AntiCirculantMatrix) -> CirculantMatrix:
    D = X.expand()
    sq = matmul(D, D)
    assert is_circulant(sq), "square of an anti-circulant matrix was not circulant"
    return circ(sq[0]) if sq else circ(())


@dataclass(frozen=True)
class CirculantVerdict:
    """Outcome of the cyclotomic test on a circulant of size n.

    ``dividing`` lists every d | n with Phi_d dividing the polynomial and
    ``nullity`` is the sum of phi(d) over that list.
    """

    polynomial: IntPolynomial
    n: int
    dividing: tuple[int, ...]
    nullity: int

    @property
    def singular(self) -> bool:
        return bool(self.dividing)


def circulant_singularity(psi: IntPolynomial, n: int, divides=divides) -> CirculantVerdict:
    """Singularity and nullity of circ(psi) from cyclotomic divisibility.

    ``divides`` is injectable so verification harnesses can be exercised
    against a deliberately broken criterion.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not psi.is_zero() and psi.degree >= n:
        raise NotReducedError(f"polynomial of degree {psi.degree} is not reduced modulo x^{n} - 1")
    hits = tuple(d for d in divisors(n) if divides(cyclotomic(d), psi))
    return CirculantVerdict(psi, n, hits, sum(euler_totient(d) for d in hits))
