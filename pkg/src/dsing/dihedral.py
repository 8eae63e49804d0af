"""Singularity of Cayley graphs of dihedral groups.

With vertices ordered a, ..., a^n, ab, ..., a^nb the adjacency matrix has the
block form [[M, N], [N, M]] where M is a symmetric circulant, N a symmetric
anti-circulant and MN = NM. Then det(A) = det(M^2 - N^2), and M^2 - N^2 is a
circulant whose first row counts length-2 walks from ``a`` through rotations
minus those through reflections. The graph is singular iff some cyclotomic
Phi_d, d | n, divides that walk-count difference.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import oracle
from .circulant import (
    AntiCirculantMatrix,
    CirculantMatrix,
    CirculantVerdict,
    anticirc,
    associated_polynomial,
    circ,
    circulant_singularity,
    is_anticirculant,
    is_circulant,
)
from .errors import PreconditionError, StructureError
from .group import CayleyGraph, ConnectingSet, DihedralElement
from .polynomial import IntPolynomial, divides


@dataclass(frozen=True)
class BlockDecomposition:
    n: int
    M: CirculantMatrix
    N: AntiCirculantMatrix

    def assemble(self) -> list[list[int]]:
        m, k = self.M.expand(), self.N.expand()
        return [rm + rk for rm, rk in zip(m, k)] + [rk + rm for rm, rk in zip(m, k)]


@dataclass(frozen=True)
class WalkPolynomials:
    """Length-2 walk counts from ``a``: coefficient of x^(i-1) is u_i / w_i."""

    psi_prime: IntPolynomial
    psi_double_prime: IntPolynomial

    def vectors(self, n: int) -> tuple[list[int], list[int]]:
        return self.psi_prime.padded(n), self.psi_double_prime.padded(n)

    @property
    def difference(self) -> IntPolynomial:
        return self.psi_prime - self.psi_double_prime


def _symmetric(B) -> bool:
    return all(B[i][j] == B[j][i] for i in range(len(B)) for j in range(i))


def block_decompose(G: CayleyGraph) -> BlockDecomposition:
    if G.connecting_set.kind != "dihedral":
        raise StructureError("block decomposition needs a dihedral Cayley graph")
    n = G.connecting_set.n
    A = G.adjacency
    tl = [list(r[:n]) for r in A[:n]]
    tr = [list(r[n:]) for r in A[:n]]
    bl = [list(r[:n]) for r in A[n:]]
    br = [list(r[n:]) for r in A[n:]]
    if tl != br:
        raise StructureError("diagonal blocks differ (expected A = [[M, N], [N, M]])")
    if tr != bl:
        raise StructureError("off-diagonal blocks differ (expected A = [[M, N], [N, M]])")
    if not (is_circulant(tl) and _symmetric(tl)):
        raise StructureError("M is not a symmetric circulant")
    if not (is_anticirculant(tr) and _symmetric(tr)):
        raise StructureError("N is not a symmetric anti-circulant")
    if oracle.matmul(tl, tr) != oracle.matmul(tr, tl):
        raise StructureError("M and N do not commute")
    return BlockDecomposition(n, circ(tl[0]), anticirc(tr[0]))


def _pair_counts(elements: list[DihedralElement], n: int) -> IntPolynomial:
    counts = [0] * n
    for h1 in elements:
        for h2 in elements:
            prod = h2 * h1
            assert not prod.reflected
            counts[prod.exponent] += 1
    return IntPolynomial(counts)


def walk_polynomials(H: ConnectingSet) -> WalkPolynomials:
    """u_i (w_i) = #{(h1, h2) in H' x H' (H'' x H'') : h2 h1 = a^(i-1)}."""
    if H.kind != "dihedral":
        raise PreconditionError("walk polynomials are defined for dihedral connecting sets")
    rot = [DihedralElement.rotation(k, H.n) for k in H.rotations]
    ref = [DihedralElement.reflection(j, H.n) for j in H.reflections]
    return WalkPolynomials(_pair_counts(rot, H.n), _pair_counts(ref, H.n))


def walk_polynomials_via_matrix(D: BlockDecomposition) -> WalkPolynomials:
    m, k = D.M.expand(), D.N.expand()
    return WalkPolynomials(
        associated_polynomial(oracle.matmul(m, m)),
        associated_polynomial(oracle.matmul(k, k)),
    )


def walk_polynomials_via_walks(G: CayleyGraph) -> WalkPolynomials:
    """Count walks a -> a^i in the assembled graph, restricting the middle vertex."""
    n = G.connecting_set.n
    A = G.matrix()
    rot, ref = range(n), range(n, 2 * n)
    u = [oracle.walk_count(A, 0, i, 2, rot) for i in range(n)]
    w = [oracle.walk_count(A, 0, i, 2, ref) for i in range(n)]
    return WalkPolynomials(IntPolynomial(u), IntPolynomial(w))


@dataclass(frozen=True)
class DihedralVerdict:
    walks: WalkPolynomials
    test: CirculantVerdict

    @property
    def singular(self) -> bool:
        return self.test.singular

    @property
    def delta(self) -> IntPolynomial:
        return self.test.polynomial

    @property
    def block_nullity(self) -> int:
        """Nullity of M^2 - N^2. Not the nullity of the graph."""
        return self.test.nullity


def dihedral_singularity(H: ConnectingSet, divides=divides) -> DihedralVerdict:
    walks = walk_polynomials(H)
    return DihedralVerdict(walks, circulant_singularity(walks.difference, H.n, divides=divides))


def char_poly_factorization(D: BlockDecomposition) -> tuple[IntPolynomial, IntPolynomial]:
    """(char(M + N), char(M - N)); their product is char(A)."""
    m, k = D.M.expand(), D.N.expand()
    return oracle.exact_char_poly(oracle.matadd(m, k)), oracle.exact_char_poly(oracle.matsub(m, k))


def determinant_identity_check(D: BlockDecomposition, A) -> bool:
    """det(A) == det(M^2 - N^2). Only guaranteed for the canonical vertex order."""
    m, k = D.M.expand(), D.N.expand()
    diff = oracle.matsub(oracle.matmul(m, m), oracle.matmul(k, k))
    return oracle.exact_determinant(A) == oracle.exact_determinant(diff)


def balanced_neighbor_test(H: ConnectingSet) -> bool:
    """Whether a rotation vertex has as many rotation as reflection neighbours.

    By vertex transitivity these counts are |H'| and |H''|. When they agree
    the graph is singular.
    """
    if H.kind != "dihedral":
        raise PreconditionError("balanced_neighbor_test needs a dihedral connecting set")
    return len(H.rotations) == len(H.reflections)


def is_prime(n: int) -> bool:
    return n >= 2 and all(n % p for p in range(2, int(n**0.5) + 1))


def _prime_unbalanced_differences(H: ConnectingSet) -> set[int]:
    if H.kind != "dihedral":
        raise PreconditionError("prime-order tests need a dihedral connecting set")
    if not is_prime(H.n):
        raise PreconditionError(f"n = {H.n} is not prime")
    if balanced_neighbor_test(H):
        raise PreconditionError("split is balanced; use balanced_neighbor_test")
    u, w = walk_polynomials(H).vectors(H.n)
    return {a - b for a, b in zip(u, w)}


def prime_order_test(H: ConnectingSet) -> bool:
    """Prime n, unbalanced split: report singular iff u - w is constantly +1 or -1.

    This is the unit-constant form of the prime-order criterion. It is not
    equivalent to :func:`dihedral_singularity`: any nonzero constant c gives
    u - w = c * Phi_n, which is singular (e.g. H = all reflections in D_3,
    the graph K_{3,3}, has c = -3). See :func:`prime_order_constant`.
    """
    return _prime_unbalanced_differences(H) in ({1}, {-1})


def prime_order_constant(H: ConnectingSet) -> int | None:
    """The constant c with u_i - w_i = c for all i, or None.

    For prime n and an unbalanced split the graph is singular exactly when
    such a c exists (c is then nonzero, since sum(u) - sum(w) =
    |H'|^2 - |H''|^2 != 0).
    """
    diffs = _prime_unbalanced_differences(H)
    return diffs.pop() if len(diffs) == 1 else None
