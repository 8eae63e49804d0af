import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import sympy_char_coeffs, sympy_det, sympy_rank
from dsing import oracle
from dsing.errors import ShapeError
from dsing.polynomial import IntPolynomial as P

K3 = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
C6 = [[int((j - i) % 6 in (1, 5)) for j in range(6)] for i in range(6)]
OCTAHEDRON = [[int(i != j and abs(i - j) != 3) for j in range(6)] for i in range(6)]


def square_matrices(max_n=8, lo=-9, hi=9):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)
    )


def test_determinant_examples(four_cycle):
    assert oracle.exact_determinant(four_cycle) == 0
    assert oracle.exact_determinant(K3) == 2
    assert oracle.exact_determinant(oracle.identity(5)) == 1


def test_determinant_shape_error():
    with pytest.raises(ShapeError):
        oracle.exact_determinant([[1, 2, 3], [4, 5, 6]])


@settings(max_examples=150)
@given(square_matrices())
def test_determinant_matches_sympy(A):
    assert oracle.exact_determinant(A) == sympy_det(A)


def test_determinant_large_entries():
    rng = random.Random(7)
    A = [[rng.randint(-10**30, 10**30) for _ in range(7)] for _ in range(7)]
    assert oracle.exact_determinant(A) == sympy_det(A)


@pytest.mark.parametrize("perm", list(itertools.permutations(range(5)))[::7])
def test_permutation_determinant(perm):
    P_ = [[int(perm[i] == j) for j in range(5)] for i in range(5)]
    assert oracle.exact_determinant(P_) in (1, -1)


def test_rank_examples(four_cycle):
    assert oracle.exact_rank(four_cycle) == 2
    assert oracle.nullity(four_cycle) == 2
    assert oracle.nullity(OCTAHEDRON) == 3
    assert oracle.nullity([[0] * 7 for _ in range(7)]) == 7


@settings(max_examples=150)
@given(
    st.integers(1, 6).flatmap(
        lambda r: st.integers(1, 6).flatmap(
            lambda c: st.lists(st.lists(st.integers(-2, 2), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )
)
def test_rank_matches_sympy(A):
    assert oracle.exact_rank(A) == sympy_rank(A)


def test_rank_of_low_rank_product():
    rng = random.Random(3)
    U = [[rng.randint(-5, 5) for _ in range(3)] for _ in range(8)]
    V = [[rng.randint(-5, 5) for _ in range(8)] for _ in range(3)]
    assert oracle.exact_rank(oracle.matmul(U, V)) == sympy_rank(oracle.matmul(U, V))


def test_char_poly_examples():
    assert oracle.exact_char_poly(K3) == P([-2, -3, 0, 1])
    assert oracle.exact_char_poly(C6) == P([-4, 0, 9, 0, -6, 0, 1])
    assert oracle.exact_char_poly([[0, 0], [0, 0]]) == P([0, 0, 1])


@settings(max_examples=100)
@given(square_matrices(max_n=8))
def test_char_poly_matches_sympy_and_determinant(A):
    cp = oracle.exact_char_poly(A)
    n = len(A)
    assert list(cp.coeffs) == sympy_char_coeffs(A)
    assert oracle.exact_determinant(A) == (-1) ** n * cp.coefficient(0)


def _random_symmetric_01(rng, n):
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            A[i][j] = A[j][i] = rng.randint(0, 1)
    return A


@pytest.mark.parametrize("seed", range(40))
def test_symmetric_nullity_is_zero_root_multiplicity(seed):
    rng = random.Random(seed)
    A = _random_symmetric_01(rng, rng.randint(1, 10))
    assert oracle.nullity(A) == oracle.zero_root_multiplicity(oracle.exact_char_poly(A))


def test_walk_count_examples(four_cycle):
    assert oracle.walk_count(four_cycle, 0, 0, 2) == 2
    assert oracle.walk_count(four_cycle, 0, 2, 2, allowed=[]) == 0


@pytest.mark.parametrize("seed", range(20))
def test_walk_count_full_set_is_matrix_power(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 8)
    A = _random_symmetric_01(rng, n)
    k = rng.randint(1, 5)
    Ak = oracle.matrix_power(A, k)
    i, j = rng.randrange(n), rng.randrange(n)
    assert oracle.walk_count(A, i, j, k) == Ak[i][j]
    assert oracle.walk_count(A, i, j, k, allowed=range(n)) == Ak[i][j]


def test_walk_count_restricted_by_brute_force():
    rng = random.Random(11)
    A = _random_symmetric_01(rng, 7)
    allowed = {1, 3, 4}
    for i in range(7):
        for j in range(7):
            expect = sum(A[i][k] * A[k][j] for k in allowed)
            assert oracle.walk_count(A, i, j, 2, allowed) == expect


def test_oracle_does_not_touch_divisibility():
    import inspect

    src = inspect.getsource(oracle)
    assert "divides" not in src.replace("division", "")
    assert "cyclotomic" not in src.split('"""', 2)[2]
