import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from toricindex.lattice import (
    NotUnimodularError, determinant, gcd_of_entries, integer_rank, lattice_points,
    matmul, matvec, solve_unimodular,
)


def cofactor_det(M):
    if len(M) == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * cofactor_det([r[:j] + r[j + 1:] for r in M[1:]])
               for j in range(len(M)))


def fraction_rank(M):
    A = [[Fraction(x) for x in row] for row in M]
    rank = 0
    for col in range(len(A[0]) if A else 0):
        piv = next((r for r in range(rank, len(A)) if A[r][col] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for r in range(len(A)):
            if r != rank and A[r][col] != 0:
                f = A[r][col] / A[rank][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[rank])]
        rank += 1
    return rank


small_ints = st.integers(-6, 6)


def square(n):
    return st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n)


@pytest.mark.parametrize("M, det", [
    ([[1, 0], [0, 1]], 1),
    ([[1, 0], [1, 1]], 1),
    ([[1, 1], [1, -1]], -2),
    ([[0, 1], [1, 0]], -1),
    ([[0, 0], [0, 0]], 0),
])
def test_determinant_examples(M, det):
    assert determinant(M) == det


def test_determinant_rejects_nonsquare():
    with pytest.raises(ValueError):
        determinant([[1, 2, 3], [4, 5, 6]])


def test_determinant_big_entries():
    M = [[10**30, 1], [1, 10**30]]
    assert determinant(M) == 10**60 - 1


@given(st.integers(1, 5).flatmap(square))
def test_determinant_matches_cofactor(M):
    assert determinant(M) == cofactor_det(M)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(square(n), square(n))))
def test_determinant_multiplicative(pair):
    A, B = pair
    assert determinant(matmul(A, B)) == determinant(A) * determinant(B)


def test_solve_unimodular_examples():
    assert solve_unimodular([[1, 0], [0, 1]], [3, 5]) == (3, 5)
    assert solve_unimodular([[1, 1], [0, 1]], [1, 1]) == (0, 1)
    with pytest.raises(NotUnimodularError):
        solve_unimodular([[2, 0], [0, 1]], [1, 1])


@settings(max_examples=200)
@given(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), small_ints), max_size=12),
       st.lists(small_ints, min_size=3, max_size=3))
def test_solve_unimodular_multiply_back(ops, b):
    # products of elementary row operations are unimodular
    A = [[int(i == j) for j in range(3)] for i in range(3)]
    for i, j, c in ops:
        if i != j:
            A[i] = [x + c * y for x, y in zip(A[i], A[j])]
    x = solve_unimodular(A, b)
    assert list(matvec(A, x)) == b


def test_gcd_of_entries():
    assert gcd_of_entries((3, -6, 9)) == 3
    assert gcd_of_entries((1, 0)) == 1
    assert gcd_of_entries((0, 0)) == 0


def test_integer_rank_examples():
    assert integer_rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert integer_rank([[1, 2], [2, 4]]) == 1
    assert integer_rank([[0, 0], [0, 0]]) == 0


matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=r, max_size=r)))


@given(matrices)
def test_integer_rank_matches_fraction_elimination(M):
    assert integer_rank(M) == fraction_rank(M)


@given(matrices, st.randoms())
def test_integer_rank_invariances(M, rnd):
    rows = list(M)
    rnd.shuffle(rows)
    assert integer_rank(rows) == integer_rank(M)
    assert integer_rank(M + [M[rnd.randrange(len(M))]]) == integer_rank(M)


def test_lattice_points_against_box_scan():
    A = [[1, 0], [0, 1], [-1, -1]]
    b = [-3, -3, -3]
    scan = [x for x in itertools.product(range(-10, 11), repeat=2)
            if all(sum(a * xi for a, xi in zip(r, x)) >= c for r, c in zip(A, b))]
    assert lattice_points(A, b) == sorted(scan)


def test_lattice_points_empty():
    assert lattice_points([[1], [-1]], [1, 0]) == []
