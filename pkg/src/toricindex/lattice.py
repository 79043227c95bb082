"""Exact integer linear algebra.

Vectors are tuples of Python ints and matrices are tuples of row tuples, so
every value is arbitrary precision and nothing is ever rounded.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Tuple

IntVector = Tuple[int, ...]
IntMatrix = Tuple[IntVector, ...]


class NotUnimodularError(ValueError):
    """Raised when a matrix expected to have determinant +-1 does not."""


def as_vector(v: Iterable[int]) -> IntVector:
    out = tuple(int(x) for x in v)
    if not out:
        raise ValueError("vectors must have length >= 1")
    return out


def as_matrix(rows: Iterable[Iterable[int]]) -> IntMatrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if m and len({len(r) for r in m}) != 1:
        raise ValueError("ragged matrix")
    return m


def _check_square(M: Sequence[Sequence[int]]) -> int:
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix must be square")
    return n


def determinant(M: Sequence[Sequence[int]]) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    n = _check_square(M)
    if n == 0:
        return 1
    A = [list(map(int, row)) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def integer_rank(M: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals, by fraction-free row reduction."""
    A = [list(map(int, row)) for row in M]
    if not A:
        return 0
    ncols = len(A[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(A)) if A[r][col] != 0), None)
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        p = A[rank][col]
        for i in range(rank + 1, len(A)):
            a = A[i][col]
            A[i] = [(p * x - a * y) // prev for x, y in zip(A[i], A[rank])]
        prev = p
        rank += 1
        if rank == len(A):
            break
    return rank


def solve_rational(A: Sequence[Sequence[int]], b: Sequence[int]) -> Tuple[Fraction, ...]:
    """Solve the square nonsingular system A x = b over the rationals."""
    n = _check_square(A)
    if len(b) != n:
        raise ValueError("right-hand side has wrong length")
    M = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(A, b)]
    for k in range(n):
        pivot = next((r for r in range(k, n) if M[r][k] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        M[k], M[pivot] = M[pivot], M[k]
        for i in range(n):
            if i != k and M[i][k] != 0:
                f = M[i][k] / M[k][k]
                M[i] = [x - f * y for x, y in zip(M[i], M[k])]
    return tuple(M[i][n] / M[i][i] for i in range(n))


def solve_unimodular(A: Sequence[Sequence[int]], b: Sequence[int]) -> IntVector:
    """Return the unique integer x with A x = b, for |det A| = 1."""
    det = determinant(A)
    if abs(det) != 1:
        raise NotUnimodularError(f"determinant is {det}, expected +-1")
    x = solve_rational(A, b)
    assert all(q.denominator == 1 for q in x)
    return tuple(int(q) for q in x)


def gcd_of_entries(v: Iterable[int]) -> int:
    return math.gcd(*(int(x) for x in v))


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(u, v))


def matvec(M: Sequence[Sequence[int]], x: Sequence[int]) -> IntVector:
    return tuple(dot(row, x) for row in M)


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> IntMatrix:
    cols = list(zip(*B))
    return tuple(tuple(dot(row, c) for c in cols) for row in A)


def transpose(M: Sequence[Sequence[int]]) -> IntMatrix:
    return tuple(zip(*M))


def add(u: Sequence[int], v: Sequence[int]) -> IntVector:
    return tuple(x + y for x, y in zip(u, v))


def sub(u: Sequence[int], v: Sequence[int]) -> IntVector:
    return tuple(x - y for x, y in zip(u, v))


def hyperplane_normal(points: Sequence[Sequence[int]]) -> IntVector:
    """Integer normal of the affine hull of d points in Z^d.

    Generalized cross product of the difference vectors; the zero vector
    means the points are affinely dependent.
    """
    base = points[0]
    diffs = [sub(p, base) for p in points[1:]]
    d = len(base)
    normal = []
    for k in range(d):
        minor = [row[:k] + row[k + 1:] for row in diffs]
        normal.append((-1) ** k * determinant(minor))
    g = gcd_of_entries(normal)
    return tuple(x // g for x in normal) if g else tuple(normal)


def box_points(lower: Sequence[int], upper: Sequence[int]) -> Iterator[IntVector]:
    """All lattice points of the box, in lexicographic order."""
    return itertools.product(*(range(lo, hi + 1) for lo, hi in zip(lower, upper)))


def polytope_bounds(A: Sequence[Sequence[int]], b: Sequence[int]):
    """Exact coordinate bounds of the bounded polyhedron {x : A x >= b}.

    Enumerates vertices as feasible intersections of dim-many tight rows.
    Returns (lower, upper) integer lists, or None when the set is empty.
    """
    dim = len(A[0])
    rows = sorted(set(zip(map(tuple, A), b)))
    lo: list = [None] * dim
    hi: list = [None] * dim
    for subset in itertools.combinations(rows, dim):
        M = [r for r, _ in subset]
        if determinant(M) == 0:
            continue
        x = solve_rational(M, [c for _, c in subset])
        if any(sum(Fraction(a) * xi for a, xi in zip(r, x)) < c for r, c in rows):
            continue
        for k, xk in enumerate(x):
            lo[k] = xk if lo[k] is None else min(lo[k], xk)
            hi[k] = xk if hi[k] is None else max(hi[k], xk)
    if lo[0] is None:
        return None
    return [math.ceil(v) for v in lo], [math.floor(v) for v in hi]


def lattice_points(A: Sequence[Sequence[int]], b: Sequence[int]) -> list:
    """Every integer x with A x >= b, for a bounded system; lexicographic."""
    bounds = polytope_bounds(A, b)
    if bounds is None:
        return []
    return [x for x in box_points(*bounds)
            if all(dot(r, x) >= c for r, c in zip(A, b))]
