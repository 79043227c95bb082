"""Nef cone of a smooth complete toric variety in Picard coordinates.

A class is nef iff it meets every torus-invariant curve non-negatively, so
the cone is cut out by one wall functional per wall.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .fano import Cone, Fan, Wall, compute_walls, wall_functional
from .lattice import (
    IntMatrix,
    IntVector,
    box_points,
    determinant,
    dot,
    integer_rank,
    matvec,
    solve_rational,
)

# cap on the row subsets intersected when bounding an order interval
MAX_BOUND_SUBSETS = 2000


class NotPointed(RuntimeError):
    """The wall functionals do not have full rank."""


@dataclass(frozen=True)
class NefCone:
    W: IntMatrix
    rho: int

    def contains(self, x: Sequence[int]) -> bool:
        return is_nef(self, x)


@dataclass(frozen=True)
class IntervalPoints:
    target: IntVector
    points: Tuple[IntVector, ...]


def build_nef_cone(fan: Fan, basis: Cone, walls: Sequence[Wall] = None) -> NefCone:
    if walls is None:
        walls = compute_walls(fan)
    rho = len(fan.rays) - fan.dim
    W = tuple(wall_functional(w, basis) for w in walls)
    if rho == 0 or any(not any(row) for row in W) or integer_rank(W) != rho:
        raise NotPointed(f"wall functionals have rank {integer_rank(W)}, expected {rho}")
    return NefCone(W, rho)


def is_nef(cone: NefCone, x: Sequence[int]) -> bool:
    if len(x) != cone.rho:
        raise ValueError(f"class has length {len(x)}, expected {cone.rho}")
    return all(v >= 0 for v in matvec(cone.W, x))


def positivity_grading(cone: NefCone) -> IntVector:
    """Sum of the wall functionals; at least 1 on every nonzero nef class."""
    return tuple(sum(col) for col in zip(*cone.W))


def _interval_box(cone: NefCone, t: Sequence[int]):
    """Integer box containing {x : 0 <= W x <= W t}.

    For any invertible row subset R, x = W_R^{-1} y with 0 <= y <= W_R t, so
    interval arithmetic on the inverse bounds each coordinate exactly in
    rational arithmetic.  Boxes from several subsets are intersected.
    """
    rows = sorted(set(cone.W))
    rho = cone.rho
    lo = [None] * rho
    hi = [None] * rho
    subsets = itertools.islice(
        (s for s in itertools.combinations(rows, rho) if determinant(s) != 0),
        MAX_BOUND_SUBSETS,
    )
    for R in subsets:
        caps = [dot(r, t) for r in R]
        # columns of the inverse, one solve per unit vector
        inv_cols = [solve_rational(R, [int(i == j) for i in range(rho)]) for j in range(rho)]
        for k in range(rho):
            terms = [inv_cols[j][k] * caps[j] for j in range(rho)]
            low = sum((min(Fraction(0), s) for s in terms), Fraction(0))
            high = sum((max(Fraction(0), s) for s in terms), Fraction(0))
            lo[k] = math.ceil(low) if lo[k] is None else max(lo[k], math.ceil(low))
            hi[k] = math.floor(high) if hi[k] is None else min(hi[k], math.floor(high))
    return lo, hi


def enumerate_interval(cone: NefCone, t: Sequence[int]) -> IntervalPoints:
    """All lattice classes x with x and t - x nef, in lexicographic order.

    The search box has volume exponential in rho; fine for rho up to ~8.
    """
    t = tuple(t)
    if not is_nef(cone, t):
        raise ValueError(f"target {t} is not nef")
    Wt = matvec(cone.W, t)
    points = []
    for x in box_points(*_interval_box(cone, t)):
        Wx = matvec(cone.W, x)
        if all(0 <= a <= b for a, b in zip(Wx, Wt)):
            points.append(x)
    return IntervalPoints(t, tuple(points))

