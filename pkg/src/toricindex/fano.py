"""Smooth Fano polytopes, their face fans, wall relations and Picard classes.

A smooth toric Fano variety X of dimension d is encoded by the vertices
v_1, ..., v_n of its Fano polytope.  The face fan has one maximal cone per
facet, each torus-invariant prime divisor D_i corresponds to v_i, and
Pic(X) = Z^n / M is free of rank n - d.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .lattice import (
    IntVector,
    as_vector,
    determinant,
    dot,
    gcd_of_entries,
    hyperplane_normal,
    integer_rank,
    lattice_points,
    solve_unimodular,
)

Cone = Tuple[int, ...]


class PolytopeError(ValueError):
    """Base class for rejected vertex data."""


class NotFullDimensional(PolytopeError):
    pass


class OriginNotInterior(PolytopeError):
    pass


class NonPrimitiveVertex(PolytopeError):
    def __init__(self, index: int, vertex: Sequence[int]):
        super().__init__(f"vertex {index} {tuple(vertex)} is not primitive")
        self.index = index


class NonVertexPoint(PolytopeError):
    def __init__(self, index: int, vertex: Sequence[int]):
        super().__init__(f"point {index} {tuple(vertex)} is not a vertex of the hull")
        self.index = index


class NonSmoothFacet(PolytopeError):
    def __init__(self, facet: Cone, reason: str):
        super().__init__(f"facet {facet} is not smooth: {reason}")
        self.facet = facet


class WallError(RuntimeError):
    """Adjacent cones whose relation is not that of a smooth fan."""


@dataclass(frozen=True)
class FanoPolytope:
    dim: int
    vertices: Tuple[IntVector, ...]
    name: Optional[str] = None
    facets: Tuple[Cone, ...] = field(default=(), repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def rho(self) -> int:
        return self.n - self.dim


@dataclass(frozen=True)
class Fan:
    rays: Tuple[IntVector, ...]
    maximal_cones: Tuple[Cone, ...]

    @property
    def dim(self) -> int:
        return len(self.rays[0])

    def contains_cone(self, rays: Sequence[int]) -> bool:
        s = set(rays)
        return any(s <= set(c) for c in self.maximal_cones)


@dataclass(frozen=True)
class Wall:
    """Invariant curve between two adjacent maximal cones.

    ``relation`` has one entry per ray; it is the integer relation
    sum_i b_i v_i = 0 with b = 1 on both opposite rays and 0 off the wall.
    Its pairing with a divisor vector a is the intersection number D . C.
    """

    shared_rays: Cone
    opposite_rays: Tuple[int, int]
    relation: IntVector

    def degree(self, a: Sequence[int]) -> int:
        return dot(self.relation, a)


@dataclass(frozen=True)
class PicClass:
    coords: IntVector
    basis_rays: Cone


def validate_polytope(vertices, d: Optional[int] = None, name: Optional[str] = None) -> FanoPolytope:
    """Check that ``vertices`` span a smooth Fano polytope and return it.

    Raises a :class:`PolytopeError` subclass naming the first violated
    condition: full dimension, interior origin, vertex-ness, primitivity,
    then smoothness of every facet.
    """
    verts = tuple(as_vector(v) for v in vertices)
    if not verts:
        raise PolytopeError("empty vertex list")
    if d is None:
        d = len(verts[0])
    if any(len(v) != d for v in verts):
        raise PolytopeError(f"all vertices must have length {d}")
    n = len(verts)
    if n <= d or integer_rank([v + (1,) for v in verts]) != d + 1:
        raise NotFullDimensional(f"{n} points do not span a {d}-dimensional polytope")

    # supporting hyperplanes <normal, x> <= level through d affinely independent points
    supports: Dict[Tuple[IntVector, int], Cone] = {}
    for subset in itertools.combinations(range(n), d):
        normal = hyperplane_normal([verts[i] for i in subset])
        if not any(normal):
            continue
        level = dot(normal, verts[subset[0]])
        values = [dot(normal, v) for v in verts]
        if all(x <= level for x in values):
            pass
        elif all(x >= level for x in values):
            normal, level = tuple(-c for c in normal), -level
        else:
            continue
        supports[(normal, level)] = tuple(i for i in range(n) if dot(normal, verts[i]) == level)

    if any(level <= 0 for _, level in supports):
        raise OriginNotInterior("the origin is not in the interior of the convex hull")
    for i, v in enumerate(verts):
        incident = [normal for (normal, _), facet in supports.items() if i in facet]
        if verts.index(v) != i or integer_rank(incident) < d:
            raise NonVertexPoint(i, v)
    for i, v in enumerate(verts):
        if gcd_of_entries(v) != 1:
            raise NonPrimitiveVertex(i, v)
    facets = tuple(sorted(supports.values()))
    for facet in facets:
        if len(facet) != d:
            raise NonSmoothFacet(facet, f"{len(facet)} vertices, expected {d}")
        det = determinant([verts[i] for i in facet])
        if abs(det) != 1:
            raise NonSmoothFacet(facet, f"determinant {det}")
    return FanoPolytope(d, verts, name, facets)


def face_fan(P: FanoPolytope) -> Fan:
    """Maximal cones over the facets, found by brute force over d-subsets.

    A d-subset spans a maximal cone iff the hyperplane through its points
    has every other vertex strictly on the origin side.
    """
    cones = []
    for subset in itertools.combinations(range(P.n), P.dim):
        normal = hyperplane_normal([P.vertices[i] for i in subset])
        if not any(normal):
            continue
        level = dot(normal, P.vertices[subset[0]])
        if level < 0:
            normal, level = tuple(-c for c in normal), -level
        if level == 0:
            continue
        others = (dot(normal, P.vertices[j]) for j in range(P.n) if j not in subset)
        if all(x < level for x in others):
            cones.append(subset)
    cones = tuple(sorted(cones))
    if P.facets and cones != P.facets:
        raise RuntimeError("face fan disagrees with validated facets")
    return Fan(P.vertices, cones)


def compute_walls(fan: Fan) -> List[Wall]:
    """One wall per pair of maximal cones sharing d - 1 rays."""
    d = fan.dim
    by_face: Dict[Cone, List[Cone]] = {}
    for cone in fan.maximal_cones:
        for face in itertools.combinations(cone, d - 1):
            by_face.setdefault(face, []).append(cone)
    walls = []
    for face, cones in sorted(by_face.items()):
        if len(cones) != 2:
            raise WallError(f"face {face} lies in {len(cones)} maximal cones")
        (u,) = set(cones[0]) - set(face)
        (u2,) = set(cones[1]) - set(face)
        basis = list(face) + [u]
        # columns are the basis rays
        A = [[fan.rays[j][k] for j in basis] for k in range(d)]
        x = solve_unimodular(A, fan.rays[u2])
        if x[-1] != -1:
            raise WallError(f"coefficient of ray {u} is {x[-1]}, expected -1")
        b = [0] * len(fan.rays)
        b[u] = b[u2] = 1
        for j, xj in zip(face, x):
            b[j] = -xj
        walls.append(Wall(face, (min(u, u2), max(u, u2)), tuple(b)))
    return walls


def anticanonical(P: FanoPolytope) -> IntVector:
    return (1,) * P.n


def choose_basis_rays(fan: Fan) -> Cone:
    basis = min(fan.maximal_cones)
    assert abs(determinant([fan.rays[i] for i in basis])) == 1
    return basis


def to_pic(a: Sequence[int], fan: Fan, basis: Cone) -> PicClass:
    """Normalize the divisor sum a_i D_i to the representative vanishing on ``basis``."""
    u = solve_unimodular([fan.rays[i] for i in basis], [a[i] for i in basis])
    rest = [i for i in range(len(fan.rays)) if i not in basis]
    return PicClass(tuple(a[i] - dot(u, fan.rays[i]) for i in rest), basis)


def from_pic(coords: Sequence[int], fan: Fan, basis: Cone) -> IntVector:
    """Divisor vector with ``coords`` on the non-basis rays and 0 on the basis."""
    a = [0] * len(fan.rays)
    rest = [i for i in range(len(fan.rays)) if i not in basis]
    for i, c in zip(rest, coords):
        a[i] = c
    return tuple(a)


def wall_functional(wall: Wall, basis: Cone) -> IntVector:
    return tuple(b for i, b in enumerate(wall.relation) if i not in basis)


def count_sections(P: FanoPolytope, a: Sequence[int]) -> int:
    """h^0 of O(sum a_i D_i): lattice points u with <u, v_i> >= -a_i."""
    return len(lattice_points(P.vertices, [-x for x in a]))
