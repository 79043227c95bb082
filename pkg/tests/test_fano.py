import itertools
import random

import pytest
from scipy.spatial import ConvexHull

from toricindex.fano import (
    NonPrimitiveVertex, NonSmoothFacet, NonVertexPoint, NotFullDimensional,
    OriginNotInterior, anticanonical, count_sections, from_pic,
    to_pic, validate_polytope, wall_functional,
)
from toricindex.harness import SURFACES
from toricindex.lattice import determinant, dot

from conftest import toric

P2 = SURFACES["P2"]
P1xP1 = SURFACES["P1xP1"]
HEXAGON = SURFACES["dP6"]


def test_validate_accepts_p2():
    P = validate_polytope(P2, 2)
    assert P.n == 3 and P.rho == 1


@pytest.mark.parametrize("vertices, error", [
    ([(1, 1), (1, -1), (-1, 1), (-1, -1)], NonSmoothFacet),
    ([(1, 0), (0, 1), (1, 1)], OriginNotInterior),
    ([(1, 0), (-1, 0), (2, 0)], NotFullDimensional),
    ([(2, 0), (0, 1), (-1, -1)], NonPrimitiveVertex),
    ([(1, 0), (0, 1), (-1, -1), (0, 0)], NonVertexPoint),
    ([(1, 0), (0, 1), (-1, -1), (1, 0)], NonVertexPoint),
    ([(1, 1), (-1, 1), (0, 1), (1, -1), (-1, -1)], NonVertexPoint),
    ([(1, 0), (0, 1), (-1, -2)], NonSmoothFacet),
    ([(1, 0, 0), (0, 1, 0), (-1, -1, 0)], NotFullDimensional),
])
def test_validate_rejects(vertices, error):
    with pytest.raises(error):
        validate_polytope(vertices)


def test_nonsmooth_square_facet_determinant():
    with pytest.raises(NonSmoothFacet) as info:
        validate_polytope([(1, 1), (1, -1), (-1, 1), (-1, -1)])
    f = info.value.facet
    square = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
    assert abs(determinant([square[i] for i in f])) == 2


def hull_facets(vertices):
    hull = ConvexHull(vertices)
    return sorted({tuple(sorted(s)) for s in hull.simplices})


@pytest.mark.parametrize("vertices, expected", [
    (P2, [(0, 1), (0, 2), (1, 2)]),
    (P1xP1, [(0, 1), (0, 3), (1, 2), (2, 3)]),
])
def test_face_fan_small(vertices, expected):
    assert list(toric(vertices).fan.maximal_cones) == expected


def test_face_fan_hexagon_matches_hull():
    fan = toric(HEXAGON).fan
    assert len(fan.maximal_cones) == 6
    assert list(fan.maximal_cones) == hull_facets(HEXAGON)


def test_face_fan_threefolds_match_hull(threefolds):
    for rec in threefolds:
        fan = toric(rec.vertices).fan
        assert list(fan.maximal_cones) == hull_facets(rec.vertices), rec.name


def test_walls_p2():
    t = toric([(1, 0), (0, 1), (-1, -1)])
    assert len(t.walls) == 3
    wall = next(w for w in t.walls if w.shared_rays == (1,))
    assert wall.opposite_rays == (0, 2)
    assert wall.relation == (1, 1, 1)


def test_walls_p1xp1():
    t = toric(P1xP1)
    wall = next(w for w in t.walls if w.shared_rays == (1,))
    assert wall.relation == (1, 0, 1, 0)


def test_wall_relations_vanish(small):
    for w in small.walls:
        assert all(sum(b * v[k] for b, v in zip(w.relation, small.fan.rays)) == 0
                   for k in range(small.fan.dim))
        assert sum(1 for b in w.relation if b) <= small.fan.dim + 1
        assert len(w.shared_rays) + 2 == small.fan.dim + 1


def test_surface_counts(surface):
    n = surface.polytope.n
    assert len(surface.fan.maximal_cones) == n
    assert len(surface.walls) == n


def test_anticanonical():
    assert anticanonical(validate_polytope(P2)) == (1, 1, 1)
    assert anticanonical(validate_polytope(HEXAGON)) == (1,) * 6


def test_choose_basis_rays():
    assert toric(P2).basis == (0, 1)
    assert toric(P1xP1).basis == (0, 1)


def test_basis_is_unimodular(small):
    assert abs(determinant([small.fan.rays[i] for i in small.basis])) == 1


def test_to_pic_examples():
    t = toric(P2)
    assert to_pic((1, 1, 1), t.fan, t.basis).coords == (3,)
    t = toric(P1xP1)
    assert to_pic((1, 1, 1, 1), t.fan, t.basis).coords == (2, 2)


def test_to_pic_principal_invariance(small):
    rnd = random.Random(20261016)
    n, d = small.polytope.n, small.polytope.dim
    for _ in range(100):
        u = [rnd.randint(-20, 20) for _ in range(d)]
        a = [rnd.randint(-5, 5) for _ in range(n)]
        principal = [dot(u, v) for v in small.fan.rays]
        shifted = [x + y for x, y in zip(a, principal)]
        assert to_pic(principal, small.fan, small.basis).coords == (0,) * (n - d)
        assert to_pic(shifted, small.fan, small.basis) == to_pic(a, small.fan, small.basis)
        for w in small.walls:
            assert w.degree(principal) == 0


def test_from_pic_round_trip(small):
    rnd = random.Random(1)
    for _ in range(20):
        x = tuple(rnd.randint(-4, 4) for _ in range(small.cone.rho))
        assert to_pic(from_pic(x, small.fan, small.basis), small.fan, small.basis).coords == x


def test_wall_functional_matches_raw_pairing(small):
    rnd = random.Random(7)
    for _ in range(50):
        a = [rnd.randint(-6, 6) for _ in range(small.polytope.n)]
        coords = to_pic(a, small.fan, small.basis).coords
        for w in small.walls:
            assert dot(wall_functional(w, small.basis), coords) == w.degree(a)


def test_wall_functional_p2_and_p1xp1():
    t = toric(P2)
    assert {wall_functional(w, t.basis) for w in t.walls} == {(1,)}
    t = toric(P1xP1)
    assert sorted(set(wall_functional(w, t.basis) for w in t.walls)) == [(0, 1), (1, 0)]


def scan_sections(vertices, a, radius=12):
    d = len(vertices[0])
    return sum(1 for u in itertools.product(range(-radius, radius + 1), repeat=d)
               if all(dot(u, v) >= -ai for v, ai in zip(vertices, a)))


def test_count_sections_p2():
    P = validate_polytope(P2)
    assert count_sections(P, (0, 0, 0)) == 1
    assert count_sections(P, (1, 1, 1)) == 10
    assert count_sections(P, (1, 0, 0)) == 3
    assert count_sections(P, (-1, 0, 0)) == 0


@pytest.mark.parametrize("name", list(SURFACES))
def test_count_sections_against_scan(name):
    P = validate_polytope(SURFACES[name])
    rnd = random.Random(name)
    for _ in range(15):
        a = [rnd.randint(-2, 3) for _ in range(P.n)]
        assert count_sections(P, a) == scan_sections(P.vertices, a)
