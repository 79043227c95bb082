from dataclasses import dataclass
from typing import List, Tuple

import pytest

from toricindex.fano import (
    Fan, FanoPolytope, Wall, anticanonical, choose_basis_rays, compute_walls,
    face_fan, to_pic, validate_polytope,
)
from toricindex.harness import SURFACES, builtin_fixture, fixture_group
from toricindex.nef import NefCone, build_nef_cone


@dataclass
class Toric:
    polytope: FanoPolytope
    fan: Fan
    walls: List[Wall]
    basis: Tuple[int, ...]
    cone: NefCone
    minus_k: Tuple[int, ...]


def toric(vertices, name=None) -> Toric:
    P = validate_polytope(vertices, name=name)
    fan = face_fan(P)
    walls = compute_walls(fan)
    basis = choose_basis_rays(fan)
    cone = build_nef_cone(fan, basis, walls)
    return Toric(P, fan, walls, basis, cone, to_pic(anticanonical(P), fan, basis).coords)


SURFACE_IDS = list(SURFACES)
SMALL_IDS = SURFACE_IDS + ["P1", "P3", "P2xP1", "P1xP1xP1"]
PRODUCT_IDS = ["P1", "P2", "P3", "P4", "P1xP1", "P2xP1", "P3xP1", "P2xP2",
               "P1xP1xP1", "P2xP1xP1", "P1xP1xP1xP1"]


@pytest.fixture(params=SURFACE_IDS)
def surface(request):
    return toric(builtin_fixture(request.param).vertices, request.param)


@pytest.fixture(params=SMALL_IDS)
def small(request):
    return toric(builtin_fixture(request.param).vertices, request.param)


@pytest.fixture(scope="session")
def threefolds():
    return fixture_group("fano3folds")


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
