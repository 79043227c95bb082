"""
Cross-checks: brute force, irreducible parts and sections
=========================================================

The dynamic program is compared with an exhaustive search, and every nef
class in [0, -K] is checked to have a nonzero section by counting lattice
points of its section polytope.
"""

# %%
from types import SimpleNamespace

from toricindex import (
    anticanonical, build_nef_cone, choose_basis_rays, compute_walls, count_sections,
    face_fan, to_pic, total_index_bruteforce, total_index_dp, validate_polytope,
)
from toricindex.fano import from_pic
from toricindex.harness import builtin_fixture
from toricindex.invariants import build_report
from toricindex.nef import enumerate_interval
from toricindex.tau import atoms, irreducible_atoms


def toric(vertices):
    P = validate_polytope(vertices)
    fan = face_fan(P)
    basis = choose_basis_rays(fan)
    cone = build_nef_cone(fan, basis, compute_walls(fan))
    minus_k = to_pic(anticanonical(P), fan, basis).coords
    return SimpleNamespace(polytope=P, fan=fan, basis=basis, cone=cone, minus_k=minus_k)


# %%
t = toric(builtin_fixture("P1xP1xP1").vertices)
print("atoms:", len(atoms(t.cone, t.minus_k)),
      "irreducible:", irreducible_atoms(t.cone, atoms(t.cone, t.minus_k)))
print("dp:", total_index_dp(t.cone, t.minus_k)[0],
      "brute force:", total_index_bruteforce(t.cone, t.minus_k))

# %%
# h^0(-K) on P^2 is the number of lattice points in 3 times the simplex.
p2 = toric(builtin_fixture("P2").vertices)
print("h0(-K_P2) =", count_sections(p2.polytope, (1, 1, 1)))

# %%
s = toric(builtin_fixture("dP7").vertices)
for x in enumerate_interval(s.cone, s.minus_k).points:
    print(x, count_sections(s.polytope, from_pic(x, s.fan, s.basis)))

# %%
print(build_report(builtin_fixture("P2xP2").vertices, oracle=True))
