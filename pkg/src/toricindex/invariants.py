"""Classical invariants, the product classifier and the two Mukai-type checks."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .fano import (
    Fan,
    FanoPolytope,
    Wall,
    anticanonical,
    choose_basis_rays,
    compute_walls,
    face_fan,
    to_pic,
    validate_polytope,
)
from .lattice import gcd_of_entries
from .nef import NefCone, build_nef_cone, is_nef
from .tau import PartitionCertificate, total_index_bruteforce, total_index_dp


class ZeroClass(ValueError):
    pass


class NonPositiveLength(RuntimeError):
    pass


@dataclass(frozen=True)
class InvariantReport:
    name: Optional[str]
    dim: int
    n_rays: int
    rho: int
    fano_index: int
    pseudo_index: int
    tau: int
    certificate: PartitionCertificate
    mukai_defect: int
    total_defect: int
    is_product: bool
    factors: Optional[Tuple[int, ...]]
    basis_rays: Tuple[int, ...] = ()
    oracle_tau: Optional[int] = None


@dataclass(frozen=True)
class ConjectureVerdict:
    inequality_holds: bool
    equality_case: bool
    classifier_agrees: bool
    violation_detail: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.inequality_holds and self.classifier_agrees


def fano_index(t: Sequence[int]) -> int:
    """Largest r with t = r H for an integral class H."""
    g = gcd_of_entries(t)
    if g == 0:
        raise ZeroClass("the zero class has no index")
    return g


def pseudo_index(fan: Fan, walls: Sequence[Wall] = None) -> int:
    """Minimal anticanonical degree over the torus-invariant curves."""
    if walls is None:
        walls = compute_walls(fan)
    minimum = min(sum(w.relation) for w in walls)
    if minimum <= 0:
        raise NonPositiveLength(f"invariant curve with -K degree {minimum}")
    return minimum


def is_product_of_projective_spaces(fan: Fan, cone: NefCone, basis: Sequence[int]) -> bool:
    """True iff every torus-invariant prime divisor is nef."""
    n = len(fan.rays)
    for i in range(n):
        e = tuple(int(j == i) for j in range(n))
        if not is_nef(cone, to_pic(e, fan, tuple(basis)).coords):
            return False
    return True


def primitive_collections(fan: Fan) -> List[Tuple[int, ...]]:
    """Minimal ray subsets not spanning a cone of the fan."""
    out = []
    for size in range(2, fan.dim + 2):
        for s in itertools.combinations(range(len(fan.rays)), size):
            if fan.contains_cone(s):
                continue
            if all(fan.contains_cone(f) for f in itertools.combinations(s, size - 1)):
                out.append(s)
    return out


def product_factors(fan: Fan) -> Optional[Tuple[int, ...]]:
    """Dimensions (sorted) of the projective-space factors, or None.

    The fan is that of P^{d_1} x ... x P^{d_k} exactly when its primitive
    collections partition the rays and each sums to zero.
    """
    collections = primitive_collections(fan)
    covered = [i for c in collections for i in c]
    if sorted(covered) != list(range(len(fan.rays))):
        return None
    for c in collections:
        if any(sum(fan.rays[i][k] for i in c) for k in range(fan.dim)):
            return None
    factors = tuple(sorted(len(c) - 1 for c in collections))
    if sum(factors) != fan.dim:
        return None
    return factors


def build_report(P, name: Optional[str] = None, oracle: bool = False) -> InvariantReport:
    """Full pipeline from vertices (or a validated polytope) to the report."""
    if not isinstance(P, FanoPolytope):
        P = validate_polytope(P, name=name)
    fan = face_fan(P)
    walls = compute_walls(fan)
    basis = choose_basis_rays(fan)
    cone = build_nef_cone(fan, basis, walls)
    t = to_pic(anticanonical(P), fan, basis).coords
    tau, cert = total_index_dp(cone, t)
    oracle_tau = total_index_bruteforce(cone, t) if oracle else None
    i = fano_index(t)
    factors = product_factors(fan)
    return InvariantReport(
        name=name if name is not None else P.name,
        dim=P.dim,
        n_rays=P.n,
        rho=P.rho,
        fano_index=i,
        pseudo_index=pseudo_index(fan, walls),
        tau=tau,
        certificate=cert,
        mukai_defect=P.dim + P.rho - i * P.rho,
        total_defect=P.dim + P.rho - tau,
        is_product=is_product_of_projective_spaces(fan, cone, basis),
        factors=factors,
        basis_rays=basis,
        oracle_tau=oracle_tau,
    )


def _verdict(defect: int, classified: bool, label: str) -> ConjectureVerdict:
    holds = defect >= 0
    equality = defect == 0
    agrees = equality == classified
    details = []
    if not holds:
        details.append(f"{label} defect {defect} < 0")
    if not agrees:
        if equality:
            details.append(f"{label} defect is 0 but the variety is not of the expected product form")
        else:
            details.append(f"{label} defect is {defect} but the variety is of the expected product form")
    return ConjectureVerdict(holds, equality, agrees, "; ".join(details) or None)


def check_total_index_conjecture(report: InvariantReport) -> ConjectureVerdict:
    """dim + rho - tau >= 0, with equality exactly for products of projective spaces."""
    return _verdict(report.total_defect, report.is_product, "total index")


def check_mukai(report: InvariantReport) -> ConjectureVerdict:
    """d + rho - i rho >= 0, with equality exactly for (P^{i-1})^rho."""
    i = report.fano_index
    classified = report.factors is not None and all(f == i - 1 for f in report.factors)
    return _verdict(report.mukai_defect, classified, "Mukai")
