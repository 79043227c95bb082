"""Exact invariants of smooth toric Fano varieties.

Picard number, Fano index, pseudo-index and the total index (the longest
decomposition of -K into nonzero nef classes), together with checks of the
Mukai conjecture and its total-index variant over polytope collections.
"""

from .fano import (
    Fan,
    FanoPolytope,
    PicClass,
    PolytopeError,
    Wall,
    anticanonical,
    choose_basis_rays,
    compute_walls,
    count_sections,
    face_fan,
    to_pic,
    validate_polytope,
    wall_functional,
)
from .invariants import (
    ConjectureVerdict,
    InvariantReport,
    build_report,
    check_mukai,
    check_total_index_conjecture,
    fano_index,
    is_product_of_projective_spaces,
    product_factors,
    pseudo_index,
)
from .nef import NefCone, build_nef_cone, enumerate_interval, is_nef, positivity_grading
from .tau import PartitionCertificate, total_index_bruteforce, total_index_dp

__version__ = "0.1.0"

__all__ = [
    "ConjectureVerdict", "Fan", "FanoPolytope", "InvariantReport", "NefCone",
    "PartitionCertificate", "PicClass", "PolytopeError", "Wall", "anticanonical",
    "build_nef_cone", "build_report", "check_mukai", "check_total_index_conjecture",
    "choose_basis_rays", "compute_walls", "count_sections", "enumerate_interval",
    "face_fan", "fano_index", "is_nef", "is_product_of_projective_spaces",
    "positivity_grading", "product_factors", "pseudo_index", "to_pic",
    "total_index_bruteforce", "total_index_dp", "validate_polytope", "wall_functional",
]
