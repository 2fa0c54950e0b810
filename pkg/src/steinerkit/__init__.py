"""steinerkit: exact-arithmetic tools for Steiner t-designs.

Designs, parameter admissibility, permutation-group actions with
stabilizer chains, a catalog of the classical 3-homogeneous families, the
block-transitivity arithmetic screen, and Kramer-Mesner prescribed-group
design search.
"""

from .admissibility import (
    AdmissibilityReport,
    BoundsSummary,
    Condition,
    Status,
    bounds_summary,
    check,
    scan,
)
from .blocktrans import (
    BtEquationResult,
    EliminationVerdict,
    ImplicationResult,
    bt_equation_check,
    eliminate,
    subgroup_orbit_profile,
    sweep,
    verify_block_lemma,
    verify_flag_implication,
)
from .catalog import (
    CatalogEntry,
    affine_group,
    alternating_group,
    candidates_for_degree,
    catalog_entry_by_name,
    mathieu,
    mathieu_m11_degree12,
    projective_group,
    symmetric_group,
)
from .designs import (
    Design,
    DesignParameters,
    Flag,
    VerificationReport,
    complete_design,
    construct_boolean,
    derived,
    design_from_json,
    design_to_json,
    fano_plane,
    flags,
    lambda_s,
    verify,
)
from .errors import CapacityError, DataIntegrityError, MembershipError, NotAutomorphismError
from .gf import GF, FieldSpec, field
from .kramer_mesner import (
    OrbitMatrix,
    Selection,
    build_orbit_matrix,
    search_design,
    solve,
)
from .perms import (
    ActionReport,
    BlockActionReport,
    Permutation,
    PermutationGroup,
    homogeneity,
    induced_block_action,
    parse_cycles,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityReport",
    "ActionReport",
    "BlockActionReport",
    "BoundsSummary",
    "BtEquationResult",
    "CapacityError",
    "CatalogEntry",
    "Condition",
    "DataIntegrityError",
    "Design",
    "DesignParameters",
    "EliminationVerdict",
    "FieldSpec",
    "Flag",
    "GF",
    "ImplicationResult",
    "MembershipError",
    "NotAutomorphismError",
    "OrbitMatrix",
    "Permutation",
    "PermutationGroup",
    "Selection",
    "Status",
    "VerificationReport",
    "affine_group",
    "alternating_group",
    "bounds_summary",
    "bt_equation_check",
    "build_orbit_matrix",
    "candidates_for_degree",
    "catalog_entry_by_name",
    "check",
    "complete_design",
    "construct_boolean",
    "derived",
    "design_from_json",
    "design_to_json",
    "eliminate",
    "fano_plane",
    "field",
    "flags",
    "homogeneity",
    "induced_block_action",
    "lambda_s",
    "mathieu",
    "mathieu_m11_degree12",
    "parse_cycles",
    "projective_group",
    "scan",
    "search_design",
    "solve",
    "subgroup_orbit_profile",
    "sweep",
    "symmetric_group",
    "verify",
    "verify_block_lemma",
    "verify_flag_implication",
]
