"""Geometry and lattice services for split cubic fourfolds."""
from .ds_module import (
    GroupRingElement,
    TorsionCertificate,
    relation_matrix,
    rho,
    torsion_free_certificate,
)
from .fermat_catalog import (
    K_INDICES,
    BetaTriple,
    DecompositionRecord,
    LPlaneLabel,
    PlaneIndex,
    L_plane,
    all_fermat_planes,
    build_S_basis,
    decompose,
    decompose_all,
    gram_matrix,
    parse_index,
)
from .hesse_curves import (
    AutGroup,
    FlexDatum,
    HesseCubic,
    aut_group,
    aut_order,
    flex_table,
    hesse_form,
    j_invariant,
    verify_flex,
)
from .lattice_tools import (
    GramMatrix,
    LatticeReport,
    QuadraticSurd,
    complement_disc_check,
    congruence_check,
    im_phi_gram,
    lattice_invariants,
    shioda_mitani,
)
from .plane_geometry import (
    Plane,
    PlaneEnumeration,
    SplitHypersurface,
    count_planes,
    enumerate_planes,
    intersection_number,
)

__all__ = [
    # Hesse cubics
    "AutGroup",
    "FlexDatum",
    "HesseCubic",
    "aut_group",
    "aut_order",
    "flex_table",
    "hesse_form",
    "j_invariant",
    "verify_flex",
    # Planes
    "Plane",
    "PlaneEnumeration",
    "SplitHypersurface",
    "count_planes",
    "enumerate_planes",
    "intersection_number",
    # Fermat catalog
    "K_INDICES",
    "BetaTriple",
    "DecompositionRecord",
    "LPlaneLabel",
    "PlaneIndex",
    "L_plane",
    "all_fermat_planes",
    "build_S_basis",
    "decompose",
    "decompose_all",
    "gram_matrix",
    "parse_index",
    # Lattices
    "GramMatrix",
    "LatticeReport",
    "QuadraticSurd",
    "complement_disc_check",
    "congruence_check",
    "im_phi_gram",
    "lattice_invariants",
    "shioda_mitani",
    # Torsion
    "GroupRingElement",
    "TorsionCertificate",
    "relation_matrix",
    "rho",
    "torsion_free_certificate",
]
