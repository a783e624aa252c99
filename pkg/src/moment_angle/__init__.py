"""Exact cohomology of moment-angle complexes and their Massey products."""

from .complexes import (
    SimplicialComplex,
    are_isomorphic,
    from_maximal_faces,
    from_minimal_nonfaces,
    induced_subcomplex,
    join,
    maximal_faces,
    stellar_vertex_cut,
    structure_report,
)
from .errors import (
    AmbientMismatchError,
    CapacityError,
    GhostVertexError,
    InputError,
    NotACocycleError,
    VerificationError,
)
from .families import FamilySpec, family_complex, polygon_nerve
from .graphs import (
    BuildingSet,
    FormalityVerdict,
    Graph,
    associahedron_nerve,
    formality_classify,
    graphical_building_set,
    nested_set_complex,
)
from .hochster import BettiTable, bigraded_betti_table, component_count_betti, multigraded_betti
from .koszul import (
    KoszulCochain,
    KoszulMonomial,
    cohomology_class,
    component_basis,
)
from .massey import (
    DefiningSystem,
    MasseyClassInput,
    MasseyInput,
    MasseyReport,
    build_defining_system,
    canonical_class,
    massey_product,
    massey_value,
    search_triple_products,
    strict_conditions_check,
    triple_value_set,
    verify_family_massey,
)
from .multiwedge import j_construction
from .rational_linalg import (
    CohomologyProfile,
    Rational,
    SparseMatrix,
    coboundary_matrix,
    reduced_cohomology_rank,
    reduced_cohomology_ranks,
    solve_linear,
)
from .real_cochains import (
    RealCochain,
    RealMonomial,
    doubling_cochain,
    real_cohomology_ranks,
)

__version__ = "0.1.0"

__all__ = [
    "AmbientMismatchError",
    "BettiTable",
    "BuildingSet",
    "CapacityError",
    "CohomologyProfile",
    "DefiningSystem",
    "FamilySpec",
    "FormalityVerdict",
    "GhostVertexError",
    "Graph",
    "InputError",
    "KoszulCochain",
    "KoszulMonomial",
    "MasseyClassInput",
    "MasseyInput",
    "MasseyReport",
    "NotACocycleError",
    "Rational",
    "RealCochain",
    "RealMonomial",
    "SimplicialComplex",
    "SparseMatrix",
    "VerificationError",
    "are_isomorphic",
    "associahedron_nerve",
    "bigraded_betti_table",
    "build_defining_system",
    "canonical_class",
    "coboundary_matrix",
    "cohomology_class",
    "component_basis",
    "component_count_betti",
    "doubling_cochain",
    "family_complex",
    "formality_classify",
    "from_maximal_faces",
    "from_minimal_nonfaces",
    "graphical_building_set",
    "induced_subcomplex",
    "j_construction",
    "join",
    "massey_product",
    "massey_value",
    "maximal_faces",
    "multigraded_betti",
    "nested_set_complex",
    "polygon_nerve",
    "real_cohomology_ranks",
    "reduced_cohomology_rank",
    "reduced_cohomology_ranks",
    "search_triple_products",
    "solve_linear",
    "stellar_vertex_cut",
    "strict_conditions_check",
    "structure_report",
    "triple_value_set",
    "verify_family_massey",
]
