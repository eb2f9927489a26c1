"""Ordered block permutations, their admissibility, and the flat surfaces they build."""

from .admissibility import (
    AdmissibilityReport,
    Side,
    Verdict,
    check_admissible,
    check_cover,
    check_first_return,
    check_irreducible,
    check_no_fake,
    check_top_bottom,
    quick_filters,
)
from .core import (
    BlockStructure,
    Obp,
    ObpInstance,
    OrbitDecomposition,
    build_blocks,
    build_tau,
    cycle_count,
    decompose_orbits,
    invert_obp,
    split_orbit_at_bottom,
    split_orbit_at_top,
)
from .geometry import (
    HorizontalEdges,
    IntersectionForm,
    RectangleLayout,
    SingularityData,
    Surface,
    SurfacePoint,
    apply_map,
    build_geometry,
    intersection_form,
    singularity_classes,
    solve_x,
    solve_y,
    strand_partition_check,
    symplectic_check,
    verify_surface,
)
from .search import (
    SearchCounters,
    SearchResult,
    SearchSpec,
    enumerate_admissible,
    min_dilatation,
    run_search,
)
from .spectral import (
    Normalization,
    PerronData,
    TransitionMatrix,
    build_matrix,
    check_lambda_bounds,
    conjugate_matrix,
    perron,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityReport",
    "BlockStructure",
    "HorizontalEdges",
    "IntersectionForm",
    "Normalization",
    "Obp",
    "ObpInstance",
    "OrbitDecomposition",
    "PerronData",
    "RectangleLayout",
    "SearchCounters",
    "SearchResult",
    "SearchSpec",
    "Side",
    "SingularityData",
    "Surface",
    "SurfacePoint",
    "TransitionMatrix",
    "Verdict",
    "apply_map",
    "build_blocks",
    "build_geometry",
    "build_matrix",
    "build_tau",
    "check_admissible",
    "check_cover",
    "check_first_return",
    "check_irreducible",
    "check_lambda_bounds",
    "check_no_fake",
    "check_top_bottom",
    "conjugate_matrix",
    "cycle_count",
    "decompose_orbits",
    "enumerate_admissible",
    "intersection_form",
    "invert_obp",
    "min_dilatation",
    "perron",
    "quick_filters",
    "run_search",
    "singularity_classes",
    "solve_x",
    "solve_y",
    "split_orbit_at_bottom",
    "split_orbit_at_top",
    "strand_partition_check",
    "symplectic_check",
    "verify_surface",
]
