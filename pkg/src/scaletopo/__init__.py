"""Simplicial complex of non-chromatic musical scales.

Scales over a cyclic pitch-class universe, the downward-closed complex of
non-chromatic ones, its f-vector and facets, exact reduced rational
homology, elementary collapses, and the decomposition into nine-note-scale
5-spheres.
"""

from .classify import (
    FacetClass,
    check_no_wide_intervals,
    check_threes_flanked_by_semitones,
    classify_facets,
    enumerate_maximal_sequences,
    sequence_class_name,
)
from .collapse import (
    CollapseResult,
    FreePair,
    collapse_above_dim,
    collapse_pair,
    find_free_pairs,
    is_collapsible_facet,
)
from .complexes import (
    CapacityError,
    SimplicialComplex,
    build_non_chromatic_complex,
)
from .homology import (
    BoundaryMatrix,
    Chain,
    apply_boundary,
    boundary_matrix,
    connected_components,
    cycle_space_basis,
    homology_rank_of_cycles,
    is_cycle,
    rank_exact,
    reduced_betti,
)
from .spheres import (
    BasisReport,
    MessiaenScale,
    SphereCertificate,
    augmented_triads,
    basis_report,
    fundamental_cycle,
    messiaen_scales,
    pairwise_intersection,
    sphere_hexatonics,
    sphere_subcomplex,
    triple_intersection,
    verify_homology_sphere,
)
from .universe import (
    DEFAULT_UNIVERSE,
    NOTE_NAMES,
    PitchUniverse,
    canonical_rotation,
    distance,
    format_intervals,
    format_scale,
    interval_sequence,
    is_non_chromatic,
    mode_count,
    orbit_size,
    parse_scale,
    pitch_classes,
    scale_of,
    symmetry_order,
    transpose,
)

__version__ = "0.1.0"

__all__ = [
    "BasisReport",
    "BoundaryMatrix",
    "CapacityError",
    "Chain",
    "CollapseResult",
    "DEFAULT_UNIVERSE",
    "FacetClass",
    "FreePair",
    "MessiaenScale",
    "NOTE_NAMES",
    "PitchUniverse",
    "SimplicialComplex",
    "SphereCertificate",
    "apply_boundary",
    "augmented_triads",
    "basis_report",
    "boundary_matrix",
    "build_non_chromatic_complex",
    "canonical_rotation",
    "check_no_wide_intervals",
    "check_threes_flanked_by_semitones",
    "classify_facets",
    "collapse_above_dim",
    "collapse_pair",
    "connected_components",
    "cycle_space_basis",
    "distance",
    "enumerate_maximal_sequences",
    "find_free_pairs",
    "format_intervals",
    "format_scale",
    "fundamental_cycle",
    "homology_rank_of_cycles",
    "interval_sequence",
    "is_collapsible_facet",
    "is_cycle",
    "is_non_chromatic",
    "messiaen_scales",
    "mode_count",
    "orbit_size",
    "pairwise_intersection",
    "parse_scale",
    "pitch_classes",
    "rank_exact",
    "reduced_betti",
    "scale_of",
    "sequence_class_name",
    "sphere_hexatonics",
    "sphere_subcomplex",
    "symmetry_order",
    "transpose",
    "triple_intersection",
    "verify_homology_sphere",
]
