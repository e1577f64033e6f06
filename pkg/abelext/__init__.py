"""Abelian extensions of D_n inside E_{n+1} and the classification of lifts."""

from .abelian import (
    AbelianExtensionCatalog,
    AbelianExtensionError,
    AbelianityResult,
    CatalogEntry,
    MAX_ABELIAN_DIMENSION,
    PencilConditions,
    is_abelian_subspace,
    pencil_abelian_conditions,
    scan_invariant_abelian,
)
from .automorphisms import (
    IDENTITY_QUADRUPLE,
    AutomorphismError,
    TorusEquivalence,
    check_sl2_substitution,
    compose_quadruples,
    expected_frame_images,
    find_sl2_witness,
    frame_action_failures,
    is_sl2_witness,
    realize_torus_equivalence,
    sample_quadruples,
    sl2_automorphism_e7,
    sl2_invariant,
    sl2_lift_images,
    sl2_substitution,
    torus_automorphism,
    torus_scale_factor,
)
from .classify import (
    LiftClass,
    ScalingObstruction,
    WeightCertificate,
    cartan_scaling_obstruction,
    classify_lifts,
    format_classification,
    weight_eigenvalue_certificate,
)

__all__ = [
    'AbelianExtensionCatalog', 'AbelianExtensionError', 'AbelianityResult', 'CatalogEntry',
    'MAX_ABELIAN_DIMENSION', 'PencilConditions', 'is_abelian_subspace',
    'pencil_abelian_conditions', 'scan_invariant_abelian',
    'IDENTITY_QUADRUPLE', 'AutomorphismError', 'TorusEquivalence', 'check_sl2_substitution',
    'compose_quadruples', 'expected_frame_images', 'find_sl2_witness', 'frame_action_failures',
    'is_sl2_witness', 'realize_torus_equivalence', 'sample_quadruples', 'sl2_automorphism_e7',
    'sl2_invariant', 'sl2_lift_images', 'sl2_substitution', 'torus_automorphism',
    'torus_scale_factor',
    'LiftClass', 'ScalingObstruction', 'WeightCertificate', 'cartan_scaling_obstruction',
    'classify_lifts', 'format_classification', 'weight_eigenvalue_certificate',
]
