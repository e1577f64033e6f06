"""Embeddings of D_n in E_{n+1}, their lifts and generated subspaces."""

from .maps import (
    EmbeddingError,
    EmbeddingMap,
    HomomorphismError,
    LiftError,
    SUPPORTED_SOURCE_RANKS,
    VARIANTS,
    embedding,
    natural_embedding,
    outer_automorphism_permutation,
    target_node,
    twisted_embedding,
)
from .closure import (
    apply_word,
    first_nonzero_bracket,
    generated_subalgebra,
    generated_submodule,
    image_span,
    span_contains_element,
    submodule_with_words,
)
from .lifts import (
    LIFT_FAMILIES,
    element_from_terms,
    frame_elements,
    highest_weight_failures,
    lift_embedding,
    lift_from_description,
    lift_label,
    radical_failures,
    require_homomorphism,
    standard_lift,
    verify_homomorphism,
)

__all__ = [
    'EmbeddingError', 'EmbeddingMap', 'HomomorphismError', 'LiftError',
    'SUPPORTED_SOURCE_RANKS', 'VARIANTS', 'embedding', 'natural_embedding',
    'outer_automorphism_permutation', 'target_node', 'twisted_embedding',
    'apply_word', 'first_nonzero_bracket', 'generated_subalgebra', 'generated_submodule',
    'image_span', 'span_contains_element', 'submodule_with_words',
    'LIFT_FAMILIES', 'element_from_terms', 'frame_elements', 'highest_weight_failures',
    'lift_embedding', 'lift_from_description', 'lift_label', 'radical_failures',
    'require_homomorphism', 'standard_lift', 'verify_homomorphism',
]
