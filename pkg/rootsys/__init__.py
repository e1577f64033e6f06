"""Cartan matrices, root systems and weights for D_n and E_6, E_7, E_8."""

from .types import (
    SimpleType,
    Weight,
    RootSystemError,
    UnsupportedTypeError,
    NonDominantWeightError,
    WeightIndexError,
)
from .cartan import cartan_matrix, dynkin_edges
from .roots import (
    Root,
    RootSystem,
    algebra_dimension,
    build_root_system,
    fundamental_coweight,
    height,
    highest_root,
    positive_roots_of_height,
    root_to_weight,
    simple_reflection,
    weight_of_lowering_word,
    weyl_dim,
)

__all__ = [
    'SimpleType', 'Weight', 'RootSystemError', 'UnsupportedTypeError',
    'NonDominantWeightError', 'WeightIndexError', 'cartan_matrix', 'dynkin_edges',
    'Root', 'RootSystem', 'algebra_dimension', 'build_root_system',
    'fundamental_coweight', 'height', 'highest_root', 'positive_roots_of_height',
    'root_to_weight', 'simple_reflection', 'weight_of_lowering_word', 'weyl_dim',
]
