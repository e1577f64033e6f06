"""Restriction of modules to embedded D_n."""

from .decompose import (
    DecompositionError,
    IsotypicDecomposition,
    decompose_under,
    linear_equivalence_witness,
)
from .isotypic import IsotypicSplitting, isotypic_splitting, isotypic_subspaces

__all__ = [
    'DecompositionError', 'IsotypicDecomposition', 'decompose_under',
    'linear_equivalence_witness', 'IsotypicSplitting', 'isotypic_splitting',
    'isotypic_subspaces',
]
