"""Branching of ambient modules to lifted D_n ⋉ V."""

from .linkage import (
    BranchingError,
    BranchingReport,
    branch_with_linkage,
    format_blocks,
    indecomposability_criterion,
    radical_actions,
    radical_commutation_failures,
)

__all__ = [
    'BranchingError', 'BranchingReport', 'branch_with_linkage', 'format_blocks',
    'indecomposability_criterion', 'radical_actions', 'radical_commutation_failures',
]
