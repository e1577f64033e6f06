"""Highest-weight modules and their generator actions."""

from .module import (
    DimensionCapError,
    ModuleError,
    WeightModule,
    action_of,
    adjoint_module,
    check_module_relations,
    format_multiplicities,
    weight_multiplicities,
    weyl_symmetry_failures,
)
from .irrep import DEFAULT_DIMENSION_CAP, construct_irrep, highest_weight_module

__all__ = [
    'DimensionCapError', 'ModuleError', 'WeightModule', 'action_of', 'adjoint_module',
    'check_module_relations', 'format_multiplicities', 'weight_multiplicities',
    'weyl_symmetry_failures', 'DEFAULT_DIMENSION_CAP', 'construct_irrep',
    'highest_weight_module',
]
