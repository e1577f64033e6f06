"""Chevalley bases, brackets, named elements and relation checks."""

from .element import (
    AlgebraElement,
    ElementMismatchError,
    coefficient_is_zero,
    normalize_coefficient,
    proportionality,
)
from .algebra import (
    AlgebraError,
    IntegralityError,
    LieAlgebra,
    UnknownIndexError,
    basis_labels,
    build_algebra,
)
from .commutators import (
    NamedElementError,
    NamedElements,
    SPECIAL_CARTAN,
    e7_frame,
    element_recipe,
    lowered,
    named_elements,
    nested_commutator,
    resolve_element,
    sign_audit,
)
from .checks import (
    JacobiReport,
    SerreReport,
    check_antisymmetry,
    check_generator_relations,
    check_jacobi,
    jacobi_defect,
    verify_serre,
    weight_vector_failures,
)
from .automorphism import GeneratorMap, GeneratorMapError
from .serialize import TableFormatError, dump_table, load_table, read_table, write_table
from .registry import AlgebraRegistry

__all__ = [
    'AlgebraElement', 'ElementMismatchError', 'coefficient_is_zero',
    'normalize_coefficient', 'proportionality',
    'AlgebraError', 'IntegralityError', 'LieAlgebra', 'UnknownIndexError',
    'basis_labels', 'build_algebra',
    'NamedElementError', 'NamedElements', 'SPECIAL_CARTAN', 'e7_frame', 'element_recipe',
    'lowered', 'named_elements', 'nested_commutator', 'resolve_element', 'sign_audit',
    'JacobiReport', 'SerreReport', 'check_antisymmetry', 'check_generator_relations',
    'check_jacobi', 'jacobi_defect', 'verify_serre', 'weight_vector_failures',
    'GeneratorMap', 'GeneratorMapError',
    'TableFormatError', 'dump_table', 'load_table', 'read_table', 'write_table',
    'AlgebraRegistry',
]
