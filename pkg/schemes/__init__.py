"""
Módulo de Esquemas
==================

Grafo de Hadamard (simétrico e dirigido), relações, axiomas de
esquema de associação, configuração coerente, automorfismo ρ e fusão.

Funções disponíveis:
- build_distance_matrices / build_relations
- scheme_check: axiomas e tensor de interseção
- coherent_config_check / rho_automorphism_check / fuse_rho_orbits
- cyclic_scheme: esquema de ℤ/nℤ
"""

from .coherent import (
    coherent_config_check,
    fiber_relations,
    fuse_rho_orbits,
    fusion_check,
    rho_automorphism_check,
    rho_orbits,
    rho_permutation,
    support_family_isomorphism,
)
from .relations import (
    MATRIX_FOR_RELATION,
    Relation,
    build_distance_matrices,
    build_relations,
    scheme_family,
)
from .scheme import (
    IntersectionTensor,
    SchemeSpec,
    cyclic_scheme,
    distance_regular_check,
    intersection_array,
    is_thin,
    scheme_check,
    structure_constants,
    tensor_isomorphism,
    thin_group_orders,
    valencies,
)

__all__ = [
    "MATRIX_FOR_RELATION",
    "Relation",
    "build_distance_matrices",
    "build_relations",
    "scheme_family",
    "IntersectionTensor",
    "SchemeSpec",
    "cyclic_scheme",
    "distance_regular_check",
    "intersection_array",
    "is_thin",
    "scheme_check",
    "structure_constants",
    "tensor_isomorphism",
    "thin_group_orders",
    "valencies",
    "coherent_config_check",
    "fiber_relations",
    "fuse_rho_orbits",
    "fusion_check",
    "rho_automorphism_check",
    "rho_orbits",
    "rho_permutation",
    "support_family_isomorphism",
]

__version__ = "1.0.0"
__author__ = "Seu Nome"
