"""
Módulo de Aritmética
====================

Escalares exatos e numéricos para as entradas dos modelos de spin,
com teste de zero em três valores.

Classes disponíveis:
- Monomial: c·ζ₈^a·u^m
- LaurentScalar: somas de monômios reduzidas por u⁸ = (k−2)u⁴ − 1
- CycScalar: elementos de Q(ζ_N), N ∈ {8, 16, 24}
- ScalarContext: parâmetros validados (k, u, ω, ξ, backend)
- BackendFactory: criação dos backends de teste de zero
- ExactSumKernel: somas agrupadas vetorizadas
"""

from .backends import BackendFactory, BaseBackend, ZeroVerdict, is_zero
from .context import ScalarContext, UMode, UModeKind, default_u_mode, make_context
from .cyclotomic import CycScalar
from .kernel import ExactSumKernel, pack_monomial_matrix, raise_if_ambiguous
from .laurent import (
    LaurentScalar,
    Scalar,
    as_laurent,
    parse_scalar,
    scalar_add,
    scalar_conj,
    scalar_equal,
    scalar_inv,
    scalar_mul,
)
from .monomial import Monomial

__all__ = [
    "BackendFactory",
    "BaseBackend",
    "ZeroVerdict",
    "is_zero",
    "ScalarContext",
    "UMode",
    "UModeKind",
    "default_u_mode",
    "make_context",
    "CycScalar",
    "ExactSumKernel",
    "pack_monomial_matrix",
    "raise_if_ambiguous",
    "LaurentScalar",
    "Scalar",
    "as_laurent",
    "parse_scalar",
    "scalar_add",
    "scalar_conj",
    "scalar_equal",
    "scalar_inv",
    "scalar_mul",
    "Monomial",
]

__version__ = "1.0.0"
__author__ = "Seu Nome"
