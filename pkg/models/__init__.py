"""
Módulo de Modelos
=================

Modelo de Potts, os modelos de spin W, W′ e suas versões
normalizadas W̃, W̃′, com as condições tipo II/III e as
identidades de gauge.

Funções disponíveis:
- potts / build_model: construção
- type2_check / type3_check: condições de modelo de spin
- gauge_identity_check: equivalências entre W, W̃ e W′, W̃′
"""

from .builders import MODEL_ALIASES, ModelKind, available_models, build_model, expansion, potts
from .conditions import loop_factor, type2_check, type3_check
from .gauge import (
    asymmetry_witness,
    block_diagonal,
    block_swap_diagonal,
    d_matrix,
    gauge_identity_check,
    is_symmetric,
)

__all__ = [
    "MODEL_ALIASES",
    "ModelKind",
    "available_models",
    "build_model",
    "expansion",
    "potts",
    "loop_factor",
    "type2_check",
    "type3_check",
    "asymmetry_witness",
    "block_diagonal",
    "block_swap_diagonal",
    "d_matrix",
    "gauge_identity_check",
    "is_symmetric",
]

__version__ = "1.0.0"
__author__ = "Seu Nome"
