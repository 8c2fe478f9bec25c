"""
Módulo de Hadamard
==================

Construção, validação e serialização das matrizes de Hadamard
que alimentam todos os modelos.

Funções disponíveis:
- sylvester / paley1: construções
- validate: verificação H·Hᵀ = k·I
- parse / serialize: formato texto '+/-'
"""

from .matrix import (
    HadamardMatrix,
    bundled,
    generate,
    paley1,
    parse,
    read_hadamard,
    serialize,
    sylvester,
    validate,
    write_hadamard,
)

__all__ = [
    "HadamardMatrix",
    "bundled",
    "generate",
    "paley1",
    "parse",
    "read_hadamard",
    "serialize",
    "sylvester",
    "validate",
    "write_hadamard",
]

__version__ = "1.0.0"
__author__ = "Seu Nome"
