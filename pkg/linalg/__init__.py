"""
Módulo de Álgebra Linear
========================

Matrizes densas sobre escalares exatos com a convenção de blocos
X × (ℤ/2ℤ)² e o produto hermitiano dos vetores de Nomura.

Classes disponíveis:
- Index4k: índice (x, α₁, α₂)
- SpinMatrix: matriz quadrada de escalares
- ColumnVector: vetor de escalares
"""

from .index import Index4k, index_arrays, tau_permutation
from .matrix import (
    ColumnVector,
    SpinMatrix,
    block4,
    dump_matrix,
    hermitian_ip,
    lincomb,
    load_matrix,
    matmul,
)

__all__ = [
    "Index4k",
    "index_arrays",
    "tau_permutation",
    "ColumnVector",
    "SpinMatrix",
    "block4",
    "dump_matrix",
    "hermitian_ip",
    "lincomb",
    "load_matrix",
    "matmul",
]

__version__ = "1.0.0"
__author__ = "Seu Nome"
