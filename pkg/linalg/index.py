"""
Índices X × (ℤ/2ℤ)²
===================

Linearização (x, α₁, α₂) ↦ (2α₁ + α₂)·k + x, que ordena os blocos
como X×{(0,0)}, X×{(0,1)}, X×{(1,0)}, X×{(1,1)}.

Autor: Seu Nome
Data: 2025-09-20
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np


@dataclass(frozen=True)
class Index4k:
    """
    Índice (x, α₁, α₂) com x ∈ 0..k−1 e α bits.
    """

    x: int
    alpha1: int
    alpha2: int

    def __post_init__(self):
        if self.alpha1 not in (0, 1) or self.alpha2 not in (0, 1) or self.x < 0:
            raise ValueError(f"Índice inválido: {self}")

    @property
    def block(self) -> int:
        return 2 * self.alpha1 + self.alpha2

    def linear(self, k: int) -> int:
        if self.x >= k:
            raise ValueError(f"x={self.x} fora de 0..{k - 1}")
        return self.block * k + self.x

    @classmethod
    def from_linear(cls, index: int, k: int) -> "Index4k":
        block, x = divmod(index, k)
        if not 0 <= block < 4:
            raise ValueError(f"Índice {index} fora de 0..{4 * k - 1}")
        return cls(x, block // 2, block % 2)

    def tau(self) -> "Index4k":
        """τ(α₁, α₂) = (α₁, α₁ + α₂)."""
        return Index4k(self.x, self.alpha1, (self.alpha1 + self.alpha2) % 2)


def index_arrays(k: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Componentes de todos os 4k índices lineares.

    Returns:
        (x, α₁, α₂) como arrays de comprimento 4k
    """
    linear = np.arange(4 * k)
    block, x = np.divmod(linear, k)
    return x, block // 2, block % 2


def tau_permutation(k: int) -> np.ndarray:
    """Permutação de 0..4k−1 induzida por τ."""
    x, alpha1, alpha2 = index_arrays(k)
    return (2 * alpha1 + (alpha1 + alpha2) % 2) * k + x
