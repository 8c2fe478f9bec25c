"""
Grafo de Hadamard e Relações
============================

Matrizes de distância A₀..A₄ do grafo de Hadamard, a matriz de
adjacência A′₁ do dígrafo associado e as relações R₀..R₄, R′₁, R′₃
definidas por predicados sobre ((a, α), (b, β)).

As duas apresentações são construídas de forma independente e
comparadas entrada a entrada.

Autor: Seu Nome
Data: 2025-09-20
"""

from dataclasses import dataclass
from typing import Dict, List, Optional

import numpy as np

from hadamard import HadamardMatrix
from linalg import Index4k, index_arrays
from utils.exceptions import DefinitionMismatch
from utils.helpers import timed
from utils.logger import setup_logger

logger = setup_logger(__name__)

DISTANCE_NAMES = ("A0", "A1", "A2", "A3", "A4")
RELATION_NAMES = ("R0", "R1", "R2", "R3", "R4")
MATRIX_FOR_RELATION = {
    "R0": "A0", "R1": "A1", "R2": "A2", "R3": "A3", "R4": "A4",
    "R1p": "A1p", "R3p": "A3p",
}


@dataclass(frozen=True, eq=False)
class Relation:
    """
    Relação nomeada como matriz 0/1.

    Attributes:
        name: Nome (ex.: 'R1', 'R1^0')
        matrix: Array inteiro 0/1 de lado 4k (ou n)
        predicate: Identificador do predicado que a define (opcional)
    """

    name: str
    matrix: np.ndarray
    predicate: Optional[str] = None

    def __post_init__(self):
        matrix = np.asarray(self.matrix, dtype=np.int64)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError(f"Relação {self.name} deve ser quadrada")
        if not np.isin(matrix, (0, 1)).all():
            raise ValueError(f"Relação {self.name} deve ser 0/1")
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @property
    def n(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def size(self) -> int:
        return int(self.matrix.sum())

    def pairs(self) -> np.ndarray:
        """Pares linearizados a·n + b contidos na relação."""
        return np.flatnonzero(self.matrix.ravel())


def _halves(matrix: HadamardMatrix):
    signs = matrix.signs
    ones = np.ones_like(signs)
    return (ones + signs) // 2, (ones - signs) // 2


def build_distance_matrices(matrix: HadamardMatrix) -> Dict[str, np.ndarray]:
    """
    Matrizes A₀..A₄, A′₁ e A′₃ = A′₁ᵀ do grafo de Hadamard.

    Com P = (J + H)/2 e M = (J − H)/2, A₁ tem blocos P, M no canto
    superior direito e Pᵀ, Mᵀ no inferior esquerdo; A′₁ troca a
    ordem dos blocos transpostos.

    Args:
        matrix: Matriz de Hadamard de ordem k

    Returns:
        Dicionário nome → array 4k×4k de inteiros 0/1
    """
    k = matrix.k
    plus, minus = _halves(matrix)
    zero = np.zeros((k, k), dtype=np.int64)
    eye = np.eye(k, dtype=np.int64)
    off = np.ones((k, k), dtype=np.int64) - eye

    a1 = np.block([
        [zero, zero, plus, minus],
        [zero, zero, minus, plus],
        [plus.T, minus.T, zero, zero],
        [minus.T, plus.T, zero, zero],
    ])
    a3 = np.block([
        [zero, zero, minus, plus],
        [zero, zero, plus, minus],
        [minus.T, plus.T, zero, zero],
        [plus.T, minus.T, zero, zero],
    ])
    a1p = np.block([
        [zero, zero, plus, minus],
        [zero, zero, minus, plus],
        [minus.T, plus.T, zero, zero],
        [plus.T, minus.T, zero, zero],
    ])
    a2 = np.block([
        [off, off, zero, zero],
        [off, off, zero, zero],
        [zero, zero, off, off],
        [zero, zero, off, off],
    ])
    a4 = np.block([
        [zero, eye, zero, zero],
        [eye, zero, zero, zero],
        [zero, zero, zero, eye],
        [zero, zero, eye, zero],
    ])

    matrices = {
        "A0": np.eye(4 * k, dtype=np.int64),
        "A1": a1,
        "A2": a2,
        "A3": a3,
        "A4": a4,
        "A1p": a1p,
        "A3p": a1p.T.copy(),
    }
    for value in matrices.values():
        value.setflags(write=False)
    return matrices


@timed("relations")
def build_relations(matrix: HadamardMatrix, check: bool = True) -> Dict[str, Relation]:
    """
    Relações definidas pelos predicados sobre ((a, α), (b, β)).

    R₁: (α₁, β₁) = (0, 1) e H(a, b) = (−1)^(α₂+β₂), ou (1, 0) e
    H(b, a) = (−1)^(α₂+β₂). R₃: o mesmo com expoente α₂+β₂+1.
    R′₁ usa a parte (0, 1) de R₁ e a parte (1, 0) de R₃.
    R₂: α₁ = β₁ e a ≠ b. R₄: a = b, α₁ = β₁ e α₂ ≠ β₂.

    Args:
        matrix: Matriz de Hadamard (H(a, b) = linha a, coluna b)
        check: Compara com ``build_distance_matrices``

    Returns:
        Dicionário nome → Relation

    Raises:
        DefinitionMismatch: Se alguma relação divergir da matriz correspondente
    """
    k = matrix.k
    signs = matrix.signs
    x, alpha1, alpha2 = index_arrays(k)

    a = x[:, None]
    b = x[None, :]
    row1, col1 = alpha1[:, None], alpha1[None, :]
    parity = (alpha2[:, None] + alpha2[None, :]) % 2
    sign = 1 - 2 * parity
    h_ab = signs[a, b]
    h_ba = signs[b, a]

    forward = (row1 == 0) & (col1 == 1)
    backward = (row1 == 1) & (col1 == 0)
    same_fiber = row1 == col1

    r1_forward = forward & (h_ab == sign)
    r1_backward = backward & (h_ba == sign)
    r3_forward = forward & (h_ab == -sign)
    r3_backward = backward & (h_ba == -sign)

    predicates = {
        "R0": (a == b) & (alpha1[:, None] == alpha1[None, :]) & (alpha2[:, None] == alpha2[None, :]),
        "R1": r1_forward | r1_backward,
        "R2": same_fiber & (a != b),
        "R3": r3_forward | r3_backward,
        "R4": (a == b) & same_fiber & (parity == 1),
        "R1p": r1_forward | r3_backward,
        "R3p": r3_forward | r1_backward,
    }
    relations = {
        name: Relation(name, predicate.astype(np.int64), predicate=f"{name}.predicate")
        for name, predicate in predicates.items()
    }

    if check:
        distances = build_distance_matrices(matrix)
        for name, relation in relations.items():
            expected = distances[MATRIX_FOR_RELATION[name]]
            diff = np.argwhere(relation.matrix != expected)
            if diff.size:
                i, j = (int(v) for v in diff[0])
                left, right = Index4k.from_linear(i, k), Index4k.from_linear(j, k)
                raise DefinitionMismatch(
                    f"Relação {name} diverge de {MATRIX_FOR_RELATION[name]}",
                    relation=name,
                    pair=((left.x, (left.alpha1, left.alpha2)), (right.x, (right.alpha1, right.alpha2))),
                    predicate=int(relation.matrix[i, j]),
                    matrix=int(expected[i, j]),
                )
        logger.debug(f"Relações conferem com as matrizes de distância (k={k})")

    return relations


def scheme_family(relations: Dict[str, Relation], which: str = "A") -> List[Relation]:
    """
    Família ordenada de relações.

    Args:
        relations: Saída de ``build_relations``
        which: 'A' para {R₀..R₄}, 'Aprime' para {R₀, R′₁, R₂, R′₃, R₄}
    """
    if which == "A":
        names = RELATION_NAMES
    elif which == "Aprime":
        names = ("R0", "R1p", "R2", "R3p", "R4")
    else:
        raise ValueError(f"Família desconhecida: {which}. Use 'A' ou 'Aprime'")
    return [relations[name] for name in names]
