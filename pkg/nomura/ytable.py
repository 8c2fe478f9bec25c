"""
Tabela de Vetores Y
===================

Para uma matriz M de lado n com entradas monomiais, o vetor
Y_ab tem entrada x igual a M(x, a)/M(x, b). A tabela guarda os
n² vetores empacotados: expoente de ζ₈ em 0..7 (sinal incluído)
e expoente de u.

Autor: Seu Nome
Data: 2025-09-20
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from arithmetic import Monomial, pack_monomial_matrix
from arithmetic.monomial import ZETA_ORDER
from linalg import ColumnVector, SpinMatrix
from utils.helpers import timed


@dataclass(frozen=True, eq=False)
class YTable:
    """
    Vetores Y_ab empacotados.

    Attributes:
        n: Lado da matriz de origem
        a: Expoentes de ζ₈, forma (n, n, n) indexada por [a, b, x]
        m: Expoentes de u, mesma forma
        label: Rótulo da matriz de origem
    """

    n: int
    a: np.ndarray
    m: np.ndarray
    label: Optional[str] = None

    def pair_index(self, a: int, b: int) -> int:
        return a * self.n + b

    def flat(self) -> Tuple[np.ndarray, np.ndarray]:
        """Vetores como linhas (n² × n), na ordem linear a·n + b."""
        return self.a.reshape(self.n * self.n, self.n), self.m.reshape(self.n * self.n, self.n)

    def vector(self, a: int, b: int) -> ColumnVector:
        """Y_ab como vetor de monômios."""
        return ColumnVector(tuple(
            Monomial(1, int(za), int(zm)) for za, zm in zip(self.a[a, b], self.m[a, b])
        ))


@timed("y_table")
def y_table(matrix: SpinMatrix) -> YTable:
    """
    Constrói a tabela de todos os Y_ab de M.

    Raises:
        NonInvertibleEntry: Entrada nula ou não monomial unitária
    """
    a, m = pack_monomial_matrix(matrix.entries)[:2]
    by_column_a, by_column_m = a.T, m.T
    table_a = (by_column_a[:, None, :] - by_column_a[None, :, :]) % ZETA_ORDER
    table_m = by_column_m[:, None, :] - by_column_m[None, :, :]
    return YTable(matrix.n, table_a, table_m, matrix.label)
