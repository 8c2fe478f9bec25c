"""
Grafo de Nomura e Componentes
=============================

Os pares (a, b) são vértices; (a, b) ~ (c, d) quando
⟨Y_ab, Y_cd⟩ ≠ 0. As componentes conexas do grafo de M dão uma
base da álgebra de Nomura de Mᵀ, logo ``nomura_algebra(M)``
trabalha com o grafo de Mᵀ.

A varredura é determinística (linhas em ordem, candidatos q > p).
Com o salto ligado, só são avaliados candidatos em componentes
diferentes da componente atual de p; arestas extras nunca separam
componentes, então a partição final é a mesma.

Autor: Seu Nome
Data: 2025-09-20
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np
from tqdm import tqdm

from arithmetic import ExactSumKernel, ScalarContext, ZeroVerdict
from config import get_settings
from linalg import SpinMatrix
from utils.exceptions import AmbiguousEdge
from utils.helpers import stopwatch
from utils.logger import log_performance_metric, setup_logger
from .union_find import UnionFind
from .ytable import YTable, y_table

logger = setup_logger(__name__)


@dataclass(frozen=True, eq=False)
class PairPartition:
    """
    Partição dos n² pares ordenados.

    Attributes:
        n: Lado da matriz
        labels: Rótulo canônico de cada par linear a·n + b (menor índice da classe)
        evaluated_edges: Produtos internos avaliados para obtê-la
    """

    n: int
    labels: np.ndarray
    evaluated_edges: int = 0

    @classmethod
    def from_matrices(cls, matrices: Sequence[np.ndarray]) -> "PairPartition":
        """
        Partição dada por matrizes 0/1 de suportes disjuntos.

        Raises:
            ValueError: Suportes que não particionam os pares
        """
        stack = np.stack([np.asarray(m, dtype=np.int64).ravel() for m in matrices])
        if not (stack.sum(axis=0) == 1).all():
            raise ValueError("As matrizes não particionam os pares")
        n = int(round(np.sqrt(stack.shape[1])))
        owner = stack.argmax(axis=0)
        first = {int(c): int(np.flatnonzero(owner == c)[0]) for c in np.unique(owner)}
        labels = np.array([first[int(c)] for c in owner], dtype=np.int64)
        return cls(n, labels)

    @property
    def count(self) -> int:
        return int(len(np.unique(self.labels)))

    @property
    def representatives(self) -> List[int]:
        return [int(v) for v in np.unique(self.labels)]

    def classes(self) -> List[np.ndarray]:
        """Classes (índices lineares), ordenadas pelo rótulo."""
        return [np.flatnonzero(self.labels == label) for label in self.representatives]

    def sizes(self) -> List[int]:
        return [int(len(c)) for c in self.classes()]

    def matrices(self) -> List[np.ndarray]:
        """Matriz 0/1 A(C) de cada classe."""
        result = []
        for members in self.classes():
            matrix = np.zeros(self.n * self.n, dtype=np.int64)
            matrix[members] = 1
            result.append(matrix.reshape(self.n, self.n))
        return result

    def transposed(self) -> "PairPartition":
        """Partição dos pares (b, a)."""
        swapped = self.labels.reshape(self.n, self.n).T.ravel()
        return PairPartition.from_matrices(
            [(swapped == label).reshape(self.n, self.n) for label in np.unique(swapped)]
        )

    def diagonal_in_one_class(self) -> bool:
        diagonal = self.labels.reshape(self.n, self.n).diagonal()
        return bool((diagonal == diagonal[0]).all())

    def same_family(self, matrices: Sequence[np.ndarray]) -> bool:
        """Compara com uma família de matrizes 0/1 como conjunto de suportes."""
        ours = {m.astype(np.int64).tobytes() for m in self.matrices()}
        theirs = {np.asarray(m, dtype=np.int64).tobytes() for m in matrices}
        return ours == theirs

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PairPartition)
            and self.n == other.n
            and np.array_equal(self.labels, other.labels)
        )

    __hash__ = None


def nomura_graph(
    source,
    ctx: ScalarContext,
    skip: Optional[bool] = None,
    show_progress: Optional[bool] = None,
    kernel: Optional[ExactSumKernel] = None,
) -> PairPartition:
    """
    Componentes conexas do grafo dos vetores Y.

    Args:
        source: SpinMatrix ou YTable já calculada
        ctx: Contexto escalar
        skip: Pula candidatos já conectados (padrão: configurações)
        show_progress: Barra de progresso tqdm
        kernel: Kernel de somas (permite acumular contagens)

    Returns:
        PairPartition com o número de arestas avaliadas

    Raises:
        AmbiguousEdge: Algum produto interno com teste de zero ambíguo
    """
    settings = get_settings()
    skip = settings.skip_connected_edges if skip is None else skip
    show_progress = settings.show_progress if show_progress is None else show_progress
    table = source if isinstance(source, YTable) else y_table(source)
    kernel = kernel or ExactSumKernel(ctx)

    n = table.n
    total = n * n
    vectors_a, vectors_m = table.flat()
    components = UnionFind(total)
    evaluated = 0

    with stopwatch() as elapsed:
        for p in tqdm(range(total), desc=f"Grafo {table.label or ''}", disable=not show_progress):
            candidates = np.arange(p + 1, total)
            if skip:
                roots = components.roots()
                candidates = candidates[roots[candidates] != roots[p]]
            if not candidates.size:
                continue

            count = len(candidates)
            codes = kernel.inner_products(
                np.broadcast_to(vectors_a[p], (count, n)),
                np.broadcast_to(vectors_m[p], (count, n)),
                vectors_a[candidates],
                vectors_m[candidates],
            )
            evaluated += count

            ambiguous = np.flatnonzero(codes == ZeroVerdict.AMBIGUOUS)
            if ambiguous.size:
                q = int(candidates[ambiguous[0]])
                logger.warning(f"Aresta ambígua no grafo de {table.label}: {divmod(p, n)} ~ {divmod(q, n)}")
                raise AmbiguousEdge(
                    "Teste de zero ambíguo em aresta do grafo de Nomura",
                    pair=(p, q), left=divmod(p, n), right=divmod(q, n),
                    ambiguous=int(ambiguous.size),
                )

            for q in candidates[codes == ZeroVerdict.NONZERO]:
                components.union(p, int(q))

    partition = PairPartition(n, components.roots().copy(), evaluated)
    log_performance_metric(
        f"nomura_graph.{table.label}", elapsed[0],
        f"{partition.count} componentes, {evaluated} arestas avaliadas",
    )
    return partition


@dataclass(frozen=True, eq=False)
class NomuraResult:
    """
    Base da álgebra de Nomura.

    Attributes:
        partition: Classes de pares
        basis: Matrizes A(C_i)
        ambiguity_count: Testes ambíguos (0 para resultado definitivo)
        orientation: 'transpose' quando a base vem do grafo de Mᵀ
        label: Rótulo da matriz
        zero_tests: Balanço de vereditos do kernel
    """

    partition: PairPartition
    basis: List[np.ndarray]
    ambiguity_count: int = 0
    orientation: str = "transpose"
    label: Optional[str] = None
    zero_tests: Dict[str, int] = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def details(self) -> Dict:
        """Resumo para relatórios e para a CLI."""
        return {
            "dimension": self.dimension,
            "class_sizes": self.partition.sizes(),
            "representatives": [list(divmod(r, self.partition.n)) for r in self.partition.representatives],
            "ambiguity_count": self.ambiguity_count,
            "orientation": self.orientation,
            "evaluated_edges": self.partition.evaluated_edges,
            "zero_tests": self.zero_tests,
        }


def nomura_algebra(
    matrix: SpinMatrix,
    ctx: ScalarContext,
    skip: Optional[bool] = None,
    show_progress: Optional[bool] = None,
) -> NomuraResult:
    """
    Base de N(M) a partir das componentes do grafo de Mᵀ.

    Raises:
        AmbiguousEdge: Propagado de ``nomura_graph``
    """
    kernel = ExactSumKernel(ctx)
    partition = nomura_graph(matrix.transpose(), ctx, skip=skip, show_progress=show_progress, kernel=kernel)
    counts = kernel.summary(f"nomura.{matrix.label}")
    result = NomuraResult(
        partition=partition,
        basis=partition.matrices(),
        ambiguity_count=int(counts.get(ZeroVerdict.AMBIGUOUS.name, 0)),
        label=matrix.label,
        zero_tests=counts,
    )
    logger.info(f"N({matrix.label}): dimensão {result.dimension}, classes {partition.sizes()}")
    return result
