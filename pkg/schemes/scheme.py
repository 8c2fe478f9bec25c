"""
Esquemas de Associação
======================

Axiomas de Bose–Mesner (identidade, transposição, fechamento),
números de interseção p_ij^l, o esquema cíclico ℤ/nℤ e diagnósticos
(arranjo de interseção, ordens de elementos de esquemas finos).

Os números p_ij^l são lidos numa célula representativa de cada
classe l e depois conferidos em todas as entradas do produto.

Autor: Seu Nome
Data: 2025-09-20
"""

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from hadamard import HadamardMatrix
from utils.exceptions import PreconditionFailed
from utils.helpers import stopwatch
from utils.logger import setup_logger
from utils.reports import VerificationReport
from .relations import Relation, build_distance_matrices

logger = setup_logger(__name__)


@dataclass(frozen=True, eq=False)
class IntersectionTensor:
    """
    Constantes de estrutura p[i][j][l] = p_ij^l.

    Attributes:
        p: Array inteiro (d × d × d)
        names: Nome de cada classe
    """

    p: np.ndarray
    names: Tuple[str, ...]

    @property
    def dimension(self) -> int:
        return int(self.p.shape[0])

    def __getitem__(self, index):
        return self.p[index]

    def to_list(self) -> List:
        return self.p.tolist()


@dataclass(frozen=True, eq=False)
class SchemeSpec:
    """
    Família de relações com identidade e pareamento por transposição.

    Attributes:
        name: Nome da família
        relations: Relações (ordem fixa)
        identity_index: Índice de R₀ (None se ainda não verificado)
        transpose_map: i ↦ i′ com A_iᵀ = A_i′
    """

    name: str
    relations: Tuple[Relation, ...]
    identity_index: Optional[int] = None
    transpose_map: Dict[int, int] = field(default_factory=dict)

    @property
    def matrices(self) -> List[np.ndarray]:
        return [relation.matrix for relation in self.relations]

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(relation.name for relation in self.relations)

    @property
    def n(self) -> int:
        return self.relations[0].n

    @property
    def dimension(self) -> int:
        return len(self.relations)


def structure_constants(
    matrices: Sequence[np.ndarray],
) -> Tuple[np.ndarray, Optional[Dict[str, int]]]:
    """
    Lê p_ij^l numa célula representativa e confere globalmente.

    Args:
        matrices: Matrizes 0/1 que particionam o quadrado

    Returns:
        (tensor, testemunha) com testemunha None quando todo produto
        A_i·A_j está no espaço gerado
    """
    stack = np.stack([np.asarray(m, dtype=np.int64) for m in matrices])
    size = len(stack)
    representatives = []
    for matrix in stack:
        cells = np.argwhere(matrix)
        representatives.append(tuple(int(v) for v in cells[0]) if len(cells) else None)

    p = np.zeros((size, size, size), dtype=np.int64)
    for i in range(size):
        for j in range(size):
            product = stack[i] @ stack[j]
            for l, cell in enumerate(representatives):
                if cell is not None:
                    p[i, j, l] = product[cell]
            residual = product - np.tensordot(p[i, j], stack, axes=1)
            bad = np.argwhere(residual != 0)
            if bad.size:
                row, col = (int(v) for v in bad[0])
                return p, {
                    "i": i, "j": j, "row": row, "column": col,
                    "residual": int(residual[row, col]),
                }
    return p, None


def scheme_check(
    relations: Sequence[Relation], name: str = "scheme"
) -> Tuple[VerificationReport, Optional[IntersectionTensor]]:
    """
    Verifica os axiomas de Bose–Mesner e devolve o tensor de interseção.

    Axiomas: partição do quadrado (Σ A_i = J), identidade entre as
    relações, fechamento por transposição e fechamento por produto
    com constantes inteiras não negativas.

    Args:
        relations: Relações (ou SchemeSpec.relations)
        name: Nome da família para o relatório

    Returns:
        (relatório, tensor) com tensor None quando a verificação falha
        antes do fechamento
    """
    check_id = f"scheme_check.{name}"
    relations = list(relations)
    names = tuple(relation.name for relation in relations)
    matrices = [relation.matrix for relation in relations]
    n = relations[0].n
    fields = {"details": {"relations": list(names), "dimension": len(relations)}}

    with stopwatch() as elapsed:
        total = np.sum(matrices, axis=0)
        bad = np.argwhere(total != 1)
        if bad.size:
            row, col = (int(v) for v in bad[0])
            report = VerificationReport.from_outcome(
                check_id, [{"axiom": "partition", "row": row, "column": col, "count": int(total[row, col])}],
                error="VerificationFailed", **fields,
            )
            return report, None

        eye = np.eye(n, dtype=np.int64)
        identity = next((i for i, m in enumerate(matrices) if np.array_equal(m, eye)), None)
        if identity is None:
            report = VerificationReport.from_outcome(
                check_id, [{"axiom": "identity"}], error="VerificationFailed", **fields,
            )
            return report, None

        transpose_map = {}
        for i, matrix in enumerate(matrices):
            partner = next(
                (j for j, other in enumerate(matrices) if np.array_equal(matrix.T, other)), None
            )
            if partner is None:
                report = VerificationReport.from_outcome(
                    check_id, [{"axiom": "transpose", "relation": names[i]}],
                    error="VerificationFailed", **fields,
                )
                return report, None
            transpose_map[i] = partner

        p, witness = structure_constants(matrices)

    tensor = IntersectionTensor(p, names)
    details = {
        **fields["details"],
        "identity": identity,
        "transpose_map": transpose_map,
        "valencies": [int(m[0].sum()) for m in matrices],
        "tensor": p.tolist(),
    }
    witnesses = []
    if witness is not None:
        witness = {**witness, "left": names[witness["i"]], "right": names[witness["j"]]}
        witnesses.append({"axiom": "closure", **witness})

    report = VerificationReport.from_outcome(
        check_id, witnesses, error="NotClosed", details=details, timing=elapsed[0],
    )
    logger.debug(f"Esquema {name}: {report.verdict.value} (dimensão {len(relations)})")
    return report, (tensor if witness is None else None)


def cyclic_scheme(n: int) -> SchemeSpec:
    """
    Esquema do grupo ℤ/nℤ: classes Pⁱ, com P a permutação do n-ciclo.

    Args:
        n: Ordem do grupo (n ≥ 1)
    """
    if n < 1:
        raise ValueError("n deve ser positivo")
    cycle = np.roll(np.eye(n, dtype=np.int64), 1, axis=1)
    relations = []
    power = np.eye(n, dtype=np.int64)
    for i in range(n):
        relations.append(Relation(f"C{i}", power.copy(), predicate=f"Z{n}.{i}"))
        power = power @ cycle
    transpose_map = {i: (-i) % n for i in range(n)}
    return SchemeSpec(f"Z{n}", tuple(relations), identity_index=0, transpose_map=transpose_map)


def valencies(tensor: IntersectionTensor, identity: int = 0) -> List[int]:
    """Valência de cada classe: p_{i i′}^0 = Σ_j p_ij^0."""
    return [int(tensor.p[i, :, identity].sum()) for i in range(tensor.dimension)]


def intersection_array(tensor: IntersectionTensor) -> Tuple[List[int], List[int]]:
    """
    Arranjo de interseção com A₁ como adjacência e classes em ordem de distância.

    b_i = p^i_{1,i+1} e c_i = p^i_{1,i−1}.

    Returns:
        ([b₀, ..., b_{D−1}], [c₁, ..., c_D])
    """
    diameter = tensor.dimension - 1
    b = [int(tensor.p[1, i + 1, i]) for i in range(diameter)]
    c = [int(tensor.p[1, i - 1, i]) for i in range(1, diameter + 1)]
    return b, c


def distance_regular_check(matrix: HadamardMatrix) -> VerificationReport:
    """
    Confere o arranjo {k, k−1, k/2, 1; 1, k/2, k−1, k} e as valências 1, k, 2(k−1), k, 1.

    Raises:
        PreconditionFailed: Para k ímpar (o grafo não tem diâmetro 4)
    """
    k = matrix.k
    if k < 2 or k % 2:
        raise PreconditionFailed("Arranjo de interseção exige k par (k ≥ 2)", k=k)

    distances = build_distance_matrices(matrix)
    relations = [Relation(name, distances[name]) for name in ("A0", "A1", "A2", "A3", "A4")]
    report, tensor = scheme_check(relations, "distance")
    if tensor is None:
        return VerificationReport.from_subreports(
            "distance_regular", [report], k=k, parameters={"source": matrix.source}
        )

    b, c = intersection_array(tensor)
    expected_b, expected_c = [k, k - 1, k // 2, 1], [1, k // 2, k - 1, k]
    found_valencies = valencies(tensor)
    expected_valencies = [1, k, 2 * (k - 1), k, 1]

    witnesses = []
    if (b, c) != (expected_b, expected_c):
        witnesses.append({"array": [b, c], "expected": [expected_b, expected_c]})
    if found_valencies != expected_valencies:
        witnesses.append({"valencies": found_valencies, "expected": expected_valencies})

    return VerificationReport.from_outcome(
        "distance_regular", witnesses, k=k,
        parameters={"source": matrix.source},
        details={"b": b, "c": c, "valencies": found_valencies},
    )


def is_thin(tensor: IntersectionTensor, identity: int = 0) -> bool:
    return all(v == 1 for v in valencies(tensor, identity))


def thin_group_orders(tensor: IntersectionTensor, identity: int = 0) -> Optional[List[int]]:
    """
    Ordens dos elementos do grupo de um esquema fino (todas as valências 1).

    Em um esquema fino cada classe é um elemento g_i com g_i·g_j = g_l
    quando p_ij^l = 1.

    Returns:
        Lista ordenada de ordens, ou None se o esquema não for fino
    """
    if not is_thin(tensor, identity):
        return None
    product = tensor.p.argmax(axis=2)
    orders = []
    for g in range(tensor.dimension):
        current, order = g, 1
        while current != identity:
            current = int(product[current, g])
            order += 1
            if order > tensor.dimension:
                return None
        orders.append(order)
    return sorted(orders)


def tensor_isomorphism(
    left: IntersectionTensor, right: IntersectionTensor,
    left_identity: int = 0, right_identity: int = 0,
) -> Optional[Tuple[int, ...]]:
    """
    Procura uma bijeção de classes que leva um tensor no outro.

    Busca exaustiva sobre permutações que fixam a identidade e
    preservam valências (escala de bancada: dimensão ≤ 8).

    Returns:
        Permutação π (classe i da esquerda ↦ π[i] da direita) ou None
    """
    if left.dimension != right.dimension:
        return None
    size = left.dimension
    left_valencies = valencies(left, left_identity)
    right_valencies = valencies(right, right_identity)
    if sorted(left_valencies) != sorted(right_valencies):
        return None

    others = [i for i in range(size) if i != left_identity]
    targets = [j for j in range(size) if j != right_identity]
    for image in itertools.permutations(targets):
        mapping = [0] * size
        mapping[left_identity] = right_identity
        for i, j in zip(others, image):
            mapping[i] = j
        if any(left_valencies[i] != right_valencies[mapping[i]] for i in range(size)):
            continue
        r = np.asarray(mapping)
        if np.array_equal(right.p[np.ix_(r, r, r)], left.p):
            return tuple(int(v) for v in mapping)
    return None
