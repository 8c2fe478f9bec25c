"""
Configuração Coerente e Fusão
=============================

Fibras Z₀ = X×{0}×ℤ/2ℤ e Z₁ = X×{1}×ℤ/2ℤ, as dez relações
R_i^λ = R_i ∩ (Z_λ × Z), a regra de produto entre elas, o
automorfismo algébrico ρ e a fusão das órbitas de ρ na família
{R₀, R′₁, R₂, R′₃, R₄}.

A relação R_i^λ ocupa o índice 5λ + i.

Autor: Seu Nome
Data: 2025-09-20
"""

import itertools
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from hadamard import HadamardMatrix
from linalg import index_arrays
from utils.exceptions import FusionMismatch
from utils.helpers import stopwatch
from utils.logger import setup_logger
from utils.reports import VerificationReport
from .relations import Relation, build_relations, scheme_family
from .scheme import SchemeSpec, scheme_check, structure_constants

logger = setup_logger(__name__)

CLASSES = 5
FIBERS = 2


def fiber_name(i: int, fiber: int) -> str:
    return f"R{i}^{fiber}"


def fiber_relations(matrix: HadamardMatrix) -> List[Relation]:
    """
    As dez relações R_i^λ (λ ∈ {0, 1}, i ∈ 0..4), na ordem 5λ + i.

    Args:
        matrix: Matriz de Hadamard de ordem k
    """
    relations = build_relations(matrix)
    _, alpha1, _ = index_arrays(matrix.k)
    split = []
    for fiber in range(FIBERS):
        rows = (alpha1 == fiber).astype(np.int64)[:, None]
        for i in range(CLASSES):
            split.append(Relation(fiber_name(i, fiber), relations[f"R{i}"].matrix * rows))
    return split


def rho_permutation() -> np.ndarray:
    """
    ρ sobre os índices 5λ + i: R₁^λ ↔ R₃^(1−λ) e R_i^λ ↦ R_i^(1−λ) nos demais casos.
    """
    image = np.zeros(CLASSES * FIBERS, dtype=np.int64)
    for fiber in range(FIBERS):
        other = 1 - fiber
        for i in range(CLASSES):
            j = {1: 3, 3: 1}.get(i, i)
            image[fiber * CLASSES + i] = other * CLASSES + j
    return image


def _expected_fiber_tensor(p: np.ndarray) -> np.ndarray:
    """q[5λ+i, 5μ+j, 5λ+l] = δ_{(i+λ) mod 2, μ}·p_ij^l, com p_ij^l nulo fora de l ≡ i+j."""
    size = CLASSES * FIBERS
    expected = np.zeros((size, size, size), dtype=np.int64)
    for fiber, i, j, l in itertools.product(range(FIBERS), *(range(CLASSES),) * 3):
        if (l - i - j) % 2:
            continue
        mu = (i + fiber) % 2
        expected[fiber * CLASSES + i, mu * CLASSES + j, fiber * CLASSES + l] = p[i, j, l]
    return expected


def coherent_config_check(matrix: HadamardMatrix) -> Tuple[VerificationReport, Optional[np.ndarray]]:
    """
    Verifica os axiomas de configuração coerente e a regra de produto.

    Axiomas: as dez relações particionam o quadrado, a identidade é a
    união das diagonais das fibras, a família é fechada por transposição
    e cada produto se expande com constantes bem definidas. A regra
    A(R_i^λ)A(R_j^μ) = δ_{i+λ mod 2, μ} Σ_{l ≡ i+j} p_ij^l A(R_l^λ) é
    conferida entrada a entrada usando o tensor de {R₀..R₄}.

    Returns:
        (relatório, tensor 10×10×10) com tensor None em caso de falha
    """
    check_id = "coherent_config"
    k = matrix.k
    fields = {"k": k, "parameters": {"source": matrix.source}}

    with stopwatch() as elapsed:
        base_report, base = scheme_check(scheme_family(build_relations(matrix), "A"), "A")
        if base is None:
            return VerificationReport.from_subreports(check_id, [base_report], **fields), None

        relations = fiber_relations(matrix)
        matrices = [relation.matrix for relation in relations]
        names = [relation.name for relation in relations]
        witnesses: List[Dict] = []

        total = np.sum(matrices, axis=0)
        if not (total == 1).all():
            row, col = (int(v) for v in np.argwhere(total != 1)[0])
            witnesses.append({"axiom": "partition", "row": row, "column": col})

        diagonal = matrices[0] + matrices[CLASSES]
        if not np.array_equal(diagonal, np.eye(4 * k, dtype=np.int64)):
            witnesses.append({"axiom": "identity"})

        for index, matrix_i in enumerate(matrices):
            if not any(np.array_equal(matrix_i.T, other) for other in matrices):
                witnesses.append({"axiom": "transpose", "relation": names[index]})
                break

        tensor = None
        if not witnesses:
            tensor, closure = structure_constants(matrices)
            if closure is not None:
                witnesses.append({"axiom": "closure", **closure})
                tensor = None

        if tensor is not None:
            expected = _expected_fiber_tensor(base.p)
            bad = np.argwhere(tensor != expected)
            if bad.size:
                left, right, target = (int(v) for v in bad[0])
                witnesses.append({
                    "i": left % CLASSES, "lambda": left // CLASSES,
                    "j": right % CLASSES, "mu": right // CLASSES,
                    "l": target % CLASSES,
                    "found": int(tensor[left, right, target]),
                    "expected": int(expected[left, right, target]),
                })

    error = "RuleViolation" if witnesses and "lambda" in witnesses[-1] else "VerificationFailed"
    report = VerificationReport.from_outcome(
        check_id, witnesses, error=error, timing=elapsed[0],
        details={"relations": names, "combinations": (CLASSES * FIBERS) ** 2},
        subreports=[base_report], **fields,
    )
    logger.debug(f"Configuração coerente (k={k}): {report.verdict.value}")
    return report, (tensor if report.passed else None)


def rho_automorphism_check(matrix: HadamardMatrix) -> VerificationReport:
    """
    Verifica que ρ preserva todas as constantes: p_{ρS ρT}^{ρU} = p_ST^U.

    Também confere que ρ² é a identidade nas dez relações.
    """
    check_id = "rho_automorphism"
    fields = {"k": matrix.k, "parameters": {"source": matrix.source}}
    config_report, tensor = coherent_config_check(matrix)
    if tensor is None:
        return VerificationReport.from_subreports(check_id, [config_report], **fields)

    rho = rho_permutation()
    witnesses = []
    with stopwatch() as elapsed:
        if not np.array_equal(rho[rho], np.arange(len(rho))):
            witnesses.append({"involution": rho[rho].tolist()})
        moved = tensor[np.ix_(rho, rho, rho)]
        bad = np.argwhere(moved != tensor)
        if bad.size:
            s, t, u = (int(v) for v in bad[0])
            witnesses.append({
                "triple": [fiber_name(s % CLASSES, s // CLASSES),
                           fiber_name(t % CLASSES, t // CLASSES),
                           fiber_name(u % CLASSES, u // CLASSES)],
                "value": int(tensor[s, t, u]),
                "image": int(moved[s, t, u]),
            })

    return VerificationReport.from_outcome(
        check_id, witnesses, error="NotAutomorphism", timing=elapsed[0],
        details={"rho": rho.tolist(), "triples": int(tensor.size)}, **fields,
    )


def rho_orbits() -> List[Tuple[int, ...]]:
    """Órbitas de ρ nos índices 5λ + i, ordenadas pelo menor elemento."""
    rho = rho_permutation()
    seen, orbits = set(), []
    for start in range(len(rho)):
        if start in seen:
            continue
        orbit, current = [], start
        while current not in orbit:
            orbit.append(current)
            current = int(rho[current])
        seen.update(orbit)
        orbits.append(tuple(sorted(orbit)))
    return orbits


FUSED_NAMES = {0: "R0", 1: "R1p", 2: "R2", 3: "R3p", 4: "R4"}


def fuse_rho_orbits(matrix: HadamardMatrix) -> SchemeSpec:
    """
    Une cada órbita de ρ e compara com {R₀, R′₁, R₂, R′₃, R₄}.

    A órbita que contém R_i^0 dá a classe i da família fundida
    (R′₁ = R₁⁰ ∪ R₃¹, R′₃ = R₃⁰ ∪ R₁¹).

    Returns:
        SchemeSpec 'Aprime' verificado por ``scheme_check``

    Raises:
        FusionMismatch: Se a união divergir da família esperada ou não for esquema
    """
    relations = fiber_relations(matrix)
    expected = build_relations(matrix)
    fused = []
    for orbit in rho_orbits():
        i = orbit[0] % CLASSES
        union = np.sum([relations[index].matrix for index in orbit], axis=0)
        name = FUSED_NAMES[i]
        if not np.array_equal(union, expected[name].matrix):
            raise FusionMismatch(
                f"Órbita {[relations[index].name for index in orbit]} não reproduz {name}",
                orbit=[relations[index].name for index in orbit], relation=name,
            )
        fused.append(Relation(name, union, predicate="rho.fusion"))

    report, tensor = scheme_check(fused, "fused")
    if tensor is None:
        raise FusionMismatch("Família fundida não é esquema de associação", **report.witnesses[0])

    identity = report.details["identity"]
    transpose_map = {int(key): int(value) for key, value in report.details["transpose_map"].items()}
    logger.debug(f"Fusão das órbitas de ρ (k={matrix.k}): {len(fused)} classes")
    return SchemeSpec("Aprime", tuple(fused), identity_index=identity, transpose_map=transpose_map)


def fusion_check(matrix: HadamardMatrix) -> VerificationReport:
    """Relatório para ``fuse_rho_orbits`` (usado por verify_all)."""
    fields = {"k": matrix.k, "parameters": {"source": matrix.source}}
    with stopwatch() as elapsed:
        try:
            spec = fuse_rho_orbits(matrix)
        except FusionMismatch as error:
            return VerificationReport.from_outcome(
                "fuse_rho_orbits", [error.context], error="FusionMismatch", **fields
            )
    return VerificationReport(
        check_id="fuse_rho_orbits", timing=elapsed[0],
        details={"classes": list(spec.names), "orbits": [list(o) for o in rho_orbits()]}, **fields,
    )


def support_family_isomorphism(
    left: Sequence[np.ndarray], right: Sequence[np.ndarray]
) -> Optional[Tuple[int, ...]]:
    """
    Procura uma reindexação simultânea dos vértices que leva uma família 0/1 na outra.

    As famílias são comparadas como conjuntos de matrizes. Busca
    exaustiva sobre as n! permutações (escala de bancada, n ≤ 8).

    Returns:
        Permutação π dos vértices (P·A·Pᵀ) ou None
    """
    left = [np.asarray(m, dtype=np.int64) for m in left]
    right = [np.asarray(m, dtype=np.int64) for m in right]
    if len(left) != len(right) or left[0].shape != right[0].shape:
        return None
    targets = {m.tobytes() for m in right}
    n = left[0].shape[0]
    for perm in itertools.permutations(range(n)):
        p = np.asarray(perm)
        if all(m[np.ix_(p, p)].tobytes() in targets for m in left):
            return tuple(int(v) for v in perm)
    return None
