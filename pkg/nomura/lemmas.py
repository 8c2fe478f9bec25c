"""
Verificações dos Lemas Auxiliares
=================================

Y vem das colunas de W̃ e Y′ das colunas de W̃′ (pares de índices
(a, α), (b, β)). Com D = diag(I, I, ιI, ιI):

- lemma2: Y′ = Y se α₁ = β₁, DY se (α₁, β₁) = (0, 1), D⁻¹Y se (1, 0)
- lemma3: σ((a, α), (b, β)) = ((a, τα), (b, β)) leva R₁ em R′₁ e R₃ em R′₃
- lemma4: Y^{τ(α)β} = (−D²)^{α₁}·Y^{αβ}
- lemma5: ⟨Y′_σp, Y′_σp′⟩ = (−1)^{α₁+α′₁}⟨Y_p, Y_p′⟩ para p, p′ ∈ R₁ ∪ R₃
- edges: G e G′ têm as mesmas arestas em R₀ ∪ R₂ ∪ R₄, e σ leva
  arestas de G em R₁ ∪ R₃ a arestas de G′

Os lemas 2 a 4 são sempre exaustivos. O lema 5 e as arestas são
exaustivos até k = 4 e amostrados acima disso.

Autor: Seu Nome
Data: 2025-09-20
"""

from typing import Dict, List, Optional, Tuple

import numpy as np

from arithmetic import ExactSumKernel, ScalarContext, ZeroVerdict, raise_if_ambiguous
from arithmetic.monomial import HALF_TURN, ZETA_ORDER
from config import get_settings
from hadamard import HadamardMatrix
from linalg import Index4k, index_arrays, tau_permutation
from models import ModelKind, build_model
from schemes import build_relations
from utils.helpers import batch_slices, stopwatch
from utils.logger import setup_logger
from utils.reports import VerificationReport
from .ytable import YTable, y_table

logger = setup_logger(__name__)

EXHAUSTIVE_MAX_K = 4
PAIR_BATCH = 2048


def describe(index: int, k: int) -> Tuple[int, Tuple[int, int]]:
    """Índice linear → (a, (α₁, α₂))."""
    point = Index4k.from_linear(index, k)
    return point.x, (point.alpha1, point.alpha2)


def _lemma_report(lemma: str, witnesses: List[Dict], ctx: ScalarContext, elapsed: float,
                  **details) -> VerificationReport:
    return VerificationReport.from_outcome(
        lemma, [{"lemma": lemma, **w} for w in witnesses], error="LemmaFailed",
        k=ctx.k, backend=ctx.backend, parameters=ctx.parameters,
        details=details, timing=elapsed,
    )


def _first_mismatch(expected_a, expected_m, found: YTable) -> Optional[Tuple[int, int, int]]:
    bad = np.argwhere(((expected_a - found.a) % ZETA_ORDER != 0) | (expected_m != found.m))
    return tuple(int(v) for v in bad[0]) if bad.size else None


def lemma2_check(plain: YTable, primed: YTable, ctx: ScalarContext) -> VerificationReport:
    """Y′ = Y, DY ou D⁻¹Y conforme (α₁, β₁)."""
    k = ctx.k
    with stopwatch() as elapsed:
        _, alpha1, _ = index_arrays(k)
        iota = ctx.iota.packed()[0]
        case = np.zeros((4 * k, 4 * k), dtype=np.int64)
        case[np.ix_(alpha1 == 0, alpha1 == 1)] = 1
        case[np.ix_(alpha1 == 1, alpha1 == 0)] = -1
        expected_a = plain.a + iota * case[:, :, None] * alpha1[None, None, :]
        mismatch = _first_mismatch(expected_a, plain.m, primed)

    witnesses = []
    if mismatch is not None:
        i, j, x = mismatch
        witnesses.append({"pair": [describe(i, k), describe(j, k)], "x": describe(x, k)})
    return _lemma_report("lemma2", witnesses, ctx, elapsed[0], entries=int(plain.a.size))


def lemma3_check(matrix: HadamardMatrix, ctx: ScalarContext) -> VerificationReport:
    """σ(R₁) = R′₁ e σ(R₃) = R′₃ como conjuntos."""
    k = matrix.k
    with stopwatch() as elapsed:
        relations = build_relations(matrix)
        tau = tau_permutation(k)
        witnesses = []
        for source, target in (("R1", "R1p"), ("R3", "R3p")):
            image = np.zeros_like(relations[source].matrix)
            image[tau, :] = relations[source].matrix
            bad = np.argwhere(image != relations[target].matrix)
            if bad.size:
                i, j = (int(v) for v in bad[0])
                witnesses.append({
                    "relation": source, "image": target,
                    "pair": [describe(i, k), describe(j, k)],
                })
                break
    return _lemma_report("lemma3", witnesses, ctx, elapsed[0], pairs=int(16 * k * k))


def lemma4_check(plain: YTable, ctx: ScalarContext) -> VerificationReport:
    """Y^{τ(α)β} = (−D²)^{α₁}·Y^{αβ}: sinal −1 nas linhas x com x₁ = 0 quando α₁ = 1."""
    k = ctx.k
    with stopwatch() as elapsed:
        _, alpha1, _ = index_arrays(k)
        tau = tau_permutation(k)
        flip = HALF_TURN * alpha1[:, None, None] * (alpha1 == 0)[None, None, :]
        expected_a = plain.a + flip
        moved = YTable(plain.n, plain.a[tau], plain.m[tau], plain.label)
        mismatch = _first_mismatch(expected_a, plain.m, moved)

    witnesses = []
    if mismatch is not None:
        i, j, x = mismatch
        witnesses.append({"pair": [describe(i, k), describe(j, k)], "x": describe(x, k)})
    return _lemma_report("lemma4", witnesses, ctx, elapsed[0], entries=int(plain.a.size))


def _pair_pairs(count: int, exhaustive: bool, sample_size: int, rng) -> np.ndarray:
    if exhaustive:
        left, right = np.meshgrid(np.arange(count), np.arange(count), indexing="ij")
        return np.stack([left.ravel(), right.ravel()], axis=1)
    return rng.integers(0, count, size=(sample_size, 2))


def _inner_terms(kernel: ExactSumKernel, table: YTable, left: np.ndarray, right: np.ndarray):
    flat_a, flat_m = table.flat()
    return kernel.pairing_terms(flat_a[left], flat_m[left], flat_a[right], flat_m[right])


def lemma5_check(plain: YTable, primed: YTable, ctx: ScalarContext, pairs: np.ndarray,
                 selection: np.ndarray, kernel: ExactSumKernel) -> VerificationReport:
    """⟨Y′_σp, Y′_σp′⟩ − (−1)^{α₁+α′₁}⟨Y_p, Y_p′⟩ = 0 sobre pares de pares em R₁ ∪ R₃."""
    k = ctx.k
    n = 4 * k
    _, alpha1, _ = index_arrays(k)
    tau = tau_permutation(k)
    rows, cols = np.divmod(pairs, n)
    moved = tau[rows] * n + cols
    witnesses = []

    with stopwatch() as elapsed:
        for batch in batch_slices(len(selection), PAIR_BATCH):
            left, right = selection[batch].T
            lhs_a, lhs_m = _inner_terms(kernel, primed, moved[left], moved[right])
            rhs_a, rhs_m = _inner_terms(kernel, plain, pairs[left], pairs[right])
            same = (alpha1[rows[left]] + alpha1[rows[right]]) % 2 == 0
            rhs_a = rhs_a + np.where(same, HALF_TURN, 0)[:, None]
            count = len(left)
            terms_a = np.concatenate([lhs_a, rhs_a], axis=1)
            terms_m = np.concatenate([lhs_m, rhs_m], axis=1)
            groups = np.repeat(np.arange(count), terms_a.shape[1])
            codes = kernel.decide(terms_a.ravel(), terms_m.ravel(), groups, count)
            raise_if_ambiguous(codes, "lemma5")
            bad = np.flatnonzero(codes == ZeroVerdict.NONZERO)
            if bad.size:
                p, q = int(pairs[left[bad[0]]]), int(pairs[right[bad[0]]])
                witnesses.append({
                    "first": [describe(p // n, k), describe(p % n, k)],
                    "second": [describe(q // n, k), describe(q % n, k)],
                })
                break

    return _lemma_report("lemma5", witnesses, ctx, elapsed[0], pair_pairs=int(len(selection)))


def _zero_pattern(kernel: ExactSumKernel, table: YTable, left: np.ndarray, right: np.ndarray,
                  label: str) -> np.ndarray:
    flat_a, flat_m = table.flat()
    codes = kernel.inner_products(flat_a[left], flat_m[left], flat_a[right], flat_m[right])
    raise_if_ambiguous(codes, label)
    return codes == ZeroVerdict.NONZERO


def edges_check(plain: YTable, primed: YTable, ctx: ScalarContext, same_fiber: np.ndarray,
                same_selection: np.ndarray, cross: np.ndarray, cross_selection: np.ndarray,
                kernel: ExactSumKernel) -> VerificationReport:
    """Arestas de G e G′ coincidem em R₀ ∪ R₂ ∪ R₄; σ leva arestas em R₁ ∪ R₃ a arestas de G′."""
    k = ctx.k
    n = 4 * k
    tau = tau_permutation(k)
    witnesses = []

    with stopwatch() as elapsed:
        for batch in batch_slices(len(same_selection), PAIR_BATCH):
            left, right = same_fiber[same_selection[batch].T]
            plain_edges = _zero_pattern(kernel, plain, left, right, "edges")
            primed_edges = _zero_pattern(kernel, primed, left, right, "edges")
            bad = np.flatnonzero(plain_edges != primed_edges)
            if bad.size:
                witnesses.append({"part": "R0+R2+R4", "pairs": [int(left[bad[0]]), int(right[bad[0]])]})
                break

        if not witnesses:
            rows, cols = np.divmod(cross, n)
            moved = tau[rows] * n + cols
            for batch in batch_slices(len(cross_selection), PAIR_BATCH):
                left, right = cross_selection[batch].T
                plain_edges = _zero_pattern(kernel, plain, cross[left], cross[right], "edges")
                primed_edges = _zero_pattern(kernel, primed, moved[left], moved[right], "edges")
                bad = np.flatnonzero(plain_edges != primed_edges)
                if bad.size:
                    witnesses.append({
                        "part": "R1+R3",
                        "pairs": [int(cross[left[bad[0]]]), int(cross[right[bad[0]]])],
                    })
                    break

    return _lemma_report(
        "edges", witnesses, ctx, elapsed[0],
        same_fiber_pair_pairs=int(len(same_selection)), cross_pair_pairs=int(len(cross_selection)),
    )


def lemma_checks(
    matrix: HadamardMatrix,
    ctx: ScalarContext,
    exhaustive: Optional[bool] = None,
    sample_size: Optional[int] = None,
    seed: Optional[int] = None,
) -> VerificationReport:
    """
    Executa as verificações dos lemas 2 a 5 e das arestas.

    Args:
        matrix: Matriz de Hadamard de ordem ctx.k
        ctx: Contexto escalar
        exhaustive: Força varredura completa (padrão: k ≤ 4)
        sample_size: Pares de pares sorteados (padrão: lemma_sample_size)
        seed: Semente do sorteio

    Returns:
        Relatório agregado; ``raise_for_verdict`` lança LemmaFailed
    """
    settings = get_settings()
    k = ctx.k
    exhaustive = k <= EXHAUSTIVE_MAX_K if exhaustive is None else exhaustive
    sample_size = sample_size or settings.lemma_sample_size
    rng = np.random.default_rng(settings.random_seed if seed is None else seed)

    plain = y_table(build_model(ModelKind.WTILDE, matrix, ctx))
    primed = y_table(build_model(ModelKind.WTILDE_PRIME, matrix, ctx))
    relations = build_relations(matrix)
    cross = np.flatnonzero((relations["R1"].matrix + relations["R3"].matrix).ravel())
    same_fiber = np.flatnonzero(
        (relations["R0"].matrix + relations["R2"].matrix + relations["R4"].matrix).ravel()
    )
    kernel = ExactSumKernel(ctx)

    subreports = [
        lemma2_check(plain, primed, ctx),
        lemma3_check(matrix, ctx),
        lemma4_check(plain, ctx),
        lemma5_check(
            plain, primed, ctx, cross,
            _pair_pairs(len(cross), exhaustive, sample_size, rng), kernel,
        ),
        edges_check(
            plain, primed, ctx,
            same_fiber, _pair_pairs(len(same_fiber), exhaustive, sample_size, rng),
            cross, _pair_pairs(len(cross), exhaustive, sample_size, rng),
            kernel,
        ),
    ]
    kernel.summary("lemmas")

    report = VerificationReport.from_subreports(
        "lemma_checks", subreports,
        k=k, backend=ctx.backend, parameters={**ctx.parameters, "source": matrix.source},
        details={"exhaustive": exhaustive, "sample_size": None if exhaustive else sample_size},
        timing=sum(sub.timing for sub in subreports),
    )
    logger.info(f"Lemas (k={k}): {report.verdict.value}")
    return report
