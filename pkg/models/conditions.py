"""
Condições Tipo II e Tipo III
============================

Tipo II: Σ_x M(a,x)/M(b,x) = n·δ_ab, com n o lado de M.
Tipo III: Σ_x M(a,x)M(b,x)/M(c,x) = d·M(a,b)/(M(a,c)M(c,b)) com d² = n.

As somas passam pelo kernel exato: cada termo é um monômio
empacotado (a, m) e cada soma é um grupo do histograma. O valor
d = ±c·(u² + u⁻²), com c = √(n/k), entra como 2c termos de sinal
trocado no mesmo grupo.

Autor: Seu Nome
Data: 2025-09-20
"""

from typing import Dict, List, Optional, Tuple

import numpy as np

from arithmetic import ExactSumKernel, ScalarContext, ZeroVerdict, pack_monomial_matrix, raise_if_ambiguous
from arithmetic.monomial import HALF_TURN
from config import get_settings
from linalg import SpinMatrix
from utils.exceptions import ShapeMismatch
from utils.helpers import batch_slices, stopwatch
from utils.logger import setup_logger
from utils.reports import VerificationReport

logger = setup_logger(__name__)

TRIPLE_BATCH = 4096


def type2_check(matrix: SpinMatrix, ctx: ScalarContext) -> VerificationReport:
    """
    Verifica a condição tipo II para todos os pares (a, b).

    Args:
        matrix: Matriz com entradas monomiais invertíveis
        ctx: Contexto escalar

    Returns:
        VerificationReport (testemunha: primeiro par com soma ≠ n·δ_ab)

    Raises:
        NonInvertibleEntry: Entrada nula ou não monomial
        AmbiguousZero: Algum teste de zero ambíguo
    """
    check_id = f"type2.{matrix.label or 'M'}"
    n = matrix.n
    kernel = ExactSumKernel(ctx)

    with stopwatch() as elapsed:
        a, m = pack_monomial_matrix(matrix.entries)[:2]
        # termos M(a,x)/M(b,x) do par (a, b)
        ratio_a = a[:, None, :] - a[None, :, :]
        ratio_m = m[:, None, :] - m[None, :, :]

        diagonal_ok = bool(
            (ratio_a[np.arange(n), np.arange(n)] % 8 == 0).all()
            and (ratio_m[np.arange(n), np.arange(n)] == 0).all()
        )
        rows, cols = np.nonzero(~np.eye(n, dtype=bool))
        pairs = len(rows)
        groups = np.repeat(np.arange(pairs), n)
        codes = kernel.decide(ratio_a[rows, cols].ravel(), ratio_m[rows, cols].ravel(), groups, pairs)
        raise_if_ambiguous(codes, check_id)

    witnesses: List[Dict] = []
    if not diagonal_ok:
        witnesses.append({"a": 0, "b": 0, "expected": n})
    bad = np.flatnonzero(codes == ZeroVerdict.NONZERO)
    if bad.size:
        witnesses.append({"a": int(rows[bad[0]]), "b": int(cols[bad[0]]), "expected": 0})

    report = VerificationReport.from_outcome(
        check_id, witnesses, error="VerificationFailed",
        k=ctx.k, backend=ctx.backend, parameters=ctx.parameters,
        details={"side": n, "constant": n, "zero_tests": kernel.summary(check_id)},
        timing=elapsed[0],
    )
    logger.debug(f"Tipo II {matrix.label}: {report.verdict.value}")
    return report


def _triples(n: int, ctx: ScalarContext, exhaustive: Optional[bool], sample_size: Optional[int],
             seed: Optional[int]) -> Tuple[np.ndarray, bool]:
    """Triplas (a, b, c): todas para k pequeno, amostra aleatória caso contrário."""
    settings = get_settings()
    if exhaustive is None:
        exhaustive = ctx.k <= settings.type3_exhaustive_max_k
    if exhaustive:
        grid = np.stack(np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij"), -1)
        return grid.reshape(-1, 3), True
    sample_size = sample_size or settings.type3_sample_size
    rng = np.random.default_rng(settings.random_seed if seed is None else seed)
    return rng.integers(0, n, size=(sample_size, 3)), False


def loop_factor(n: int, k: int) -> int:
    """
    c = √(n/k) com n o lado da matriz (1 para Potts, 2 para os modelos 4k×4k).

    Raises:
        ShapeMismatch: n/k não é quadrado perfeito
    """
    ratio, remainder = divmod(n, k)
    c = int(round(ratio ** 0.5))
    if remainder or c * c != ratio:
        raise ShapeMismatch("Lado incompatível com a ordem: n/k deve ser quadrado perfeito", n=n, k=k)
    return c


def _type3_codes(kernel: ExactSumKernel, a: np.ndarray, m: np.ndarray, triples: np.ndarray,
                 c: int, sign: int) -> np.ndarray:
    """Vereditos de Σ_x M(a,x)M(b,x)/M(c,x) − d·M(a,b)/(M(a,c)M(c,b)) por tripla."""
    n = a.shape[0]
    codes = []
    for batch in batch_slices(len(triples), TRIPLE_BATCH):
        ta, tb, tc = triples[batch].T
        count = len(ta)
        lhs_a = a[ta] + a[tb] - a[tc]
        lhs_m = m[ta] + m[tb] - m[tc]
        ratio_a = a[ta, tb] - a[ta, tc] - a[tc, tb]
        ratio_m = m[ta, tb] - m[ta, tc] - m[tc, tb]
        # −d·R = ∓c·(u² + u⁻²)·R
        shift = HALF_TURN if sign > 0 else 0
        rhs_a = np.repeat((ratio_a + shift)[:, None], 2 * c, axis=1)
        rhs_m = np.concatenate(
            [np.repeat((ratio_m + 2)[:, None], c, axis=1), np.repeat((ratio_m - 2)[:, None], c, axis=1)],
            axis=1,
        )
        terms_a = np.concatenate([lhs_a, rhs_a], axis=1)
        terms_m = np.concatenate([lhs_m, rhs_m], axis=1)
        groups = np.repeat(np.arange(count), n + 2 * c)
        codes.append(kernel.decide(terms_a.ravel(), terms_m.ravel(), groups, count))
    return np.concatenate(codes) if codes else np.zeros(0, dtype=np.int8)


def type3_check(
    matrix: SpinMatrix,
    ctx: ScalarContext,
    exhaustive: Optional[bool] = None,
    sample_size: Optional[int] = None,
    seed: Optional[int] = None,
) -> VerificationReport:
    """
    Verifica a condição tipo III para os dois sinais de d.

    Passa se algum sinal satisfaz todas as triplas avaliadas; o
    relatório registra o sinal e d = sinal·c·(u² + u⁻²).

    Args:
        matrix: Matriz tipo II com entradas monomiais
        ctx: Contexto escalar
        exhaustive: Todas as n³ triplas (padrão: k ≤ type3_exhaustive_max_k)
        sample_size: Triplas sorteadas quando não exaustivo
        seed: Semente do sorteio

    Raises:
        AmbiguousZero: Algum teste de zero ambíguo
        ShapeMismatch: Lado da matriz incompatível com k
    """
    check_id = f"type3.{matrix.label or 'M'}"
    n = matrix.n
    c = loop_factor(n, ctx.k)
    kernel = ExactSumKernel(ctx)

    with stopwatch() as elapsed:
        a, m = pack_monomial_matrix(matrix.entries)[:2]
        triples, complete = _triples(n, ctx, exhaustive, sample_size, seed)
        outcomes = {}
        for sign in (1, -1):
            codes = _type3_codes(kernel, a, m, triples, c, sign)
            raise_if_ambiguous(codes, check_id, sign=sign)
            bad = np.flatnonzero(codes == ZeroVerdict.NONZERO)
            outcomes[sign] = None if not bad.size else tuple(int(v) for v in triples[bad[0]])

    working = [sign for sign, witness in outcomes.items() if witness is None]
    details = {
        "side": n,
        "triples": int(len(triples)),
        "exhaustive": complete,
        "loop_factor": c,
        "zero_tests": kernel.summary(check_id),
    }
    witnesses = []
    if working:
        sign = working[0]
        details.update({"sign": sign, "d": f"{sign * c}*(u^2+u^-2)", "both_signs": len(working) == 2})
    else:
        witnesses = [
            {"sign": sign, "a": w[0], "b": w[1], "c": w[2]} for sign, w in outcomes.items()
        ]

    report = VerificationReport.from_outcome(
        check_id, witnesses, error="VerificationFailed",
        k=ctx.k, backend=ctx.backend, parameters=ctx.parameters,
        details=details, timing=elapsed[0],
    )
    logger.debug(f"Tipo III {matrix.label}: {report.verdict.value} ({len(triples)} triplas)")
    return report
