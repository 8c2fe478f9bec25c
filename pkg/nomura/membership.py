"""
Teste de Pertinência à Álgebra de Nomura
========================================

A pertence a N(M) quando cada Y_ab é autovetor de A. Com
v = A·Y_ab, basta v(x)·Y_ab(x₀) − v(x₀)·Y_ab(x) = 0 para todo x
(x₀ = 0), o que evita a divisão por Y_ab(x₀). Todas as entradas de
Y são monômios não nulos.

Autor: Seu Nome
Data: 2025-09-20
"""

from typing import Union

import numpy as np

from arithmetic import ExactSumKernel, ScalarContext, ZeroVerdict, pack_monomial_matrix, raise_if_ambiguous
from arithmetic.monomial import HALF_TURN
from linalg import SpinMatrix
from utils.helpers import stopwatch
from utils.logger import setup_logger
from utils.reports import VerificationReport
from .ytable import y_table

logger = setup_logger(__name__)

Candidate = Union[SpinMatrix, np.ndarray]


def _pack_candidate(candidate: Candidate, k: int):
    if not isinstance(candidate, SpinMatrix):
        candidate = SpinMatrix.from_integers(candidate, k)
    return pack_monomial_matrix(candidate.entries, allow_zero=True)


def membership_test(
    candidate: Candidate, matrix: SpinMatrix, ctx: ScalarContext, label: str = "A"
) -> VerificationReport:
    """
    Verifica pela definição se o candidato pertence a N(M).

    Args:
        candidate: Matriz 0/±1 (array) ou SpinMatrix de entradas monomiais unitárias ou nulas
        matrix: M, com Y_ab(x) = M(x, a)/M(x, b)
        ctx: Contexto escalar
        label: Nome do candidato no relatório

    Returns:
        VerificationReport (testemunha: par (a, b) e índice x)

    Raises:
        NonInvertibleEntry: Entrada do candidato fora de {0} ∪ monômios unitários
        AmbiguousZero: Algum teste de zero ambíguo
    """
    check_id = f"membership.{label}.{matrix.label or 'M'}"
    n = matrix.n
    kernel = ExactSumKernel(ctx)
    witnesses = []

    with stopwatch() as elapsed:
        table = y_table(matrix)
        ca, cm, mask = _pack_candidate(candidate, ctx.k)
        if ca.shape != (n, n):
            raise ValueError(f"Candidato {ca.shape} incompatível com lado {n}")

        xs = np.arange(1, n)
        for a in range(n):
            ya, ym = table.a[a], table.m[a]          # (b, x)
            # termo 1: A(x,y)·Y(y)·Y(0); termo 2: −A(0,y)·Y(y)·Y(x)
            first_a = ca[xs][None, :, :] + ya[:, None, :] + ya[:, 0][:, None, None]
            first_m = cm[xs][None, :, :] + ym[:, None, :] + ym[:, 0][:, None, None]
            second_a = ca[0][None, None, :] + ya[:, None, :] + ya[:, xs][:, :, None] + HALF_TURN
            second_m = cm[0][None, None, :] + ym[:, None, :] + ym[:, xs][:, :, None]

            first_mask = np.broadcast_to(mask[xs][None, :, :], first_a.shape)
            second_mask = np.broadcast_to(mask[0][None, None, :], second_a.shape)
            groups = np.arange(n * (n - 1)).reshape(n, n - 1)[:, :, None]
            first_groups = np.broadcast_to(groups, first_a.shape)
            second_groups = np.broadcast_to(groups, second_a.shape)

            terms_a = np.concatenate([first_a[first_mask], second_a[second_mask]])
            terms_m = np.concatenate([first_m[first_mask], second_m[second_mask]])
            term_groups = np.concatenate([first_groups[first_mask], second_groups[second_mask]])

            codes = kernel.decide(terms_a, terms_m, term_groups, n * (n - 1))
            raise_if_ambiguous(codes, check_id, a=a)
            bad = np.flatnonzero(codes == ZeroVerdict.NONZERO)
            if bad.size:
                b, x = divmod(int(bad[0]), n - 1)
                witnesses.append({"a": a, "b": b, "x": x + 1})
                break

    report = VerificationReport.from_outcome(
        check_id, witnesses, error="VerificationFailed",
        k=ctx.k, backend=ctx.backend, parameters=ctx.parameters,
        details={"side": n, "zero_tests": kernel.summary(check_id)},
        timing=elapsed[0],
    )
    logger.debug(f"Pertinência {label} ∈ N({matrix.label}): {report.verdict.value}")
    return report
