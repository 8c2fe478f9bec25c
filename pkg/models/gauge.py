"""
Equivalências de Gauge
======================

Matrizes diagonais por blocos (e permutação de blocos vezes
diagonal) que relacionam os modelos às versões normalizadas:

- ω² = 1:  W̃ = diag(I, I, ωI, ωI)·W·diag(I, I, ω⁻¹I, ω⁻¹I)
- ω² = −1: W̃ = diag(I, I, ωI, ωI)·W·Π, Π = [[0, I], [I, 0]] ⊕ ω⁻¹I₂ₖ
- W̃′ = diag(I, I, ξI, ξI)·W′·diag(I, I, ξ⁻¹I, ξ⁻¹I)
- W̃′ᵀ = diag(I₂ₖ, −ξ⁻¹I₂ₖ)·W′·diag(I₂ₖ, −ξI₂ₖ)

Autor: Seu Nome
Data: 2025-09-20
"""

from typing import List, Optional, Sequence

from arithmetic import Monomial, ScalarContext
from hadamard import HadamardMatrix
from linalg import SpinMatrix, block4, matmul
from utils.helpers import stopwatch
from utils.logger import setup_logger
from utils.reports import VerificationReport
from .builders import ModelKind, build_model

logger = setup_logger(__name__)


def block_diagonal(factors: Sequence[Monomial], k: int, label: Optional[str] = None) -> SpinMatrix:
    """diag(f₀I, f₁I, f₂I, f₃I) com blocos k×k."""
    values = [factor for factor in factors for _ in range(k)]
    return SpinMatrix.diagonal(values, k, label)


def block_swap_diagonal(factors: Sequence[Monomial], k: int, label: Optional[str] = None) -> SpinMatrix:
    """[[0, f₀I], [f₁I, 0]] ⊕ diag(f₂I, f₃I): troca os dois primeiros blocos."""
    scaled = [SpinMatrix.diagonal([factor] * k, k) for factor in factors]
    grid = [
        [None, scaled[0], None, None],
        [scaled[1], None, None, None],
        [None, None, scaled[2], None],
        [None, None, None, scaled[3]],
    ]
    return block4(grid, k, label)


def d_matrix(ctx: ScalarContext) -> SpinMatrix:
    """D = diag(I, I, ιI, ιI), com ι = −ξ²."""
    one = Monomial.one()
    return block_diagonal([one, one, ctx.iota, ctx.iota], ctx.k, "D")


def _identity_report(check_id: str, left: SpinMatrix, right: SpinMatrix, ctx: ScalarContext,
                     display: str, elapsed: float) -> VerificationReport:
    mismatch = left.first_mismatch(right)
    witnesses = []
    if mismatch is not None:
        i, j = mismatch
        witnesses.append({
            "entry": [i, j], "expected": str(left[i, j]), "found": str(right[i, j]),
        })
    return VerificationReport.from_outcome(
        check_id, witnesses, error="IdentityFailed",
        k=ctx.k, backend=ctx.backend, parameters=ctx.parameters,
        details={"display": display}, timing=elapsed,
    )


def _omega_identity(matrix: HadamardMatrix, ctx: ScalarContext) -> VerificationReport:
    k = ctx.k
    one = Monomial.one()
    omega = ctx.omega_monomial
    omega_inv = omega.inverse()
    with stopwatch() as elapsed:
        w = build_model(ModelKind.W, matrix, ctx)
        w_tilde = build_model(ModelKind.WTILDE, matrix, ctx)
        left = block_diagonal([one, one, omega, omega], k)
        if ctx.omega % 2 == 0:
            right = block_diagonal([one, one, omega_inv, omega_inv], k)
            display = "Wt = diag(I,I,wI,wI) W diag(I,I,w^-1 I,w^-1 I)"
        else:
            right = block_swap_diagonal([one, one, omega_inv, omega_inv], k)
            display = "Wt = diag(I,I,wI,wI) W Pi"
        product = matmul(matmul(left, w), right)
    return _identity_report("gauge.W", w_tilde, product, ctx, display, elapsed[0])


def _xi_identity(matrix: HadamardMatrix, ctx: ScalarContext) -> VerificationReport:
    k = ctx.k
    one = Monomial.one()
    xi = ctx.xi_monomial
    with stopwatch() as elapsed:
        w_prime = build_model(ModelKind.WPRIME, matrix, ctx)
        w_tilde_prime = build_model(ModelKind.WTILDE_PRIME, matrix, ctx)
        left = block_diagonal([one, one, xi, xi], k)
        right = block_diagonal([one, one, xi.inverse(), xi.inverse()], k)
        product = matmul(matmul(left, w_prime), right)
    return _identity_report(
        "gauge.Wprime", w_tilde_prime, product, ctx,
        "Wtp = diag(I,I,xI,xI) Wp diag(I,I,x^-1 I,x^-1 I)", elapsed[0],
    )


def _xi_transpose_identity(matrix: HadamardMatrix, ctx: ScalarContext) -> VerificationReport:
    k = ctx.k
    one = Monomial.one()
    xi = ctx.xi_monomial
    with stopwatch() as elapsed:
        w_prime = build_model(ModelKind.WPRIME, matrix, ctx)
        target = build_model(ModelKind.WTILDE_PRIME, matrix, ctx).transpose()
        left = block_diagonal([one, one, -xi.inverse(), -xi.inverse()], k)
        right = block_diagonal([one, one, -xi, -xi], k)
        product = matmul(matmul(left, w_prime), right)
    return _identity_report(
        "gauge.Wprime.transpose", target, product, ctx,
        "Wtp^T = diag(I,-x^-1 I) Wp diag(I,-x I)", elapsed[0],
    )


def gauge_identity_check(kind, matrix: HadamardMatrix, ctx: ScalarContext) -> VerificationReport:
    """
    Verifica entrada a entrada as identidades de gauge do modelo.

    Args:
        kind: ModelKind.W (caso ω² = ±1) ou ModelKind.WPRIME (as duas identidades com ξ)
        matrix: Matriz de Hadamard
        ctx: Contexto escalar

    Returns:
        Relatório agregado com um sub-relatório por identidade
    """
    kind = kind if isinstance(kind, ModelKind) else ModelKind.from_name(kind)
    if kind in (ModelKind.W, ModelKind.WTILDE):
        subreports: List[VerificationReport] = [_omega_identity(matrix, ctx)]
    elif kind in (ModelKind.WPRIME, ModelKind.WTILDE_PRIME):
        subreports = [_xi_identity(matrix, ctx), _xi_transpose_identity(matrix, ctx)]
    else:
        raise ValueError(f"Sem identidade de gauge para {kind.value}")

    report = VerificationReport.from_subreports(
        f"gauge_identity.{kind.value}", subreports,
        k=ctx.k, backend=ctx.backend, parameters=ctx.parameters,
        timing=sum(sub.timing for sub in subreports),
    )
    logger.debug(f"Identidades de gauge {kind.value}: {report.verdict.value}")
    return report


def is_symmetric(matrix: SpinMatrix) -> bool:
    return matrix.equals(matrix.transpose())


def asymmetry_witness(matrix: SpinMatrix):
    """Primeira entrada (i, j) com M(i, j) ≠ M(j, i), ou None."""
    return matrix.first_mismatch(matrix.transpose())

