"""
Construção dos Modelos de Spin
==============================

Modelo de Potts A = u³I − u⁻¹(J − I) e as quatro matrizes 4k×4k
montadas por blocos a partir de uma matriz de Hadamard H:

- W:  blocos A, ±ωH, ±ωHᵀ (simétrico)
- W′: blocos A, ±ξH, ∓ξHᵀ (não simétrico)
- W̃:  W com ω = 1
- W̃′: blocos A, ±H, ±ιHᵀ com ι = −ξ²

Autor: Seu Nome
Data: 2025-09-20
"""

from enum import Enum
from typing import Callable, Dict, List, Optional

import numpy as np

from arithmetic import Monomial, ScalarContext
from hadamard import HadamardMatrix
from linalg import SpinMatrix, block4, lincomb
from schemes import build_distance_matrices
from utils.exceptions import IdentityFailed, OrderMismatch
from utils.logger import setup_logger

logger = setup_logger(__name__)


class ModelKind(str, Enum):
    """Tipos de matriz construídos pelo pacote."""

    W = "W"
    WPRIME = "Wprime"
    WTILDE = "Wtilde"
    WTILDE_PRIME = "WtildePrime"
    POTTS = "Potts"

    @classmethod
    def from_name(cls, name: str) -> "ModelKind":
        """
        Resolve nome ou apelido (W, Wp, Wt, Wtp, potts...).

        Raises:
            ValueError: Nome desconhecido
        """
        key = str(name).strip().lower()
        if key not in MODEL_ALIASES:
            available = ", ".join(sorted(MODEL_ALIASES))
            raise ValueError(f"Modelo '{name}' não suportado. Modelos disponíveis: {available}")
        return MODEL_ALIASES[key]


MODEL_ALIASES: Dict[str, ModelKind] = {
    "w": ModelKind.W,
    "wp": ModelKind.WPRIME,
    "wprime": ModelKind.WPRIME,
    "wt": ModelKind.WTILDE,
    "wtilde": ModelKind.WTILDE,
    "wtp": ModelKind.WTILDE_PRIME,
    "wtildeprime": ModelKind.WTILDE_PRIME,
    "potts": ModelKind.POTTS,
}

U_CUBE = Monomial.u_power(3)
MINUS_U_INV = Monomial.u_power(-1, -1)


def potts(ctx: ScalarContext) -> SpinMatrix:
    """
    Modelo de Potts k×k: diagonal u³, fora da diagonal −u⁻¹.

    Args:
        ctx: Contexto escalar (fixa k)
    """
    k = ctx.k
    rows = [[U_CUBE if i == j else MINUS_U_INV for j in range(k)] for i in range(k)]
    return SpinMatrix.from_rows(rows, k, ModelKind.POTTS.value)


def signed_block(signs: np.ndarray, factor: Monomial, k: int) -> SpinMatrix:
    """Bloco factor·S para uma matriz de sinais S."""
    negative = -factor
    rows = [[factor if s > 0 else negative for s in row] for row in signs]
    return SpinMatrix.from_rows(rows, k)


def _off_diagonal_blocks(matrix: HadamardMatrix, upper: Monomial, lower: Monomial, k: int):
    """Blocos (factor·H, −factor·H) e (factor·Hᵀ, −factor·Hᵀ)."""
    h = matrix.signs
    return (
        signed_block(h, upper, k), signed_block(-h, upper, k),
        signed_block(h.T, lower, k), signed_block(-h.T, lower, k),
    )


def _assemble(potts_block: SpinMatrix, matrix: HadamardMatrix, upper: Monomial,
              lower: Monomial, lower_flipped: bool, k: int, label: str) -> SpinMatrix:
    """
    Grade [[A, A, cH, −cH], [A, A, −cH, cH], [dHᵀ, −dHᵀ, A, A], [−dHᵀ, dHᵀ, A, A]].

    Com ``lower_flipped`` as duas últimas linhas de blocos trocam de sinal
    nos blocos de Hᵀ (caso de W′).
    """
    plus_h, minus_h, plus_ht, minus_ht = _off_diagonal_blocks(matrix, upper, lower, k)
    if lower_flipped:
        plus_ht, minus_ht = minus_ht, plus_ht
    a = potts_block
    grid = [
        [a, a, plus_h, minus_h],
        [a, a, minus_h, plus_h],
        [plus_ht, minus_ht, a, a],
        [minus_ht, plus_ht, a, a],
    ]
    return block4(grid, k, label)


def _build_w(matrix: HadamardMatrix, ctx: ScalarContext) -> SpinMatrix:
    omega = ctx.omega_monomial
    return _assemble(potts(ctx), matrix, omega, omega, False, ctx.k, ModelKind.W.value)


def _build_w_prime(matrix: HadamardMatrix, ctx: ScalarContext) -> SpinMatrix:
    xi = ctx.xi_monomial
    return _assemble(potts(ctx), matrix, xi, xi, True, ctx.k, ModelKind.WPRIME.value)


def _build_w_tilde(matrix: HadamardMatrix, ctx: ScalarContext) -> SpinMatrix:
    one = Monomial.one()
    return _assemble(potts(ctx), matrix, one, one, False, ctx.k, ModelKind.WTILDE.value)


def _build_w_tilde_prime(matrix: HadamardMatrix, ctx: ScalarContext) -> SpinMatrix:
    return _assemble(
        potts(ctx), matrix, Monomial.one(), ctx.iota, False, ctx.k, ModelKind.WTILDE_PRIME.value
    )


_builders: Dict[ModelKind, Callable[[HadamardMatrix, ScalarContext], SpinMatrix]] = {
    ModelKind.W: _build_w,
    ModelKind.WPRIME: _build_w_prime,
    ModelKind.WTILDE: _build_w_tilde,
    ModelKind.WTILDE_PRIME: _build_w_tilde_prime,
}


def expansion(kind: ModelKind, matrix: HadamardMatrix, ctx: ScalarContext) -> Optional[SpinMatrix]:
    """
    Expansão na base de relações, quando existe:

    W = u³A₀ + ωA₁ − u⁻¹A₂ − ωA₃ + u³A₄ e
    W′ = u³A₀ + ξA′₁ − u⁻¹A₂ − ξA′₃ + u³A₄ (W̃ usa ω = 1).
    """
    distances = build_distance_matrices(matrix)
    if kind in (ModelKind.W, ModelKind.WTILDE):
        coeff = ctx.omega_monomial if kind == ModelKind.W else Monomial.one()
        names = ["A0", "A1", "A2", "A3", "A4"]
    elif kind == ModelKind.WPRIME:
        coeff = ctx.xi_monomial
        names = ["A0", "A1p", "A2", "A3p", "A4"]
    else:
        return None
    coeffs = [U_CUBE, coeff, MINUS_U_INV, -coeff, U_CUBE]
    return lincomb(coeffs, [distances[name] for name in names], ctx.k, f"{kind.value}.expansion")


def build_model(
    kind, matrix: Optional[HadamardMatrix], ctx: ScalarContext, check_expansion: bool = True
) -> SpinMatrix:
    """
    Constrói o modelo pedido.

    Args:
        kind: ModelKind ou nome/apelido
        matrix: Matriz de Hadamard de ordem ctx.k (ignorada para Potts)
        ctx: Contexto escalar
        check_expansion: Confere a expansão na base de relações

    Returns:
        SpinMatrix rotulada com o tipo

    Raises:
        OrderMismatch: Ordem de H diferente de ctx.k
        IdentityFailed: Expansão diverge da montagem por blocos
    """
    kind = kind if isinstance(kind, ModelKind) else ModelKind.from_name(kind)
    if kind == ModelKind.POTTS:
        return potts(ctx)

    if matrix.k != ctx.k:
        raise OrderMismatch("Ordem de H diferente de k", order=matrix.k, k=ctx.k)

    model = _builders[kind](matrix, ctx)

    if check_expansion:
        expected = expansion(kind, matrix, ctx)
        if expected is not None:
            mismatch = model.first_mismatch(expected)
            if mismatch is not None:
                i, j = mismatch
                raise IdentityFailed(
                    f"Expansão de {kind.value} diverge dos blocos",
                    entry=mismatch, block=str(model[i, j]), expansion=str(expected[i, j]),
                )

    logger.debug(f"Modelo {kind.value} construído (k={ctx.k}, lado {model.n})")
    return model


def available_models() -> List[str]:
    """Nomes aceitos por ``ModelKind.from_name``."""
    return list(MODEL_ALIASES.keys())
