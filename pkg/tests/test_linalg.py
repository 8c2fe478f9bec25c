"""
Testes para Álgebra Linear
==========================

Testes dos índices X × (ℤ/2ℤ)² e das matrizes de spin.

Autor: Seu Nome
Data: 2025-09-20
"""

import sys
from pathlib import Path

import numpy as np
import pytest

# Adicionar o diretório raiz ao path
sys.path.append(str(Path(__file__).parent.parent))

from arithmetic import LaurentScalar, Monomial
from linalg import (
    ColumnVector,
    Index4k,
    SpinMatrix,
    block4,
    dump_matrix,
    hermitian_ip,
    index_arrays,
    lincomb,
    load_matrix,
    matmul,
    tau_permutation,
)
from models import build_model
from utils.exceptions import ShapeMismatch


class TestIndex4k:
    """
    Testes para Index4k.
    """

    def test_linearization(self):
        """Testa (x, α₁, α₂) ↦ (2α₁ + α₂)·k + x."""
        assert Index4k(2, 1, 0).linear(4) == 10
        assert Index4k(3, 1, 1).linear(4) == 15
        assert Index4k.from_linear(10, 4) == Index4k(2, 1, 0)

    def test_invalid_index(self):
        """Testa índices fora do intervalo."""
        with pytest.raises(ValueError):
            Index4k(0, 2, 0)
        with pytest.raises(ValueError):
            Index4k(4, 0, 0).linear(4)
        with pytest.raises(ValueError):
            Index4k.from_linear(16, 4)

    def test_tau(self):
        """Testa τ(α₁, α₂) = (α₁, α₁ + α₂)."""
        assert Index4k(1, 1, 0).tau() == Index4k(1, 1, 1)
        assert Index4k(1, 0, 1).tau() == Index4k(1, 0, 1)
        assert list(tau_permutation(2)) == [0, 1, 2, 3, 6, 7, 4, 5]

    def test_index_arrays(self):
        """Testa as componentes dos índices lineares."""
        x, alpha1, alpha2 = index_arrays(2)
        assert list(x) == [0, 1, 0, 1, 0, 1, 0, 1]
        assert list(alpha1) == [0, 0, 0, 0, 1, 1, 1, 1]
        assert list(alpha2) == [0, 0, 1, 1, 0, 0, 1, 1]


class TestSpinMatrix:
    """
    Testes para SpinMatrix e operações.
    """

    def test_identity_product(self):
        """Testa I·I = I."""
        identity = SpinMatrix.identity(3, 4)
        assert matmul(identity, identity) == identity

    def test_non_square_rejected(self):
        """Testa erro para matriz não quadrada."""
        with pytest.raises(ShapeMismatch):
            SpinMatrix.from_rows([[1, 0]], 4)

    def test_product_shape_mismatch(self):
        """Testa erro no produto com lados diferentes."""
        with pytest.raises(ShapeMismatch):
            matmul(SpinMatrix.identity(2, 4), SpinMatrix.identity(3, 4))

    def test_product_of_monomials(self):
        """Testa que ζ₈·I vezes ζ₈⁷·I é a identidade."""
        left = SpinMatrix.identity(2, 4).scaled(Monomial.zeta(1))
        right = SpinMatrix.identity(2, 4).scaled(Monomial.zeta(7))
        assert matmul(left, right) == SpinMatrix.identity(2, 4)

    def test_block4(self):
        """Testa montagem por blocos com blocos nulos."""
        identity = SpinMatrix.identity(2, 2)
        grid = [[identity if r == c else None for c in range(4)] for r in range(4)]
        assert block4(grid, 2) == SpinMatrix.identity(8, 2)
        assert block4(grid, 2).block(1, 1) == identity

    def test_block4_wrong_block(self):
        """Testa erro para bloco de lado errado."""
        grid = [[SpinMatrix.identity(3, 2)] * 4 for _ in range(4)]
        with pytest.raises(ShapeMismatch):
            block4(grid, 2)

    def test_transpose_and_conjugate(self):
        """Testa transposta e conjugada transposta."""
        matrix = SpinMatrix.from_rows([[1, Monomial(1, 1, 2)], [0, 1]], 4, label="M")
        assert matrix.transpose()[1, 0] == Monomial(1, 1, 2)
        assert matrix.transpose().label == "M^T"
        assert matrix.conj_transpose(True)[1, 0] == Monomial(1, 7, -2)

    def test_support(self):
        """Testa a máscara de suporte."""
        matrix = SpinMatrix.from_rows([[1, 0], [0, Monomial.zeta(3)]], 4)
        assert np.array_equal(matrix.support(), np.eye(2, dtype=bool))
        assert matrix.equal_support(SpinMatrix.identity(2, 4))
        assert not matrix.is_monomial()

    def test_lincomb(self):
        """Testa Σ c_i·M_i com relações inteiras."""
        eye = np.eye(2, dtype=np.int64)
        off = 1 - eye
        result = lincomb([Monomial.zeta(2), Monomial.one()], [eye, off], 4)
        assert result[0, 0] == Monomial.zeta(2)
        assert result[0, 1] == Monomial.one()
        with pytest.raises(ShapeMismatch):
            lincomb([Monomial.one()], [eye, off], 4)

    def test_hermitian_product(self):
        """Testa ⟨1, 1⟩ = n e ⟨v, v⟩ = n para v monomial."""
        ones = ColumnVector.ones(4)
        assert hermitian_ip(ones, ones, 4) == LaurentScalar.from_int(4, 4)
        v = ColumnVector(tuple(Monomial(1, a, 1) for a in range(4)))
        assert hermitian_ip(v, v, 4) == LaurentScalar.from_int(4, 4)

    @pytest.mark.parametrize("context", ["ctx4", "hybrid4"])
    def test_hermitian_symmetry_on_model_columns(self, context, h4, request):
        """Testa ⟨T, T′⟩ = conj⟨T′, T⟩ em colunas de W e W′ (u unitário e u real)."""
        ctx = request.getfixturevalue(context)
        inverts_u = ctx.u_inverts_under_conj
        columns = [
            model.column(j)
            for kind in ("W", "Wp")
            for model in [build_model(kind, h4, ctx)]
            for j in range(model.n)
        ]
        rng = np.random.default_rng(20240607)
        for _ in range(100):
            i, j = (int(x) for x in rng.integers(0, len(columns), size=2))
            forward = hermitian_ip(columns[i], columns[j], ctx.k, inverts_u)
            backward = hermitian_ip(columns[j], columns[i], ctx.k, inverts_u)
            assert forward == backward.conj(inverts_u)

    def test_first_mismatch(self):
        """Testa a primeira entrada divergente."""
        left = SpinMatrix.identity(3, 4)
        right = SpinMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 1, 1]], 4)
        assert left.first_mismatch(right) == (2, 1)

    def test_dump_and_load(self, tmp_path):
        """Testa gravação e leitura do formato {n, rows}."""
        matrix = SpinMatrix.from_rows([[Monomial(-1, 1, 3), 0], [1, Monomial.zeta(2)]], 4, label="M")
        path = dump_matrix(matrix, tmp_path / "m.json")
        assert load_matrix(path, 4) == matrix
